#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argclinic/error.hpp"

namespace argclinic::tmr {

// Exact rational in [-1, 1] with denominator at most 1000.
class DeonticStrength {
 public:
  static constexpr std::int64_t kMaxDenominator = 1000;

  DeonticStrength() = default;

  static DeonticStrength from_ratio(std::int64_t num, std::int64_t den) {
    if (den <= 0 || den > kMaxDenominator) {
      throw Error(ErrorKind::DsOutOfRange, "denominator must lie in [1, 1000]");
    }
    const auto g = std::gcd(num, den);
    DeonticStrength ds(num / g, den / g);
    if (ds.num_ < -ds.den_ || ds.num_ > ds.den_) {
      throw Error(ErrorKind::DsOutOfRange,
                  "deontic strength " + ds.to_string() + " is outside [-1, 1]");
    }
    return ds;
  }

  // Closest rational with denominator <= 1000; the input must be exactly
  // representable up to floating-point noise.
  static DeonticStrength from_double(double value) {
    if (!std::isfinite(value) || value < -1.0 - 1e-12 || value > 1.0 + 1e-12) {
      throw Error(ErrorKind::DsOutOfRange,
                  "deontic strength " + std::to_string(value) + " is outside [-1, 1]");
    }
    for (std::int64_t den = 1; den <= kMaxDenominator; ++den) {
      const double scaled = value * static_cast<double>(den);
      const double rounded = std::round(scaled);
      if (std::abs(scaled - rounded) < 1e-9 * static_cast<double>(den)) {
        return from_ratio(static_cast<std::int64_t>(rounded), den);
      }
    }
    throw Error(ErrorKind::DsOutOfRange, "deontic strength " + std::to_string(value) +
                                             " is not a rational with denominator <= 1000");
  }

  static DeonticStrength from_landmark(std::string_view name) {
    for (const auto& [landmark, num, den] : kLandmarks) {
      if (name == landmark) return DeonticStrength(num, den);
    }
    throw Error(ErrorKind::UnknownLandmark, "unknown deontic landmark '" + std::string(name) + "'");
  }

  std::optional<std::string_view> landmark() const {
    for (const auto& [landmark, num, den] : kLandmarks) {
      if (num == num_ && den == den_) return landmark;
    }
    return std::nullopt;
  }

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool recommends_action() const noexcept { return num_ >= 0; }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const DeonticStrength&, const DeonticStrength&) = default;

 private:
  struct Landmark {
    std::string_view name;
    std::int64_t num;
    std::int64_t den;
  };
  static constexpr Landmark kLandmarks[] = {
      {"must", 1, 1},          {"should", 1, 2},   {"may", 0, 1},
      {"should_not", -1, 2},   {"must_not", -1, 1},
  };

  DeonticStrength(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

enum class Contribution { Positive, Negative, Neutral };

inline std::string_view to_string(Contribution c) {
  switch (c) {
    case Contribution::Positive: return "+";
    case Contribution::Negative: return "-";
    case Contribution::Neutral: return "0";
  }
  return "0";
}

inline std::optional<Contribution> parse_contribution(std::string_view s) {
  if (s == "+") return Contribution::Positive;
  if (s == "-" || s == "−") return Contribution::Negative;
  if (s == "0" || s.empty()) return Contribution::Neutral;
  return std::nullopt;
}

// One affected property with the action's effect on it.
struct Track {
  std::string property;
  std::string effect;
  std::optional<std::string> initial_value;  // nullopt: indeterminate (?)
  Contribution contribution = Contribution::Neutral;

  // Condition term used for patient state: "value property", or the bare
  // property when the value is indeterminate.
  std::string condition_term() const {
    return initial_value ? *initial_value + " " + property : property;
  }
  std::string effect_term() const { return effect + " " + property; }

  friend bool operator==(const Track&, const Track&) = default;
};

struct Recommendation {
  std::string name;
  std::string action;
  DeonticStrength ds;
  std::vector<Track> tracks;

  friend bool operator==(const Recommendation&, const Recommendation&) = default;
};

enum class Modal { Necessary, Possible };  // box / diamond

struct Interaction {
  std::string first;
  std::string second;
  Modal modal = Modal::Necessary;

  friend bool operator==(const Interaction&, const Interaction&) = default;
};

inline constexpr std::string_view kNegation = "¬";

// A goal: an effect term, optionally negated (desire to avoid the effect).
struct GoalTerm {
  bool negated = false;
  std::string effect_term;

  std::string str() const {
    return negated ? std::string(kNegation) + effect_term : effect_term;
  }
  static GoalTerm parse(const std::string& text) {
    if (text.rfind(kNegation, 0) == 0) {
      return GoalTerm{true, text.substr(kNegation.size())};
    }
    return GoalTerm{false, text};
  }
  friend auto operator<=>(const GoalTerm&, const GoalTerm&) = default;
  friend bool operator==(const GoalTerm&, const GoalTerm&) = default;
};

struct Context {
  std::vector<std::string> state;  // condition terms
  std::vector<GoalTerm> goals;
  // (x, y): y is at least as preferred as x; names of recommendations or actions
  std::vector<std::pair<std::string, std::string>> preferences;
  // (g, h): h is at least as important as g; goal strings
  std::vector<std::pair<std::string, std::string>> priorities;

  friend bool operator==(const Context&, const Context&) = default;
};

// Context after validation: preferences resolved to recommendation names and
// closed; priority checked total.
struct ValidatedContext {
  std::vector<std::string> state;
  std::vector<GoalTerm> goals;
  std::vector<std::pair<std::string, std::string>> rec_preferences;  // closed, non-reflexive
  std::vector<std::pair<std::string, std::string>> priorities;       // closed, non-reflexive
};

inline Recommendation validate_recommendation(Recommendation rec) {
  if (rec.name.empty()) throw Error(ErrorKind::SchemaError, "recommendation without a name");
  if (rec.action.empty()) {
    throw Error(ErrorKind::SchemaError, "recommendation '" + rec.name + "' has no action");
  }
  if (rec.tracks.empty()) {
    throw Error(ErrorKind::EmptyTracks, "recommendation '" + rec.name + "' affects no property");
  }
  if (rec.ds.numerator() < -rec.ds.denominator() || rec.ds.numerator() > rec.ds.denominator()) {
    throw Error(ErrorKind::DsOutOfRange, "recommendation '" + rec.name + "'");
  }
  for (const auto& t : rec.tracks) {
    if (t.property.empty() || t.effect.empty()) {
      throw Error(ErrorKind::SchemaError,
                  "recommendation '" + rec.name + "' has a track without property or effect");
    }
  }
  return rec;
}

inline const Recommendation* find_recommendation(const std::vector<Recommendation>& recs,
                                                 std::string_view name) {
  auto it = std::find_if(recs.begin(), recs.end(),
                         [&](const Recommendation& r) { return r.name == name; });
  return it == recs.end() ? nullptr : &*it;
}

inline void validate_interactions(const std::vector<Recommendation>& recs,
                                  const std::vector<Interaction>& ints) {
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& i : ints) {
    if (!find_recommendation(recs, i.first) || !find_recommendation(recs, i.second)) {
      throw Error(ErrorKind::UnknownRecommendation,
                  "interaction (" + i.first + ", " + i.second + ") names an unknown recommendation");
    }
    if (i.first == i.second) {
      throw Error(ErrorKind::OrientationError,
                  "interaction of '" + i.first + "' with itself");
    }
    if (!seen.emplace(i.first, i.second).second) {
      throw Error(ErrorKind::DuplicateName,
                  "interaction (" + i.first + ", " + i.second + ") declared twice");
    }
  }
}

// No interaction has both endpoints in `names`.
inline bool contradiction_free(const std::set<std::string>& names,
                               const std::vector<Interaction>& ints) {
  return std::none_of(ints.begin(), ints.end(), [&](const Interaction& i) {
    return names.count(i.first) && names.count(i.second);
  });
}

namespace detail {

inline std::vector<std::pair<std::string, std::string>> close_preorder(
    const std::vector<std::string>& carrier,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  const std::size_t n = carrier.size();
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[carrier[i]] = i;
  std::vector<bool> leq(n * n, false);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = true;
  for (const auto& [a, b] : pairs) leq[idx.at(a) * n + idx.at(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = true;
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq[i * n + j]) out.emplace_back(carrier[i], carrier[j]);
  return out;
}

// A preference side names a recommendation, or an action standing for every
// recommendation bearing it.
inline std::vector<std::string> resolve_preference_side(const std::vector<Recommendation>& recs,
                                                        const std::string& side) {
  if (find_recommendation(recs, side)) return {side};
  std::vector<std::string> out;
  bool positive = false;
  bool negative = false;
  for (const auto& r : recs) {
    if (r.action != side) continue;
    out.push_back(r.name);
    (r.ds.recommends_action() ? positive : negative) = true;
  }
  if (out.empty()) {
    throw Error(ErrorKind::PreferenceOverUnknownRec,
                "preference names '" + side + "', which is neither a recommendation nor an action");
  }
  if (positive && negative) {
    throw Error(ErrorKind::AmbiguousActionPreference,
                "action '" + side + "' is both recommended and advised against");
  }
  return out;
}

}  // namespace detail

inline ValidatedContext validate_context(const Context& ctx, const std::vector<Recommendation>& recs) {
  ValidatedContext out;

  std::set<std::string> conditions;
  std::set<std::string> properties;
  std::set<std::string> effects;
  for (const auto& r : recs) {
    for (const auto& t : r.tracks) {
      conditions.insert(t.condition_term());
      properties.insert(t.property);
      effects.insert(t.effect_term());
    }
  }

  std::set<std::string> state_seen;
  for (const auto& s : ctx.state) {
    if (!conditions.count(s) && !properties.count(s)) {
      throw Error(ErrorKind::IncompatibleState,
                  "state term '" + s + "' matches no property of any recommendation");
    }
    if (state_seen.insert(s).second) out.state.push_back(s);
  }

  std::set<GoalTerm> goal_seen;
  for (const auto& g : ctx.goals) {
    if (!effects.count(g.effect_term)) {
      throw Error(ErrorKind::IncompatibleGoal,
                  "goal '" + g.str() + "' matches no effect of any recommendation");
    }
    if (goal_seen.insert(g).second) out.goals.push_back(g);
  }

  std::vector<std::string> rec_names;
  for (const auto& r : recs) rec_names.push_back(r.name);
  std::vector<std::pair<std::string, std::string>> rec_pairs;
  for (const auto& [x, y] : ctx.preferences) {
    for (const auto& rx : detail::resolve_preference_side(recs, x)) {
      for (const auto& ry : detail::resolve_preference_side(recs, y)) {
        rec_pairs.emplace_back(rx, ry);
      }
    }
  }
  out.rec_preferences = detail::close_preorder(rec_names, rec_pairs);

  std::vector<std::string> goal_names;
  for (const auto& g : out.goals) goal_names.push_back(g.str());
  std::set<std::string> goal_lookup(goal_names.begin(), goal_names.end());
  for (const auto& [x, y] : ctx.priorities) {
    if (!goal_lookup.count(x) || !goal_lookup.count(y)) {
      throw Error(ErrorKind::PriorityMentionsNonGoal,
                  "priority (" + x + ", " + y + ") mentions a non-goal");
    }
  }
  out.priorities = detail::close_preorder(goal_names, ctx.priorities);
  std::set<std::pair<std::string, std::string>> closed(out.priorities.begin(), out.priorities.end());
  for (std::size_t i = 0; i < goal_names.size(); ++i) {
    for (std::size_t j = i + 1; j < goal_names.size(); ++j) {
      if (!closed.count({goal_names[i], goal_names[j]}) &&
          !closed.count({goal_names[j], goal_names[i]})) {
        throw Error(ErrorKind::PriorityNotTotal,
                    "goals '" + goal_names[i] + "' and '" + goal_names[j] + "' are not comparable");
      }
    }
  }
  return out;
}

}  // namespace argclinic::tmr
