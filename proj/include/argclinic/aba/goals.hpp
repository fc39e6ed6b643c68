#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "argclinic/aba/framework.hpp"
#include "argclinic/aba/semantics.hpp"

namespace argclinic::aba {

// Total preorder over goals; (x, y) in the relation means y is at least as
// important as x.
class PriorityPreorder {
 public:
  PriorityPreorder() = default;

  // Closes `pairs` reflexively and transitively over `goals`. Totality is
  // checked, never invented.
  PriorityPreorder(std::vector<Sentence> goals,
                   const std::vector<std::pair<Sentence, Sentence>>& pairs)
      : goals_(std::move(goals)) {
    std::sort(goals_.begin(), goals_.end());
    goals_.erase(std::unique(goals_.begin(), goals_.end()), goals_.end());
    const std::size_t n = goals_.size();
    leq_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = true;
    for (const auto& [x, y] : pairs) {
      auto ix = index_of(x);
      auto iy = index_of(y);
      if (!ix || !iy) {
        throw Error(ErrorKind::PriorityMentionsNonGoal,
                    "priority '" + x.str() + " <= " + y.str() + "' mentions a non-goal");
      }
      leq_[*ix * n + *iy] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!leq_[i * n + k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (leq_[k * n + j]) leq_[i * n + j] = true;
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!leq_[i * n + j] && !leq_[j * n + i]) {
          throw Error(ErrorKind::PriorityNotTotal,
                      "goals '" + goals_[i].str() + "' and '" + goals_[j].str() +
                          "' are not comparable");
        }
      }
    }
  }

  const std::vector<Sentence>& goals() const noexcept { return goals_; }

  std::optional<std::size_t> index_of(const Sentence& g) const {
    auto it = std::lower_bound(goals_.begin(), goals_.end(), g);
    if (it == goals_.end() || *it != g) return std::nullopt;
    return static_cast<std::size_t>(it - goals_.begin());
  }

  bool leq(const Sentence& x, const Sentence& y) const {
    auto ix = index_of(x);
    auto iy = index_of(y);
    return ix && iy && leq_[*ix * goals_.size() + *iy];
  }
  bool strict(const Sentence& x, const Sentence& y) const {
    return leq(x, y) && !leq(y, x);
  }

  // Non-reflexive pairs of the closed relation.
  std::vector<std::pair<Sentence, Sentence>> pairs() const {
    std::vector<std::pair<Sentence, Sentence>> out;
    for (std::size_t i = 0; i < goals_.size(); ++i) {
      for (std::size_t j = 0; j < goals_.size(); ++j) {
        if (i != j && leq_[i * goals_.size() + j]) out.emplace_back(goals_[i], goals_[j]);
      }
    }
    return out;
  }

  friend bool operator==(const PriorityPreorder&, const PriorityPreorder&) = default;

 private:
  std::vector<Sentence> goals_;
  std::vector<bool> leq_;
};

// An ABA+ framework together with goals and their priorities.
struct GoalFramework {
  Framework base;
  PriorityPreorder priority;

  const std::vector<Sentence>& goals() const noexcept { return priority.goals(); }

  friend bool operator==(const GoalFramework&, const GoalFramework&) = default;
};

inline GoalFramework validate_abapg(Framework base, std::vector<Sentence> goals,
                                    const std::vector<std::pair<Sentence, Sentence>>& priority) {
  std::set<Sentence> heads;
  for (const auto& r : base.rules()) heads.insert(r.head);
  for (const auto& g : goals) {
    if (!heads.count(g)) {
      throw Error(ErrorKind::GoalWithoutRule, "goal '" + g.str() + "' heads no rule");
    }
  }
  return GoalFramework{std::move(base), PriorityPreorder(std::move(goals), priority)};
}

// Goals concluded by one or more preferred extensions.
struct GoalExtension {
  std::vector<AssumptionSet> sources;  // lexicographically sorted
  std::set<Sentence> achieved;

  friend bool operator==(const GoalExtension&, const GoalExtension&) = default;
};

inline GoalExtension goal_extension(const GoalFramework& fg, AssumptionSet e) {
  GoalExtension out;
  out.sources.push_back(e);
  const auto cn = conclusions(fg.base, e);
  for (const auto& g : fg.goals()) {
    if (cn.count(g)) out.achieved.insert(g);
  }
  return out;
}

// GA <= GB: equal sets are equivalent; otherwise some goal reached only by B
// is at least as important as every goal reached only by A.
inline bool goal_order_leq(const std::set<Sentence>& a, const std::set<Sentence>& b,
                           const PriorityPreorder& priority) {
  if (a == b) return true;
  std::vector<Sentence> only_a;
  std::vector<Sentence> only_b;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
  return std::any_of(only_b.begin(), only_b.end(), [&](const Sentence& theta) {
    return std::all_of(only_a.begin(), only_a.end(),
                       [&](const Sentence& chi) { return priority.leq(chi, theta); });
  });
}

inline bool goal_order_leq(const GoalExtension& a, const GoalExtension& b,
                           const PriorityPreorder& priority) {
  return goal_order_leq(a.achieved, b.achieved, priority);
}

inline bool goal_order_strict(const GoalExtension& a, const GoalExtension& b,
                              const PriorityPreorder& priority) {
  return goal_order_leq(a, b, priority) && !goal_order_leq(b, a, priority);
}

// One goal extension per distinct achieved set, each carrying all of its
// source extensions; ordered by the sorted goal symbols.
inline std::vector<GoalExtension> goal_extensions(const GoalFramework& fg,
                                                  const Family& preferred) {
  std::map<std::set<Sentence>, std::vector<AssumptionSet>> grouped;
  for (auto e : preferred) {
    grouped[goal_extension(fg, e).achieved].push_back(e);
  }
  std::vector<GoalExtension> out;
  for (auto& [achieved, sources] : grouped) {
    sort_lexicographic(sources);
    out.push_back(GoalExtension{std::move(sources), achieved});
  }
  return out;
}

// Goal extensions with no strictly better goal extension.
inline std::vector<GoalExtension> maximal_goal_extensions(
    const std::vector<GoalExtension>& all, const PriorityPreorder& priority) {
  std::vector<GoalExtension> out;
  for (const auto& g : all) {
    const bool dominated = std::any_of(all.begin(), all.end(), [&](const GoalExtension& other) {
      return goal_order_strict(g, other, priority);
    });
    if (!dominated) out.push_back(g);
  }
  return out;
}

inline std::vector<GoalExtension> top_goal_extensions(const GoalFramework& fg,
                                                      const EnumerationOptions& opts = {}) {
  return maximal_goal_extensions(goal_extensions(fg, preferred_extensions(fg.base, opts)),
                                 fg.priority);
}

}  // namespace argclinic::aba
