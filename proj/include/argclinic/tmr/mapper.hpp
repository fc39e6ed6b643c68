#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "argclinic/aba/framework.hpp"
#include "argclinic/aba/goals.hpp"
#include "argclinic/aba/semantics.hpp"
#include "argclinic/tmr/model.hpp"

namespace argclinic::tmr {

struct MapperOptions {
  // Same-sign interactions get symmetric unconditional contradiction rules;
  // when false they are rejected with OrientationError.
  bool symmetric_same_sign = true;
};

// Traceability of the generated framework.
struct MappingReport {
  std::size_t action_pos = 0;       // action <- rec (ds >= 0)
  std::size_t action_neg = 0;       // ¬action <- rec (ds < 0)
  std::size_t effect_pos = 0;       // e p <- action
  std::size_t effect_neg = 0;       // ¬e p <- ¬action
  std::size_t state_facts = 0;
  std::size_t contradiction_pos = 0;
  std::size_t contradiction_neg = 0;
  std::size_t interaction_facts = 0;
  std::vector<std::string> assumptions;
  // (kind, TMR term) -> sentence symbol
  std::map<std::pair<std::string, std::string>, std::string> symbols;
  std::vector<std::string> same_sign_interactions;
  std::vector<std::string> warnings;
};

struct PatientFramework {
  aba::GoalFramework framework;
  MappingReport report;
  std::set<std::string> recommendation_names;
};

inline std::string interaction_token(const Interaction& i) {
  return "int_" + i.first + "_" + i.second;
}

inline std::string negate(const std::string& s) { return std::string(kNegation) + s; }

namespace detail {

class SymbolTable {
 public:
  explicit SymbolTable(MappingReport& report) : report_(report) {}

  aba::Sentence operator()(const std::string& kind, const std::string& term) {
    const std::string& symbol = term;
    auto [it, inserted] = owner_.emplace(symbol, std::make_pair(kind, term));
    if (!inserted && it->second != std::make_pair(kind, term)) {
      throw Error(ErrorKind::SymbolClash, "the " + kind + " '" + term + "' and the " +
                                              it->second.first + " '" + it->second.second +
                                              "' map to the same sentence");
    }
    report_.symbols[{kind, term}] = symbol;
    return aba::Sentence(symbol);
  }

 private:
  MappingReport& report_;
  std::map<std::string, std::pair<std::string, std::string>> owner_;
};

}  // namespace detail

// Compiles recommendations, interactions and patient context into the ABA+G
// patient framework.
inline PatientFramework build_patient_framework(const std::vector<Recommendation>& recs,
                                                const std::vector<Interaction>& ints,
                                                const Context& raw_ctx,
                                                const MapperOptions& opts = {}) {
  std::set<std::string> names;
  for (const auto& r : recs) {
    validate_recommendation(r);
    if (!names.insert(r.name).second) {
      throw Error(ErrorKind::DuplicateName, "recommendation '" + r.name + "' declared twice");
    }
  }
  validate_interactions(recs, ints);
  ValidatedContext ctx;
  try {
    ctx = validate_context(raw_ctx, recs);
  } catch (const Error& e) {
    throw Error(ErrorKind::IncompatibleContext, std::string(to_string(e.kind())) + ": " + e.detail());
  }

  PatientFramework out;
  out.recommendation_names = names;
  MappingReport& report = out.report;
  detail::SymbolTable sym(report);
  aba::RawFramework raw;

  std::set<aba::Rule> seen_rules;
  auto add_rule = [&](aba::Sentence head, std::vector<aba::Sentence> body, std::size_t& counter) {
    aba::Rule rule(std::move(head), std::move(body));
    if (seen_rules.insert(rule).second) {
      raw.rules.push_back(rule);
      ++counter;
    }
  };

  for (const auto& r : recs) {
    auto name = sym("recommendation", r.name);
    raw.assumptions.push_back(name);
    raw.contraries.emplace_back(name, sym("contrary", aba::fresh_contrary_name(name)));
  }

  for (const auto& r : recs) {
    auto name = sym("recommendation", r.name);
    if (r.ds.recommends_action()) {
      auto act = sym("action", r.action);
      add_rule(act, {name}, report.action_pos);
      for (const auto& t : r.tracks) {
        add_rule(sym("effect", t.effect_term()), {act}, report.effect_pos);
      }
    } else {
      auto not_act = sym("negated action", negate(r.action));
      add_rule(not_act, {name}, report.action_neg);
      for (const auto& t : r.tracks) {
        add_rule(sym("negated effect", negate(t.effect_term())), {not_act}, report.effect_neg);
      }
    }
  }

  for (const auto& s : ctx.state) add_rule(sym("condition", s), {}, report.state_facts);

  for (const auto& i : ints) {
    const Recommendation& first = *find_recommendation(recs, i.first);
    const Recommendation& second = *find_recommendation(recs, i.second);
    auto token = sym("interaction", interaction_token(i));
    if (i.modal == Modal::Possible) {
      raw.assumptions.push_back(token);
      raw.contraries.emplace_back(token, sym("contrary", aba::fresh_contrary_name(token)));
    } else {
      add_rule(token, {}, report.interaction_facts);
    }
    auto contrary_of = [&](const Recommendation& r) {
      return sym("contrary", aba::fresh_contrary_name(aba::Sentence(r.name)));
    };

    const bool first_pos = first.ds.recommends_action();
    const bool second_pos = second.ds.recommends_action();
    if (first_pos == second_pos) {
      if (!opts.symmetric_same_sign) {
        throw Error(ErrorKind::OrientationError,
                    "interaction (" + i.first + ", " + i.second +
                        ") joins two recommendations of the same deontic sign");
      }
      report.same_sign_interactions.push_back(interaction_token(i));
      add_rule(contrary_of(second), {sym("recommendation", first.name), token},
               report.contradiction_pos);
      add_rule(contrary_of(first), {sym("recommendation", second.name), token},
               report.contradiction_pos);
      continue;
    }
    const Recommendation& pos = first_pos ? first : second;
    const Recommendation& neg = first_pos ? second : first;
    add_rule(contrary_of(neg), {sym("recommendation", pos.name), token}, report.contradiction_pos);
    for (const auto& t : neg.tracks) {
      if (t.contribution != Contribution::Negative) continue;
      add_rule(contrary_of(pos),
               {sym("recommendation", neg.name), token, sym("condition", t.condition_term())},
               report.contradiction_neg);
    }
  }

  for (const auto& [a, b] : ctx.rec_preferences) {
    raw.preferences.emplace_back(aba::Sentence(a), aba::Sentence(b));
  }

  aba::Framework base = aba::validate_framework(raw);
  for (const auto& a : base.assumptions()) report.assumptions.push_back(a.str());

  std::vector<aba::Sentence> goals;
  std::map<std::string, aba::Sentence> goal_sentence;
  std::set<aba::Sentence> heads;
  for (const auto& r : base.rules()) heads.insert(r.head);
  const auto reachable = aba::conclusions(base, base.all());
  for (const auto& g : ctx.goals) {
    auto s = g.negated ? sym("negated effect", g.str()) : sym("effect", g.str());
    if (!heads.count(s)) {
      throw Error(ErrorKind::IncompatibleContext,
                  "goal '" + g.str() + "' heads no generated rule" +
                      (g.negated ? "" : "; effects of advised-against actions need the negated form"));
    }
    if (!reachable.count(s)) report.warnings.push_back("goal '" + g.str() + "' can never be concluded");
    goals.push_back(s);
    goal_sentence.emplace(g.str(), s);
  }
  std::vector<std::pair<aba::Sentence, aba::Sentence>> priority;
  for (const auto& [x, y] : ctx.priorities) {
    priority.emplace_back(goal_sentence.at(x), goal_sentence.at(y));
  }
  out.framework = aba::validate_abapg(std::move(base), std::move(goals), priority);
  return out;
}

struct FollowedRecommendation {
  std::string name;
  std::string action;
  bool avoid = false;  // recommendation advises against the action
};

struct TopChoice {
  aba::GoalExtension goals;
  aba::AssumptionSet source;
  std::vector<FollowedRecommendation> follow;
  std::vector<std::string> actions;  // action / ¬action conclusions
};

struct Solution {
  PatientFramework patient;
  aba::Family preferred;
  std::vector<std::vector<std::string>> preferred_recommendations;
  std::vector<aba::GoalExtension> goal_extensions;
  std::vector<aba::GoalExtension> top;
  std::vector<TopChoice> choices;  // one per top source extension
};

inline Solution resolve(const std::vector<Recommendation>& recs, const std::vector<Interaction>& ints,
                        const Context& ctx, const aba::EnumerationOptions& enum_opts = {},
                        const MapperOptions& map_opts = {}) {
  Solution out{build_patient_framework(recs, ints, ctx, map_opts), {}, {}, {}, {}, {}};
  const auto& fg = out.patient.framework;
  const auto& base = fg.base;
  out.preferred = aba::preferred_extensions(base, enum_opts);
  for (auto e : out.preferred) {
    std::vector<std::string> names;
    for (const auto& s : base.members(e)) {
      if (out.patient.recommendation_names.count(s.str())) names.push_back(s.str());
    }
    out.preferred_recommendations.push_back(std::move(names));
  }
  out.goal_extensions = aba::goal_extensions(fg, out.preferred);
  out.top = aba::maximal_goal_extensions(out.goal_extensions, fg.priority);

  std::set<std::string> action_symbols;
  for (const auto& r : recs) {
    action_symbols.insert(r.ds.recommends_action() ? r.action : negate(r.action));
  }
  for (const auto& g : out.top) {
    for (auto source : g.sources) {
      TopChoice choice{g, source, {}, {}};
      for (const auto& s : base.members(source)) {
        if (const auto* r = find_recommendation(recs, s.str())) {
          choice.follow.push_back({r->name, r->action, !r->ds.recommends_action()});
        }
      }
      for (const auto& c : aba::conclusions(base, source)) {
        if (action_symbols.count(c.str())) choice.actions.push_back(c.str());
      }
      out.choices.push_back(std::move(choice));
    }
  }
  return out;
}

}  // namespace argclinic::tmr
