#pragma once

#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "argclinic/aba/framework.hpp"
#include "argclinic/aba/goals.hpp"
#include "argclinic/aba/semantics.hpp"
#include "argclinic/tmr/mapper.hpp"

// Rendering of results as deterministic text or key-sorted JSON.
namespace argclinic::io {

using nlohmann::json;

template <typename Range>
std::string braced(const Range& items) {
  std::string out = "{";
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += ", ";
    first = false;
    if constexpr (std::is_same_v<std::decay_t<decltype(item)>, aba::Sentence>) {
      out += item.str();
    } else {
      out += item;
    }
  }
  return out + "}";
}

inline std::string format_set(const aba::Framework& f, aba::AssumptionSet s) {
  return braced(f.members(s));
}

inline std::string format_rule_arrow(const aba::Rule& r) {
  std::string out = r.head.str() + " ← ";
  if (r.body.empty()) return out + "⊤";
  for (std::size_t i = 0; i < r.body.size(); ++i) {
    if (i) out += ", ";
    out += r.body[i].str();
  }
  return out;
}

inline json symbols_json(const aba::Framework& f, aba::AssumptionSet s) {
  json out = json::array();
  for (const auto& m : f.members(s)) out.push_back(m.str());
  return out;
}

inline json sentences_json(const std::set<aba::Sentence>& s) {
  json out = json::array();
  for (const auto& m : s) out.push_back(m.str());
  return out;
}

inline json goal_extension_json(const aba::Framework& f, const aba::GoalExtension& g) {
  json sources = json::array();
  for (auto s : g.sources) sources.push_back(symbols_json(f, s));
  return {{"goals", sentences_json(g.achieved)}, {"sources", std::move(sources)}};
}

struct FrameworkResult {
  aba::Family preferred;
  std::vector<aba::GoalExtension> goal_extensions;
  std::vector<aba::GoalExtension> top;
};

inline FrameworkResult solve_framework(const aba::Framework& f,
                                       const std::optional<aba::PriorityPreorder>& priority,
                                       const aba::EnumerationOptions& opts) {
  FrameworkResult out;
  out.preferred = aba::preferred_extensions(f, opts);
  if (priority) {
    aba::GoalFramework fg{f, *priority};
    out.goal_extensions = aba::goal_extensions(fg, out.preferred);
    out.top = aba::maximal_goal_extensions(out.goal_extensions, *priority);
  }
  return out;
}

inline void write_extensions_text(std::ostream& os, const aba::Framework& f,
                                  const FrameworkResult& r, bool has_goals) {
  os << "preferred extensions:\n";
  for (auto e : r.preferred) os << "  " << format_set(f, e) << "\n";
  if (!has_goals) return;
  os << "goal extensions:\n";
  for (const auto& g : r.goal_extensions) {
    for (auto s : g.sources) os << "  " << format_set(f, s) << ": " << braced(g.achieved) << "\n";
  }
  os << "top goal extensions:\n";
  for (const auto& g : r.top) {
    os << "  " << braced(g.achieved) << " from ";
    for (std::size_t i = 0; i < g.sources.size(); ++i) {
      if (i) os << ", ";
      os << format_set(f, g.sources[i]);
    }
    os << "\n";
  }
}

inline json framework_result_json(const aba::Framework& f, const FrameworkResult& r,
                                  bool has_goals) {
  json out = json::object();
  json pref = json::array();
  for (auto e : r.preferred) pref.push_back(symbols_json(f, e));
  out["preferred_extensions"] = std::move(pref);
  if (has_goals) {
    json all = json::array();
    for (const auto& g : r.goal_extensions) all.push_back(goal_extension_json(f, g));
    json top = json::array();
    for (const auto& g : r.top) top.push_back(goal_extension_json(f, g));
    out["goal_extensions"] = std::move(all);
    out["top_goal_extensions"] = std::move(top);
  }
  return out;
}

inline std::string follow_line(const tmr::TopChoice& c) {
  std::string out = "FOLLOW: ";
  for (std::size_t i = 0; i < c.follow.size(); ++i) {
    if (i) out += ", ";
    const auto& f = c.follow[i];
    out += f.name + " (" + (f.avoid ? "avoid " : "") + f.action + ")";
  }
  if (c.follow.empty()) out += "(no recommendation)";
  return out;
}

inline void write_solution_text(std::ostream& os, const tmr::Solution& s) {
  const auto& f = s.patient.framework.base;
  FrameworkResult r{s.preferred, s.goal_extensions, s.top};
  write_extensions_text(os, f, r, true);
  os << "recommended actions:\n";
  for (const auto& c : s.choices) {
    os << "  " << format_set(f, c.source) << ": ";
    for (std::size_t i = 0; i < c.actions.size(); ++i) {
      if (i) os << ", ";
      os << c.actions[i];
    }
    os << "\n";
  }
  for (const auto& c : s.choices) os << follow_line(c) << "\n";
}

inline json solution_json(const tmr::Solution& s) {
  const auto& f = s.patient.framework.base;
  json out = framework_result_json(f, FrameworkResult{s.preferred, s.goal_extensions, s.top}, true);
  json recs = json::array();
  for (const auto& names : s.preferred_recommendations) recs.push_back(names);
  out["preferred_recommendations"] = std::move(recs);
  json follow = json::array();
  for (const auto& c : s.choices) {
    json followed = json::array();
    for (const auto& fr : c.follow) {
      followed.push_back({{"name", fr.name}, {"action", fr.action}, {"avoid", fr.avoid}});
    }
    follow.push_back({{"source", symbols_json(f, c.source)},
                      {"recommendations", std::move(followed)},
                      {"actions", c.actions}});
  }
  out["follow"] = std::move(follow);
  return out;
}

inline void write_mapping_report(std::ostream& os, const tmr::MappingReport& r) {
  os << "# mapping report\n"
     << "#   action rules (+): " << r.action_pos << "\n"
     << "#   action rules (-): " << r.action_neg << "\n"
     << "#   effect rules (+): " << r.effect_pos << "\n"
     << "#   effect rules (-): " << r.effect_neg << "\n"
     << "#   state facts: " << r.state_facts << "\n"
     << "#   contradiction rules (+): " << r.contradiction_pos << "\n"
     << "#   contradiction rules (-): " << r.contradiction_neg << "\n"
     << "#   interaction facts: " << r.interaction_facts << "\n"
     << "#   assumptions: " << braced(r.assumptions) << "\n";
  for (const auto& t : r.same_sign_interactions) {
    os << "#   same-sign interaction, symmetric rules: " << t << "\n";
  }
  for (const auto& w : r.warnings) os << "#   warning: " << w << "\n";
  os << "# symbols\n";
  for (const auto& [key, symbol] : r.symbols) {
    os << "#   " << key.first << " '" << key.second << "' -> " << symbol << "\n";
  }
}

inline void write_explanation(std::ostream& os, const aba::Framework& f) {
  os << "supports:\n";
  for (const auto& [s, family] : f.supports().entries()) {
    os << "  " << s.str() << ": ";
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (i) os << ", ";
      os << format_set(f, family[i]);
    }
    os << "\n";
  }
  auto write_witnesses = [&](aba::AssumptionSet a, aba::AssumptionSet b) {
    for (const auto& w : aba::attack_witnesses(f, a, b)) {
      const char* kind = w.kind == aba::AttackKind::Normal ? "normal" : "reverse";
      for (const auto& rule : aba::rules_realising(f, f.contrary(w.target), w.support)) {
        os << "  " << format_set(f, a) << " attacks " << format_set(f, b) << " [" << kind
           << ", via rule " << format_rule_arrow(rule) << "]\n";
      }
    }
  };
  os << "attacks between singletons:\n";
  const std::size_t n = f.assumption_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      write_witnesses(aba::AssumptionSet::singleton(i), aba::AssumptionSet::singleton(j));
    }
  }
  os << "canonical attackers:\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto target = aba::AssumptionSet::singleton(i);
    for (auto c : aba::canonical_attackers(f, target)) {
      if (c.size() == 1) continue;  // listed above
      write_witnesses(c, target);
    }
  }
}

}  // namespace argclinic::io
