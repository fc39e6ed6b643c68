#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "argclinic/aba/framework.hpp"
#include "argclinic/aba/goals.hpp"
#include "argclinic/io/bundle.hpp"
#include "argclinic/tmr/model.hpp"

// Random instance generators shared by the fuzz tests and the oracle command.
namespace argclinic::gen {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

struct FrameworkParams {
  std::size_t min_assumptions = 1;
  std::size_t max_assumptions = 8;
  std::size_t max_rules = 16;
  std::size_t max_body = 3;
  std::size_t extra_sentences = 5;
  bool preferences = true;
};

// Rule heads are never assumptions, so the result always validates.
inline aba::RawFramework random_framework(Rng& rng, const FrameworkParams& p = {}) {
  aba::RawFramework raw;
  const std::size_t n = uniform(rng, p.min_assumptions, p.max_assumptions);
  const std::size_t m = uniform(rng, 1, p.extra_sentences);
  std::vector<aba::Sentence> assumptions;
  std::vector<aba::Sentence> others;
  for (std::size_t i = 0; i < n; ++i) assumptions.emplace_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < m; ++i) others.emplace_back("p" + std::to_string(i));
  raw.assumptions = assumptions;

  // contraries are shared sentences, dedicated ones, or left undeclared (fresh
  // and underivable)
  std::vector<aba::Sentence> heads = others;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t pick = uniform(rng, 0, 9);
    if (pick < 5) {
      raw.contraries.emplace_back(assumptions[i], others[uniform(rng, 0, m - 1)]);
    } else if (pick < 8) {
      aba::Sentence c("c" + std::to_string(i));
      raw.contraries.emplace_back(assumptions[i], c);
      heads.push_back(std::move(c));
    }
  }

  const std::size_t rules = uniform(rng, 0, p.max_rules);
  for (std::size_t r = 0; r < rules; ++r) {
    aba::Sentence head = heads[uniform(rng, 0, heads.size() - 1)];
    std::vector<aba::Sentence> body;
    const std::size_t len = uniform(rng, 0, p.max_body);
    for (std::size_t k = 0; k < len; ++k) {
      if (coin(rng, 0.6)) {
        body.push_back(assumptions[uniform(rng, 0, n - 1)]);
      } else {
        body.push_back(others[uniform(rng, 0, m - 1)]);
      }
    }
    raw.rules.emplace_back(std::move(head), std::move(body));
  }

  if (p.preferences) {
    const std::size_t pairs = uniform(rng, 0, n + 1);
    for (std::size_t k = 0; k < pairs; ++k) {
      raw.preferences.emplace_back(assumptions[uniform(rng, 0, n - 1)],
                                   assumptions[uniform(rng, 0, n - 1)]);
    }
  }
  return raw;
}

// Random total preorder over `items`, as (lower, higher) pairs.
template <typename T>
std::vector<std::pair<T, T>> random_total_preorder(Rng& rng, const std::vector<T>& items,
                                                   std::size_t levels) {
  std::vector<std::size_t> level(items.size());
  for (auto& l : level) l = uniform(rng, 0, std::max<std::size_t>(levels, 1) - 1);
  std::vector<std::pair<T, T>> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (i != j && level[i] <= level[j]) out.emplace_back(items[i], items[j]);
    }
  }
  return out;
}

inline aba::GoalFramework random_goal_framework(Rng& rng, const FrameworkParams& p = {}) {
  aba::Framework base = aba::validate_framework(random_framework(rng, p));
  std::set<aba::Sentence> heads;
  for (const auto& r : base.rules()) heads.insert(r.head);
  std::vector<aba::Sentence> goals;
  for (const auto& h : heads) {
    if (coin(rng, 0.6)) goals.push_back(h);
  }
  auto prio = random_total_preorder(rng, goals, uniform(rng, 1, 4));
  return aba::validate_abapg(std::move(base), goals, prio);
}

struct TmrParams {
  std::size_t min_recs = 2;
  std::size_t max_recs = 8;
  std::size_t max_interactions = 6;
  bool total_preference = false;
  double diamond_probability = 0.5;
};

inline io::GuidelineBundle random_bundle(Rng& rng, const TmrParams& p = {}) {
  static const char* kEffects[] = {"Increase", "Decrease"};
  static const char* kValues[] = {"High", "Low", "Normal"};
  static const char* kLandmarks[] = {"must", "should", "may", "should_not", "must_not"};

  io::GuidelineBundle b;
  b.metadata = {{"name", "random"}};
  const std::size_t n = uniform(rng, p.min_recs, p.max_recs);
  for (std::size_t i = 0; i < n; ++i) {
    tmr::Recommendation r;
    r.name = "r" + std::to_string(i + 1);
    r.action = "Act" + std::to_string(uniform(rng, 1, 6));
    if (coin(rng, 0.8)) {
      r.ds = tmr::DeonticStrength::from_landmark(kLandmarks[uniform(rng, 0, 4)]);
    } else {
      r.ds = tmr::DeonticStrength::from_ratio(static_cast<std::int64_t>(uniform(rng, 0, 200)) - 100, 100);
    }
    const std::size_t tracks = uniform(rng, 1, 3);
    for (std::size_t k = 0; k < tracks; ++k) {
      tmr::Track t;
      t.property = "P" + std::to_string(uniform(rng, 1, 5));
      t.effect = kEffects[uniform(rng, 0, 1)];
      if (coin(rng, 0.7)) t.initial_value = kValues[uniform(rng, 0, 2)];
      t.contribution = static_cast<tmr::Contribution>(uniform(rng, 0, 2));
      r.tracks.push_back(std::move(t));
    }
    b.recommendations.push_back(std::move(r));
  }

  std::set<std::pair<std::size_t, std::size_t>> used;
  const std::size_t max_pairs = n * (n - 1) / 2;
  const std::size_t want = std::min(uniform(rng, 0, p.max_interactions), max_pairs);
  while (b.interactions.size() < want) {
    std::size_t i = uniform(rng, 0, n - 1);
    std::size_t j = uniform(rng, 0, n - 1);
    if (i == j || used.count({std::min(i, j), std::max(i, j)})) continue;
    used.insert({std::min(i, j), std::max(i, j)});
    b.interactions.push_back({b.recommendations[i].name, b.recommendations[j].name,
                              coin(rng, p.diamond_probability) ? tmr::Modal::Possible
                                                               : tmr::Modal::Necessary});
  }

  std::set<std::string> conditions;
  std::set<std::string> positive_goals;
  std::set<std::string> negative_goals;
  for (const auto& r : b.recommendations) {
    for (const auto& t : r.tracks) {
      conditions.insert(t.condition_term());
      (r.ds.recommends_action() ? positive_goals : negative_goals).insert(t.effect_term());
    }
  }
  for (const auto& c : conditions) {
    if (coin(rng, 0.5)) b.context.state.push_back(c);
  }
  for (const auto& g : positive_goals) {
    if (coin(rng, 0.5)) b.context.goals.push_back({false, g});
  }
  for (const auto& g : negative_goals) {
    if (coin(rng, 0.5)) b.context.goals.push_back({true, g});
  }
  std::vector<std::string> goal_names;
  for (const auto& g : b.context.goals) goal_names.push_back(g.str());
  b.context.priorities = random_total_preorder(rng, goal_names, uniform(rng, 1, 4));

  std::vector<std::string> names;
  for (const auto& r : b.recommendations) names.push_back(r.name);
  if (p.total_preference) {
    b.context.preferences = random_total_preorder(rng, names, uniform(rng, 1, n));
  } else {
    const std::size_t pairs = uniform(rng, 0, n);
    for (std::size_t k = 0; k < pairs; ++k) {
      b.context.preferences.emplace_back(names[uniform(rng, 0, n - 1)], names[uniform(rng, 0, n - 1)]);
    }
  }
  return b;
}

}  // namespace argclinic::gen
