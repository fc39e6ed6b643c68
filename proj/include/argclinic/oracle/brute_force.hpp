#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "argclinic/aba/framework.hpp"
#include "argclinic/aba/goals.hpp"

// Brute-force reference semantics. Shares only the framework value types with
// the engine: supports, attacks, conclusions and the goal ordering are all
// recomputed here from the definitions.
namespace argclinic::oracle {

inline constexpr std::size_t kOracleCap = 15;

// exact[s][mask] is true iff some deduction tree for s has assumption leaves
// exactly `mask`. Each (sentence, mask) pair is decided by decomposing mask
// over the body of a rule, repeated until nothing changes.
class ExactSupports {
 public:
  explicit ExactSupports(const aba::Framework& f) : n_(f.assumption_count()) {
    const std::uint64_t subsets = std::uint64_t{1} << n_;
    for (const auto& s : f.language()) exact_[s].assign(subsets, false);
    for (std::size_t i = 0; i < n_; ++i) {
      exact_[f.assumptions()[i]][std::uint64_t{1} << i] = true;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& rule : f.rules()) {
        auto& row = exact_[rule.head];
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
          if (row[mask] || !decomposes(rule, mask)) continue;
          row[mask] = true;
          changed = true;
        }
      }
    }
  }

  bool holds(const aba::Sentence& s, std::uint64_t mask) const {
    auto it = exact_.find(s);
    return it != exact_.end() && it->second[mask];
  }

  std::vector<std::uint64_t> supports(const aba::Sentence& s) const {
    std::vector<std::uint64_t> out;
    auto it = exact_.find(s);
    if (it == exact_.end()) return out;
    for (std::uint64_t m = 0; m < it->second.size(); ++m) {
      if (it->second[m]) out.push_back(m);
    }
    return out;
  }

 private:
  // Can `mask` be written as a union of one exact support per body element?
  bool decomposes(const aba::Rule& rule, std::uint64_t mask) const {
    std::set<std::uint64_t> covered{0};
    for (const auto& b : rule.body) {
      const auto& row = exact_.at(b);
      std::set<std::uint64_t> next;
      // every submask of mask, including 0
      for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
        if (row[sub]) {
          for (auto c : covered) next.insert(c | sub);
        }
        if (sub == 0) break;
      }
      if (next.empty()) return false;
      covered = std::move(next);
    }
    return covered.count(mask) > 0;
  }

  std::size_t n_;
  std::map<aba::Sentence, std::vector<bool>> exact_;
};

class BruteForce {
 public:
  explicit BruteForce(const aba::Framework& f) : f_(f), n_(f.assumption_count()) {
    if (n_ > kOracleCap) {
      throw Error(ErrorKind::OracleSizeExceeded,
                  std::to_string(n_) + " assumptions exceed the oracle cap of 15");
    }
    ExactSupports exact(f);
    contrary_supports_.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      contrary_supports_.push_back(exact.supports(f.contrary(i)));
    }
  }

  bool strictly_below(std::size_t x, std::size_t y) const {
    return f_.preference().leq(x, y) && !f_.preference().leq(y, x);
  }

  // The attack definition with both quantifiers spelled out.
  bool attacks(std::uint64_t a, std::uint64_t b) const {
    for (std::size_t target = 0; target < n_; ++target) {
      if (!((b >> target) & 1U)) continue;
      for (auto support : contrary_supports_[target]) {
        if ((support & ~a) != 0) continue;
        bool inferior = false;
        for (std::size_t x = 0; x < n_; ++x) {
          if (((support >> x) & 1U) && strictly_below(x, target)) inferior = true;
        }
        if (!inferior) return true;
      }
    }
    for (std::size_t target = 0; target < n_; ++target) {
      if (!((a >> target) & 1U)) continue;
      for (auto support : contrary_supports_[target]) {
        if ((support & ~b) != 0) continue;
        for (std::size_t x = 0; x < n_; ++x) {
          if (((support >> x) & 1U) && strictly_below(x, target)) return true;
        }
      }
    }
    return false;
  }

  bool admissible(std::uint64_t a) const {
    if (attacks(a, a)) return false;
    const std::uint64_t subsets = std::uint64_t{1} << n_;
    for (std::uint64_t b = 0; b < subsets; ++b) {
      if (attacks(b, a) && !attacks(a, b)) return false;
    }
    return true;
  }

  aba::Family preferred() const {
    const std::uint64_t subsets = std::uint64_t{1} << n_;
    std::vector<std::uint64_t> admissible_sets;
    for (std::uint64_t a = 0; a < subsets; ++a) {
      if (admissible(a)) admissible_sets.push_back(a);
    }
    aba::Family out;
    for (auto a : admissible_sets) {
      const bool maximal = std::none_of(admissible_sets.begin(), admissible_sets.end(),
                                        [&](std::uint64_t b) { return b != a && (a & ~b) == 0; });
      if (maximal) out.emplace_back(a);
    }
    aba::sort_lexicographic(out);
    return out;
  }

  // Forward chaining from the assumptions in `a` and the facts.
  std::set<aba::Sentence> conclusions(std::uint64_t a) const {
    std::set<aba::Sentence> derived;
    for (std::size_t i = 0; i < n_; ++i) {
      if ((a >> i) & 1U) derived.insert(f_.assumptions()[i]);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& rule : f_.rules()) {
        if (derived.count(rule.head)) continue;
        if (std::all_of(rule.body.begin(), rule.body.end(),
                        [&](const aba::Sentence& s) { return derived.count(s) > 0; })) {
          derived.insert(rule.head);
          changed = true;
        }
      }
    }
    return derived;
  }

 private:
  const aba::Framework& f_;
  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> contrary_supports_;
};

inline aba::Family brute_force_preferred(const aba::Framework& f) {
  return BruteForce(f).preferred();
}

// Literal goal-extension ordering, with equal sets declared equivalent.
inline bool literal_goal_leq(const std::set<aba::Sentence>& ga, const std::set<aba::Sentence>& gb,
                             const aba::PriorityPreorder& priority) {
  if (ga == gb) return true;
  for (const auto& theta : gb) {
    if (ga.count(theta)) continue;
    bool dominates = true;
    for (const auto& chi : ga) {
      if (!gb.count(chi) && !priority.leq(chi, theta)) dominates = false;
    }
    if (dominates) return true;
  }
  return false;
}

inline std::vector<aba::GoalExtension> brute_force_top_goals(const aba::GoalFramework& fg) {
  BruteForce bf(fg.base);
  std::map<std::set<aba::Sentence>, aba::Family> by_goals;
  for (auto e : bf.preferred()) {
    std::set<aba::Sentence> achieved;
    const auto cn = bf.conclusions(e.bits());
    for (const auto& g : fg.goals()) {
      if (cn.count(g)) achieved.insert(g);
    }
    by_goals[achieved].push_back(e);
  }
  std::vector<aba::GoalExtension> out;
  for (const auto& [achieved, sources] : by_goals) {
    bool top = true;
    for (const auto& [other, unused] : by_goals) {
      if (literal_goal_leq(achieved, other, fg.priority) &&
          !literal_goal_leq(other, achieved, fg.priority)) {
        top = false;
      }
    }
    if (top) {
      aba::Family sorted = sources;
      aba::sort_lexicographic(sorted);
      out.push_back(aba::GoalExtension{sorted, achieved});
    }
  }
  return out;
}

}  // namespace argclinic::oracle
