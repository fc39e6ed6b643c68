#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "argclinic/aba/framework.hpp"

namespace argclinic::aba {

// Cn(A): every sentence with a support inside A.
inline std::set<Sentence> conclusions(const Framework& f, AssumptionSet a) {
  std::set<Sentence> out;
  for (const auto& [s, family] : f.supports().entries()) {
    for (auto support : family) {
      if (support.subset_of(a)) {
        out.insert(s);
        break;
      }
    }
  }
  return out;
}

// A normally attacks B: some support of contrary(b), b in B, lies inside A
// and contains nothing strictly below b.
inline bool normal_attack(const Framework& f, AssumptionSet a, AssumptionSet b) {
  for (auto target : b.indices()) {
    const auto below = f.preference().below(target);
    for (auto support : f.contrary_family(target)) {
      if (support.subset_of(a) && !support.intersects(below)) return true;
    }
  }
  return false;
}

// A reverse-attacks B: some support of contrary(a), a in A, lies inside B
// and contains something strictly below a.
inline bool reverse_attack(const Framework& f, AssumptionSet a, AssumptionSet b) {
  for (auto target : a.indices()) {
    const auto below = f.preference().below(target);
    for (auto support : f.contrary_family(target)) {
      if (support.subset_of(b) && support.intersects(below)) return true;
    }
  }
  return false;
}

inline bool attacks(const Framework& f, AssumptionSet a, AssumptionSet b) {
  return normal_attack(f, a, b) || reverse_attack(f, a, b);
}

inline bool is_conflict_free(const Framework& f, AssumptionSet a) {
  return !attacks(f, a, a);
}

// Attackers sufficient for defence checking: every B that attacks T contains
// one of these, and each of them attacks T.
inline Family canonical_attackers(const Framework& f, AssumptionSet t) {
  std::set<AssumptionSet> out;
  for (auto target : t.indices()) {
    const auto below = f.preference().below(target);
    for (auto support : f.contrary_family(target)) {
      if (!support.intersects(below)) out.insert(support);
    }
  }
  for (std::size_t b = 0; b < f.assumption_count(); ++b) {
    const auto below = f.preference().below(b);
    if (below.empty()) continue;
    for (auto support : f.contrary_family(b)) {
      if (support.subset_of(t) && support.intersects(below)) {
        out.insert(AssumptionSet::singleton(b));
        break;
      }
    }
  }
  return Family(out.begin(), out.end());
}

inline bool defends(const Framework& f, AssumptionSet a, AssumptionSet t) {
  for (auto attacker : canonical_attackers(f, t)) {
    if (!attacks(f, a, attacker)) return false;
  }
  return true;
}

inline bool is_admissible(const Framework& f, AssumptionSet a) {
  return is_conflict_free(f, a) && defends(f, a, a);
}

inline constexpr std::size_t kDefaultEnumerationCap = 24;

struct EnumerationOptions {
  std::size_t max_assumptions = kDefaultEnumerationCap;

  // Honours ARGCLINIC_MAX_ASSUMPTIONS when set to a positive integer.
  static EnumerationOptions from_environment() {
    EnumerationOptions opts;
    if (const char* env = std::getenv("ARGCLINIC_MAX_ASSUMPTIONS")) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) opts.max_assumptions = v;
    }
    return opts;
  }
};

// Sorts by the lexicographic order of member symbols (members are indexed in
// symbol order, so comparing index sequences is equivalent).
inline void sort_lexicographic(Family& family) {
  std::sort(family.begin(), family.end(), [](AssumptionSet x, AssumptionSet y) {
    return x.indices() < y.indices();
  });
}

namespace detail {

class PreferredSearch {
 public:
  PreferredSearch(const Framework& f) : f_(f), n_(f.assumption_count()) {}

  Family run() {
    for (std::size_t k = n_ + 1; k-- > 0;) {
      target_ = k;
      extend(AssumptionSet{}, 0);
    }
    sort_lexicographic(found_);
    return found_;
  }

 private:
  bool covered(AssumptionSet candidate) const {
    return std::any_of(found_.begin(), found_.end(),
                       [&](AssumptionSet e) { return candidate.subset_of(e); });
  }

  void extend(AssumptionSet current, std::size_t next) {
    const std::size_t have = current.size();
    if (have == target_) {
      if (!covered(current) && defends(f_, current, current)) found_.push_back(current);
      return;
    }
    if (have + (n_ - next) < target_) return;
    // every completion stays inside current + remaining
    const AssumptionSet reachable = current | (AssumptionSet::first_n(n_) - AssumptionSet::first_n(next));
    if (covered(reachable)) return;
    for (std::size_t i = next; i < n_; ++i) {
      AssumptionSet with = current;
      with.insert(i);
      // conflict-freeness is inherited by subsets, so conflicting prefixes prune
      if (!is_conflict_free(f_, with)) continue;
      extend(with, i + 1);
    }
  }

  const Framework& f_;
  std::size_t n_;
  std::size_t target_ = 0;
  Family found_;
};

}  // namespace detail

// All subset-maximal sets that are conflict-free and defend themselves,
// found by scanning conflict-free candidates in decreasing cardinality.
inline Family preferred_extensions(const Framework& f,
                                   const EnumerationOptions& opts = {}) {
  if (f.assumption_count() > opts.max_assumptions) {
    throw Error(ErrorKind::SizeLimitExceeded,
                std::to_string(f.assumption_count()) +
                    " assumptions exceed the enumeration cap of " +
                    std::to_string(opts.max_assumptions));
  }
  return detail::PreferredSearch(f).run();
}

// Rules headed by `head` through which `support` is realised as an exact
// deduction support.
inline std::vector<Rule> rules_realising(const Framework& f, const Sentence& head,
                                         AssumptionSet support) {
  std::vector<Rule> out;
  for (const auto& rule : f.rules()) {
    if (rule.head != head) continue;
    std::set<AssumptionSet> combos{AssumptionSet{}};
    for (const auto& b : rule.body) {
      std::set<AssumptionSet> next;
      for (auto c : combos) {
        for (auto s : f.supports().family(b)) {
          if (s.subset_of(support)) next.insert(c | s);
        }
      }
      combos = std::move(next);
    }
    if (combos.count(support)) out.push_back(rule);
  }
  return out;
}

enum class AttackKind { Normal, Reverse };

struct AttackWitness {
  AttackKind kind;
  std::size_t target;       // assumption whose contrary is derived
  AssumptionSet support;    // support of that contrary
};

// Every way in which A attacks B.
inline std::vector<AttackWitness> attack_witnesses(const Framework& f,
                                                   AssumptionSet a,
                                                   AssumptionSet b) {
  std::vector<AttackWitness> out;
  for (auto target : b.indices()) {
    const auto below = f.preference().below(target);
    for (auto support : f.contrary_family(target)) {
      if (support.subset_of(a) && !support.intersects(below)) {
        out.push_back({AttackKind::Normal, target, support});
      }
    }
  }
  for (auto target : a.indices()) {
    const auto below = f.preference().below(target);
    for (auto support : f.contrary_family(target)) {
      if (support.subset_of(b) && support.intersects(below)) {
        out.push_back({AttackKind::Reverse, target, support});
      }
    }
  }
  return out;
}

}  // namespace argclinic::aba
