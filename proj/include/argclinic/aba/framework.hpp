#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "argclinic/aba/sentence.hpp"
#include "argclinic/error.hpp"

namespace argclinic::aba {

// head <- body. An empty body encodes a fact (head <- true).
struct Rule {
  Sentence head;
  std::vector<Sentence> body;  // sorted, duplicate-free

  Rule() = default;
  Rule(Sentence h, std::vector<Sentence> b) : head(std::move(h)), body(std::move(b)) {
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());
  }

  bool is_fact() const noexcept { return body.empty(); }

  friend auto operator<=>(const Rule&, const Rule&) = default;
  friend bool operator==(const Rule&, const Rule&) = default;
};

// Unvalidated input, as read from a file or produced by the mapper.
struct RawFramework {
  std::vector<Rule> rules;
  std::vector<Sentence> assumptions;
  std::vector<std::pair<Sentence, Sentence>> contraries;   // (assumption, contrary)
  std::vector<std::pair<Sentence, Sentence>> preferences;  // (a, b) meaning a <= b
};

// Reflexive-transitive preorder over assumption indices, stored closed.
class PreferencePreorder {
 public:
  PreferencePreorder() = default;

  PreferencePreorder(std::size_t n,
                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
      : n_(n), leq_(n * n, false) {
    for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = true;
    for (auto [a, b] : pairs) leq_[a * n + b] = true;
    // Warshall closure
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!leq_[i * n + k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (leq_[k * n + j]) leq_[i * n + j] = true;
        }
      }
    }
    below_.assign(n, AssumptionSet{});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (strict(i, j)) below_[j].insert(i);
      }
    }
  }

  std::size_t size() const noexcept { return n_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * n_ + b]; }
  bool strict(std::size_t a, std::size_t b) const {
    return leq(a, b) && !leq(b, a);
  }
  // Assumptions strictly below `index`.
  AssumptionSet below(std::size_t index) const { return below_[index]; }

  bool only_reflexive() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && leq(i, j)) return false;
      }
    }
    return true;
  }

  friend bool operator==(const PreferencePreorder& a, const PreferencePreorder& b) {
    return a.n_ == b.n_ && a.leq_ == b.leq_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<bool> leq_;
  std::vector<AssumptionSet> below_;
};

// For each sentence, every assumption set S such that some finite deduction
// tree for the sentence has assumption leaves exactly S. Sentences without
// any deduction are absent.
class SupportTable {
 public:
  const Family& family(const Sentence& s) const {
    static const Family kEmpty;
    auto it = families_.find(s);
    return it == families_.end() ? kEmpty : it->second;
  }

  const std::map<Sentence, Family>& entries() const noexcept { return families_; }

  friend bool operator==(const SupportTable&, const SupportTable&) = default;

 private:
  friend class SupportBuilder;
  std::map<Sentence, Family> families_;
};

class Framework;
SupportTable compute_supports(const Framework& f);
Framework validate_framework(const RawFramework& raw);

// A validated flat ABA+ framework. Immutable; the support table is computed
// once at validation time.
class Framework {
 public:
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const std::vector<Sentence>& assumptions() const noexcept { return assumptions_; }
  std::size_t assumption_count() const noexcept { return assumptions_.size(); }
  AssumptionSet all() const noexcept { return AssumptionSet::first_n(assumptions_.size()); }

  std::optional<std::size_t> index_of(const Sentence& s) const {
    auto it = std::lower_bound(assumptions_.begin(), assumptions_.end(), s);
    if (it == assumptions_.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - assumptions_.begin());
  }
  bool is_assumption(const Sentence& s) const { return index_of(s).has_value(); }

  const Sentence& contrary(std::size_t index) const { return contraries_[index]; }
  // True when the contrary was generated rather than declared.
  bool contrary_is_fresh(std::size_t index) const { return fresh_contrary_[index]; }

  const PreferencePreorder& preference() const noexcept { return preference_; }
  const SupportTable& supports() const noexcept { return supports_; }
  const Family& contrary_family(std::size_t index) const {
    return contrary_families_[index];
  }

  AssumptionSet make_set(const std::vector<std::string>& symbols) const {
    AssumptionSet out;
    for (const auto& sym : symbols) {
      auto idx = index_of(Sentence(sym));
      if (!idx) throw Error(ErrorKind::UnknownAssumption, "'" + sym + "' is not an assumption");
      out.insert(*idx);
    }
    return out;
  }

  std::vector<Sentence> members(AssumptionSet set) const {
    std::vector<Sentence> out;
    for (auto i : set.indices()) out.push_back(assumptions_[i]);
    return out;
  }

  // Every sentence appearing in rules, assumptions or contraries.
  std::set<Sentence> language() const {
    std::set<Sentence> out(assumptions_.begin(), assumptions_.end());
    out.insert(contraries_.begin(), contraries_.end());
    for (const auto& r : rules_) {
      out.insert(r.head);
      out.insert(r.body.begin(), r.body.end());
    }
    return out;
  }

  std::vector<Sentence> facts() const {
    std::vector<Sentence> out;
    for (const auto& r : rules_) {
      if (r.is_fact()) out.push_back(r.head);
    }
    return out;
  }

  friend bool operator==(const Framework& a, const Framework& b) {
    return a.rules_ == b.rules_ && a.assumptions_ == b.assumptions_ &&
           a.contraries_ == b.contraries_ && a.preference_ == b.preference_;
  }

 private:
  friend Framework validate_framework(const RawFramework& raw);

  std::vector<Rule> rules_;
  std::vector<Sentence> assumptions_;
  std::vector<Sentence> contraries_;
  std::vector<bool> fresh_contrary_;
  PreferencePreorder preference_;
  SupportTable supports_;
  std::vector<Family> contrary_families_;
};

inline std::string fresh_contrary_name(const Sentence& assumption) {
  return "contrary_of(" + assumption.str() + ")";
}

// Least fixpoint: the family of a rule head is the union, over its rules, of
// the pointwise unions of the body families. Families only grow inside a
// finite powerset, so iteration terminates; cyclic rules add nothing new once
// the fixpoint is reached.
class SupportBuilder {
 public:
  static SupportTable build(const Framework& f) {
    std::map<Sentence, std::set<AssumptionSet>> fam;
    for (std::size_t i = 0; i < f.assumption_count(); ++i) {
      fam[f.assumptions()[i]].insert(AssumptionSet::singleton(i));
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& rule : f.rules()) {
        std::set<AssumptionSet> combos{AssumptionSet{}};
        bool feasible = true;
        for (const auto& b : rule.body) {
          auto it = fam.find(b);
          if (it == fam.end() || it->second.empty()) {
            feasible = false;
            break;
          }
          std::set<AssumptionSet> next;
          for (auto c : combos) {
            for (auto s : it->second) next.insert(c | s);
          }
          combos = std::move(next);
        }
        if (!feasible) continue;
        auto& target = fam[rule.head];
        for (auto c : combos) {
          if (target.insert(c).second) changed = true;
        }
      }
    }
    SupportTable table;
    for (auto& [s, sets] : fam) {
      table.families_.emplace(s, Family(sets.begin(), sets.end()));
    }
    return table;
  }
};

inline SupportTable compute_supports(const Framework& f) {
  return SupportBuilder::build(f);
}

inline Framework validate_framework(const RawFramework& raw) {
  Framework f;

  std::set<Sentence> assumption_set(raw.assumptions.begin(), raw.assumptions.end());
  if (assumption_set.size() > kMaxAssumptions) {
    throw Error(ErrorKind::TooManyAssumptions,
                std::to_string(assumption_set.size()) + " assumptions (at most " +
                    std::to_string(kMaxAssumptions) + " supported)");
  }
  f.assumptions_.assign(assumption_set.begin(), assumption_set.end());

  std::set<Rule> rule_set(raw.rules.begin(), raw.rules.end());
  for (const auto& r : rule_set) {
    if (assumption_set.count(r.head)) {
      throw Error(ErrorKind::FlatnessViolation,
                  "assumption '" + r.head.str() + "' is the head of a rule");
    }
  }
  f.rules_.assign(rule_set.begin(), rule_set.end());

  const std::size_t n = f.assumptions_.size();
  std::vector<std::optional<Sentence>> declared(n);
  for (const auto& [a, c] : raw.contraries) {
    auto idx = f.index_of(a);
    if (!idx) {
      throw Error(ErrorKind::DanglingContrary,
                  "contrary declared for non-assumption '" + a.str() + "'");
    }
    if (assumption_set.count(c)) {
      throw Error(ErrorKind::ContraryConflict,
                  "contrary of '" + a.str() + "' is the assumption '" + c.str() + "'");
    }
    if (declared[*idx] && *declared[*idx] != c) {
      throw Error(ErrorKind::ContraryConflict,
                  "two contraries declared for '" + a.str() + "': '" +
                      declared[*idx]->str() + "' and '" + c.str() + "'");
    }
    declared[*idx] = c;
  }

  std::set<Sentence> used(assumption_set);
  for (const auto& r : f.rules_) {
    used.insert(r.head);
    used.insert(r.body.begin(), r.body.end());
  }
  for (const auto& d : declared) {
    if (d) used.insert(*d);
  }
  f.contraries_.reserve(n);
  f.fresh_contrary_.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (declared[i]) {
      f.contraries_.push_back(*declared[i]);
      continue;
    }
    std::string name = fresh_contrary_name(f.assumptions_[i]);
    while (used.count(Sentence(name))) name += "'";
    Sentence fresh(name);
    used.insert(fresh);
    f.contraries_.push_back(fresh);
    f.fresh_contrary_[i] = true;
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [a, b] : raw.preferences) {
    auto ia = f.index_of(a);
    auto ib = f.index_of(b);
    if (!ia || !ib) {
      throw Error(ErrorKind::DanglingPreference,
                  "preference '" + a.str() + " <= " + b.str() +
                      "' mentions a non-assumption");
    }
    pairs.emplace_back(*ia, *ib);
  }
  f.preference_ = PreferencePreorder(n, pairs);

  f.supports_ = compute_supports(f);
  f.contrary_families_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    f.contrary_families_.push_back(f.supports_.family(f.contraries_[i]));
  }
  return f;
}

}  // namespace argclinic::aba
