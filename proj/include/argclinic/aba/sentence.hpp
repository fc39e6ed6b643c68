#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "argclinic/error.hpp"

namespace argclinic::aba {

// An atomic sentence of the framework language. Equality is symbol equality.
class Sentence {
 public:
  Sentence() = default;
  explicit Sentence(std::string symbol) : symbol_(std::move(symbol)) {
    if (symbol_.empty()) {
      throw Error(ErrorKind::SchemaError, "empty sentence symbol");
    }
  }

  const std::string& str() const noexcept { return symbol_; }

  friend auto operator<=>(const Sentence&, const Sentence&) = default;
  friend bool operator==(const Sentence&, const Sentence&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Sentence& s) {
    return os << s.symbol_;
  }

 private:
  std::string symbol_;
};

inline constexpr std::size_t kMaxAssumptions = 64;

// Set of assumptions, stored as a bitmask over the framework's assumption
// index (assumptions are indexed in symbol order).
class AssumptionSet {
 public:
  constexpr AssumptionSet() = default;
  constexpr explicit AssumptionSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr AssumptionSet singleton(std::size_t index) {
    return AssumptionSet(std::uint64_t{1} << index);
  }
  static constexpr AssumptionSet first_n(std::size_t n) {
    return n >= 64 ? AssumptionSet(~std::uint64_t{0})
                   : AssumptionSet((std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t index) const noexcept {
    return (bits_ >> index) & 1U;
  }
  constexpr void insert(std::size_t index) noexcept {
    bits_ |= std::uint64_t{1} << index;
  }
  constexpr void erase(std::size_t index) noexcept {
    bits_ &= ~(std::uint64_t{1} << index);
  }
  constexpr bool subset_of(AssumptionSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(AssumptionSet other) const noexcept {
    return (bits_ & other.bits_) != 0;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (auto rest = bits_; rest != 0; rest &= rest - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    return out;
  }

  friend constexpr AssumptionSet operator|(AssumptionSet a, AssumptionSet b) {
    return AssumptionSet(a.bits_ | b.bits_);
  }
  friend constexpr AssumptionSet operator&(AssumptionSet a, AssumptionSet b) {
    return AssumptionSet(a.bits_ & b.bits_);
  }
  friend constexpr AssumptionSet operator-(AssumptionSet a, AssumptionSet b) {
    return AssumptionSet(a.bits_ & ~b.bits_);
  }
  friend constexpr auto operator<=>(AssumptionSet, AssumptionSet) = default;
  friend constexpr bool operator==(AssumptionSet, AssumptionSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// A family of assumption sets, kept sorted and duplicate-free.
using Family = std::vector<AssumptionSet>;

}  // namespace argclinic::aba

template <>
struct std::hash<argclinic::aba::Sentence> {
  std::size_t operator()(const argclinic::aba::Sentence& s) const noexcept {
    return std::hash<std::string>{}(s.str());
  }
};
