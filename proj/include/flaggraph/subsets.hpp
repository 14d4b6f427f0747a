#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "flaggraph/errors.hpp"

namespace flaggraph {

// Ground sets are [n] = {1,...,n} with n <= 28 so that every subset fits a
// single machine word and complementation is one mask operation.
inline constexpr int kMaxGroundSize = 28;

inline void check_ground_size(int n) {
  if (n < 1 || n > kMaxGroundSize)
    throw parameter_error("ground set size must satisfy 1 <= n <= 28, got " +
                          std::to_string(n));
}

// A subset of [n], element e stored as bit (e-1).
struct Subset {
  std::uint32_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t b) : bits(b) {}

  static Subset of(std::initializer_list<int> elems) {
    Subset s;
    for (int e : elems) s.add(e);
    return s;
  }

  void add(int e) { bits |= std::uint32_t{1} << (e - 1); }
  bool contains(int e) const { return (bits >> (e - 1)) & 1u; }
  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }

  bool subset_of(const Subset& o) const { return (bits & ~o.bits) == 0; }
  Subset complement(int n) const {
    return Subset{(~bits) & ((std::uint32_t{1} << n) - 1)};
  }

  friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits & b.bits}; }
  friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits | b.bits}; }
  friend constexpr bool operator==(Subset a, Subset b) { return a.bits == b.bits; }
  friend constexpr bool operator!=(Subset a, Subset b) { return a.bits != b.bits; }

  std::vector<int> members() const;
  std::string to_string() const;  // "{1,3}"
};

// Lexicographic order on the ascending member lists.  For masks x != y the
// owner of the lowest differing element comes first.
inline bool member_lex_less(Subset a, Subset b) {
  std::uint32_t d = a.bits ^ b.bits;
  if (d == 0) return false;
  return (d & (~d + 1)) & a.bits;
}

// Exact binomial coefficient, total on integers: 0 whenever k < 0 or k > m.
// Supported up to m = 63 (all values fit std::int64_t); the toolkit's ground
// bound keeps every caller far below that.
std::int64_t binomial(int m, int k);

// All k-subsets of [n] in ascending lexicographic order of member lists.
std::vector<Subset> enumerate_subsets(int n, int k);

// All k-subsets of an arbitrary ground subset, same order.
std::vector<Subset> enumerate_subsets_of(Subset ground, int k);

// Position of s within enumerate_subsets(n, |s|).
std::int64_t subset_rank(int n, Subset s);

}  // namespace flaggraph
