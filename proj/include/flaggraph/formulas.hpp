#pragma once

#include <cstdint>
#include <utility>

#include "flaggraph/bigint.hpp"
#include "flaggraph/flags.hpp"

namespace flaggraph {

// Pair statistics of two flags {A,B}, {C,D} of type {a,b} that determine
// their common-neighbour count: |A∪C|, |B∩D|, and whether A∪C ⊆ B∩D.
struct PairShape {
  int union_a = 0;
  int inter_b = 0;
  bool contained = false;

  friend bool operator==(const PairShape& x, const PairShape& y) {
    return x.union_a == y.union_a && x.inter_b == y.inter_b && x.contained == y.contained;
  }
};

PairShape pair_shape(const Flag& f, const Flag& g);

// Which pair shapes attain the maximum common-neighbour count:
//   TopShared    — same small member, large members meeting in b-1 elements;
//   BottomShared — same large member, small members meeting in a-1 elements;
//   Both         — both shapes attain it (the b = 2n/3 boundary).
enum class MaxCase { TopShared, BottomShared, Both };

// Throws parameter_error unless a+b+1 <= n and a < n/2 < b.
void check_two_level_regime(int n, int a, int b);

// Exact |N(f,g)| for a pair of the given shape in Γ(n,{a,b}):
//   binomial(n-2b+i, a) * binomial(i-u, b+i-n)   with u = |A∪C|, i = |B∩D|,
// and 0 whenever the containment fails or a binomial guard fires.
std::int64_t common_count_closed(int n, int a, int b, const PairShape& shape);

// The maximum of |N(f,g)| over flag pairs, with its attaining shape class.
std::pair<std::int64_t, MaxCase> n_max(int n, int a, int b);

// The second-largest value of |N(f,g)| in the b = 2n/3 boundary regime:
//   binomial(n-b-1, a) * binomial(b-a-2, 2b-n-1).
// Requires 3 | n, 1 <= a <= n/3 - 1 and b-a-2 >= 0.
std::int64_t n_second_max(int n, int a);

// |SM(f,g)| for witnesses sharing the small member with |B∩C| = b-1:
//   a(2n/3 - a)(n - a - 1) + a.
std::int64_t sm_count_shared_a(int n, int a);

// |SM(x,y)| for witnesses sharing the large member with |D∩F| = a-1:
//   (n/3)(2n/3 - a)(2n/3 - 1) + n/3.
std::int64_t sm_count_shared_b(int n, int a);

// Perfect-matching types (a+b = n): number of complement-pair blocks
// m = binomial(n,b) * binomial(b,a) / 2 and the order 2^m * m!.
std::int64_t matching_block_count(int n, int a, int b);
BigInt matching_order(int n, int a, int b);

// Wreath order (m!)^binomial(n,t_r) * n! with m the number of chains below a
// fixed top member; requires t_r < n/2 strictly (the t_r = n/2 boundary is
// measured, not asserted — see the edgecase verification suite).
BigInt small_type_order(int n, const FlagType& type);

// Mirror case t_1 > n/2 strictly, reduced through complementation.
BigInt large_type_order(int n, const FlagType& type);

}  // namespace flaggraph
