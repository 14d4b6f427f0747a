#include "flaggraph/formulas.hpp"

#include <cassert>
#include <string>

namespace flaggraph {

PairShape pair_shape(const Flag& f, const Flag& g) {
  const Subset small_union = f.bottom() | g.bottom();
  const Subset large_inter = f.top() & g.top();
  return PairShape{small_union.size(), large_inter.size(),
                   small_union.subset_of(large_inter)};
}

void check_two_level_regime(int n, int a, int b) {
  check_flag_type(n, FlagType{a, b});
  if (a + b + 1 > n || 2 * a >= n || 2 * b <= n)
    throw parameter_error("need a+b+1 <= n and a < n/2 < b, got n=" + std::to_string(n) +
                          " a=" + std::to_string(a) + " b=" + std::to_string(b));
}

std::int64_t common_count_closed(int n, int a, int b, const PairShape& shape) {
  check_two_level_regime(n, a, b);
  if (!shape.contained) return 0;
  const int u = shape.union_a;
  const int i = shape.inter_b;
  return binomial(n - 2 * b + i, a) * binomial(i - u, b + i - n);
}

std::pair<std::int64_t, MaxCase> n_max(int n, int a, int b) {
  check_two_level_regime(n, a, b);
  const std::int64_t top_shared = binomial(n - b - 1, a) * binomial(b - a - 1, 2 * b - n - 1);
  const std::int64_t bottom_shared = binomial(n - b, a) * binomial(b - a - 1, 2 * b - n);
  if (3 * b > 2 * n) return {top_shared, MaxCase::TopShared};
  if (3 * b < 2 * n) return {bottom_shared, MaxCase::BottomShared};
  assert(top_shared == bottom_shared);
  return {top_shared, MaxCase::Both};
}

namespace {

// The boundary regime of the second-maximum results: b = 2n/3 with
// 1 <= a <= n/3 - 1 and the witness shape realizable (b-a-2 >= 0).
int check_second_max_regime(int n, int a) {
  if (n % 3 != 0) throw parameter_error("second-maximum regime needs 3 | n");
  const int b = 2 * n / 3;
  check_two_level_regime(n, a, b);
  if (a > n / 3 - 1)
    throw parameter_error("second-maximum regime needs a <= n/3 - 1, got a=" +
                          std::to_string(a));
  if (b - a - 2 < 0)
    throw parameter_error("second-maximum witness shape needs b-a-2 >= 0");
  return b;
}

}  // namespace

std::int64_t n_second_max(int n, int a) {
  const int b = check_second_max_regime(n, a);
  return binomial(n - b - 1, a) * binomial(b - a - 2, 2 * b - n - 1);
}

std::int64_t sm_count_shared_a(int n, int a) {
  check_second_max_regime(n, a);
  const std::int64_t b = 2 * n / 3;
  return a * (b - a) * (n - a - 1) + a;
}

std::int64_t sm_count_shared_b(int n, int a) {
  check_second_max_regime(n, a);
  const std::int64_t third = n / 3;
  const std::int64_t b = 2 * third;
  return third * (b - a) * (b - 1) + third;
}

std::int64_t matching_block_count(int n, int a, int b) {
  check_flag_type(n, FlagType{a, b});
  if (a + b != n)
    throw parameter_error("matching regime needs a+b = n, got a=" + std::to_string(a) +
                          " b=" + std::to_string(b) + " n=" + std::to_string(n));
  return binomial(n, b) * binomial(b, a) / 2;
}

BigInt matching_order(int n, int a, int b) {
  const std::int64_t m = matching_block_count(n, a, b);
  return big_pow(2, m) * big_factorial(static_cast<int>(m));
}

BigInt small_type_order(int n, const FlagType& type) {
  check_flag_type(n, type);
  const int top = type.back();
  if (2 * top >= n)
    throw parameter_error("small-type order needs t_r < n/2 strictly, got t_r=" +
                          std::to_string(top));
  std::int64_t m = 1;
  if (type.size() > 1)
    m = flag_count(top, FlagType(type.begin(), type.end() - 1));
  return big_pow(big_factorial(static_cast<int>(m)), binomial(n, top)) * big_factorial(n);
}

BigInt large_type_order(int n, const FlagType& type) {
  check_flag_type(n, type);
  const int bottom = type.front();
  if (2 * bottom <= n)
    throw parameter_error("large-type order needs t_1 > n/2 strictly, got t_1=" +
                          std::to_string(bottom));
  const FlagType mirror = complement_type(n, type);
  const BigInt via_complement = small_type_order(n, mirror);

  // Direct evaluation: binomial(n, t_1) blocks of size |F below a fixed
  // (n - t_1)-set| must agree with the complement reduction.
  std::int64_t m = 1;
  if (mirror.size() > 1) m = flag_count(mirror.back(), FlagType(mirror.begin(), mirror.end() - 1));
  const BigInt direct = big_pow(big_factorial(static_cast<int>(m)), binomial(n, bottom)) *
                        big_factorial(n);
  assert(direct == via_complement);
  (void)direct;
  return via_complement;
}

}  // namespace flaggraph
