#include "flaggraph/subsets.hpp"

#include <array>

namespace flaggraph {

std::vector<int> Subset::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t m = bits; m != 0; m &= m - 1)
    out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : members()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

namespace {

constexpr int kMaxBinomialM = 63;

// Pascal triangle; C(63,31) still fits signed 64 bits.
std::array<std::array<std::int64_t, kMaxBinomialM + 1>, kMaxBinomialM + 1> make_pascal() {
  std::array<std::array<std::int64_t, kMaxBinomialM + 1>, kMaxBinomialM + 1> t{};
  for (int m = 0; m <= kMaxBinomialM; ++m) {
    t[m][0] = 1;
    for (int k = 1; k <= m; ++k)
      t[m][k] = t[m - 1][k - 1] + (k <= m - 1 ? t[m - 1][k] : 0);
  }
  return t;
}

const auto& pascal() {
  static const auto table = make_pascal();
  return table;
}

}  // namespace

std::int64_t binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  if (m > kMaxBinomialM)
    throw parameter_error("binomial: m exceeds supported range, got " + std::to_string(m));
  return pascal()[m][k];
}

std::vector<Subset> enumerate_subsets_of(Subset ground, int k) {
  const std::vector<int> elems = ground.members();
  const int m = static_cast<int>(elems.size());
  if (k < 0 || k > m)
    throw parameter_error("enumerate_subsets: need 0 <= k <= |ground|, got k=" +
                          std::to_string(k));
  std::vector<Subset> out;
  out.reserve(static_cast<std::size_t>(binomial(m, k)));
  if (k == 0) {
    out.push_back(Subset{});
    return out;
  }
  // Index combination idx[0] < ... < idx[k-1] into elems, advanced in
  // lexicographic order; member-list order follows since elems is ascending.
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Subset s;
    for (int i : idx) s.add(elems[i]);
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Subset> enumerate_subsets(int n, int k) {
  check_ground_size(n);
  if (k < 0 || k > n)
    throw parameter_error("enumerate_subsets: need 0 <= k <= n, got k=" + std::to_string(k));
  return enumerate_subsets_of(Subset{(std::uint32_t{1} << n) - 1}, k);
}

std::int64_t subset_rank(int n, Subset s) {
  check_ground_size(n);
  const std::vector<int> c = s.members();
  const int k = static_cast<int>(c.size());
  std::int64_t rank = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int u = prev + 1; u < c[i]; ++u) rank += binomial(n - u, k - i - 1);
    prev = c[i];
  }
  return rank;
}

}  // namespace flaggraph
