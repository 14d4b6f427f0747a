#include "flaggraph/flags.hpp"

#include <algorithm>

namespace flaggraph {

void check_flag_type(int n, const FlagType& type) {
  check_ground_size(n);
  if (type.empty()) throw parameter_error("flag type must be non-empty");
  int prev = 0;
  for (int t : type) {
    if (t <= prev) throw parameter_error("flag type sizes must be strictly increasing");
    if (t < 1 || t > n - 1)
      throw parameter_error("flag type sizes must be proper: 1 <= t <= n-1, got " +
                            std::to_string(t));
    prev = t;
  }
}

FlagType complement_type(int n, const FlagType& type) {
  FlagType out;
  out.reserve(type.size());
  for (auto it = type.rbegin(); it != type.rend(); ++it) out.push_back(n - *it);
  return out;
}

FlagType Flag::type() const {
  FlagType t;
  t.reserve(chain.size());
  for (const Subset& s : chain) t.push_back(s.size());
  return t;
}

std::string Flag::to_string() const {
  std::string out;
  bool first = true;
  for (const Subset& s : chain) {
    if (!first) out += "⊂";
    out += s.to_string();
    first = false;
  }
  return out;
}

bool is_valid_flag(int n, const Flag& f) {
  if (n < 1 || n > kMaxGroundSize || f.chain.empty()) return false;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::size_t i = 0; i < f.chain.size(); ++i) {
    const Subset& s = f.chain[i];
    if ((s.bits & ~full) != 0 || s.empty() || s.bits == full) return false;
    if (i > 0 && !(f.chain[i - 1].subset_of(s) && f.chain[i - 1] != s)) return false;
  }
  return true;
}

std::int64_t flag_count(int n, const FlagType& type) {
  check_flag_type(n, type);
  std::int64_t count = binomial(n, type.back());
  for (std::size_t i = type.size() - 1; i > 0; --i)
    count *= binomial(type[i], type[i - 1]);
  return count;
}

namespace {

// Fill chains below `upper` (the already chosen members, largest first in
// `partial`), recursing from size index `level` down to 0.
void extend_down(const FlagType& type, int level, Subset upper,
                 std::vector<Subset>& partial, std::vector<Flag>& out) {
  if (level < 0) {
    Flag f;
    f.chain.assign(partial.rbegin(), partial.rend());
    out.push_back(std::move(f));
    return;
  }
  for (const Subset& s : enumerate_subsets_of(upper, type[level])) {
    partial.push_back(s);
    extend_down(type, level - 1, s, partial, out);
    partial.pop_back();
  }
}

}  // namespace

std::vector<Flag> enumerate_flags(int n, const FlagType& type) {
  check_flag_type(n, type);
  std::vector<Flag> out;
  out.reserve(static_cast<std::size_t>(flag_count(n, type)));
  std::vector<Subset> partial;
  partial.reserve(type.size());
  extend_down(type, static_cast<int>(type.size()) - 1,
              Subset{(std::uint32_t{1} << n) - 1}, partial, out);
  return out;
}

Flag complement_flag(int n, const Flag& f) {
  if (!is_valid_flag(n, f)) throw parameter_error("complement_flag: invalid flag");
  Flag out;
  out.chain.reserve(f.chain.size());
  for (auto it = f.chain.rbegin(); it != f.chain.rend(); ++it)
    out.chain.push_back(it->complement(n));
  return out;
}

FlagIndexer::FlagIndexer(int n, FlagType type)
    : n_(n), type_(std::move(type)), flags_(enumerate_flags(n, type_)) {
  index_.reserve(flags_.size() * 2);
  for (int i = 0; i < static_cast<int>(flags_.size()); ++i) index_.emplace(flags_[i], i);
}

int FlagIndexer::index_of(const Flag& f) const {
  auto it = index_.find(f);
  if (it == index_.end())
    throw parameter_error("flag is not a member of this enumeration: " + f.to_string());
  return it->second;
}

}  // namespace flaggraph
