#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "flaggraph/subsets.hpp"

namespace flaggraph {

// A type is the strictly increasing list of chain sizes, each in 1..n-1.
using FlagType = std::vector<int>;

void check_flag_type(int n, const FlagType& type);

// Sizes map t -> n-t, reordered ascending.
FlagType complement_type(int n, const FlagType& type);

// A flag: a strict chain of proper non-empty subsets, ascending by size.
struct Flag {
  std::vector<Subset> chain;

  Flag() = default;
  explicit Flag(std::vector<Subset> c) : chain(std::move(c)) {}

  FlagType type() const;
  const Subset& bottom() const { return chain.front(); }
  const Subset& top() const { return chain.back(); }

  friend bool operator==(const Flag& a, const Flag& b) { return a.chain == b.chain; }
  friend bool operator!=(const Flag& a, const Flag& b) { return !(a == b); }

  // "{1}⊂{1,2,3}"
  std::string to_string() const;
};

struct FlagHash {
  std::size_t operator()(const Flag& f) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const Subset& s : f.chain) h = h * 0x100000001b3ull ^ s.bits;
    return h;
  }
};

bool is_valid_flag(int n, const Flag& f);

// |F^T_n| in closed form: C(n,t_r) * C(t_r,t_{r-1}) * ... * C(t_2,t_1).
std::int64_t flag_count(int n, const FlagType& type);

// Every flag of the given type exactly once.  Canonical order: sorted by the
// tuple (rank of top member, rank of next, ..., rank of bottom member) under
// the subset lexicographic rank.  Vertex ids of all graphs over F^T_n follow
// this order, which keeps same-top blocks contiguous.
std::vector<Flag> enumerate_flags(int n, const FlagType& type);

// Complement every member and reorder ascending; an involution onto the
// complement type.
Flag complement_flag(int n, const Flag& f);

// Canonical flag enumeration plus O(1) flag -> position lookup.
class FlagIndexer {
 public:
  FlagIndexer(int n, FlagType type);

  int ground_n() const { return n_; }
  const FlagType& type() const { return type_; }
  const std::vector<Flag>& flags() const { return flags_; }
  int size() const { return static_cast<int>(flags_.size()); }

  // Position in the canonical order; throws parameter_error if absent.
  int index_of(const Flag& f) const;

 private:
  int n_;
  FlagType type_;
  std::vector<Flag> flags_;
  std::unordered_map<Flag, int, FlagHash> index_;
};

}  // namespace flaggraph
