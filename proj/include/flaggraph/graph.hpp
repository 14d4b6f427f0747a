#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flaggraph/flags.hpp"

namespace flaggraph {

// Constructions refuse instances above this many vertices unless overridden;
// pair scans and automorphism search are quadratic or worse.
inline constexpr int kDefaultVertexCap = 20000;

enum class GraphKind { GeneralPosition, Kneser, AlmostIdentical };

// Two flags are in general position when every cross pair of members is
// either disjoint or covers [n].
bool is_general_position(int n, const Flag& f, const Flag& g);

// Immutable simple undirected graph over a canonical flag enumeration.
// Adjacency rows are bit-vectors over vertex indices; common-neighbour
// counting is a word-parallel intersection popcount.
class Graph {
 public:
  int vertex_count() const { return n_vertices_; }
  int ground_n() const { return ground_n_; }
  GraphKind kind() const { return kind_; }

  const Flag& label(int v) const { return labels_[v]; }
  const std::vector<Flag>& labels() const { return labels_; }
  int vertex_of(const Flag& f) const;  // throws parameter_error if absent

  bool adjacent(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  int degree(int v) const;
  std::int64_t edge_count() const;
  std::vector<int> neighbors(int v) const;

  // |N(u) ∩ N(v)|; u == v yields the degree.
  int common_neighbor_count(int u, int v) const;

  // Maximal connected vertex sets, each ascending, ordered by least vertex.
  std::vector<std::vector<int>> connected_components() const;

  // Classes of identical open neighbourhoods N(u) = N(v), same ordering.
  std::vector<std::vector<int>> twin_classes() const;

  // Deterministic DOT text: one vertex line `v<i> [label="..."]` per vertex in
  // ascending order, then one edge line `v<i> -- v<j>` (i < j) in ascending
  // (i, j) order.
  std::string to_dot() const;

  int words_per_row() const { return words_; }
  const std::uint64_t* row(int v) const {
    return rows_.data() + static_cast<std::size_t>(v) * words_;
  }

  // Builds from an explicit label list and symmetric adjacency predicate.
  template <typename Adjacent>
  static Graph build(int ground_n, GraphKind kind, std::vector<Flag> labels,
                     Adjacent&& adjacent_fn) {
    Graph g(ground_n, kind, std::move(labels));
    const int n = g.n_vertices_;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (adjacent_fn(g.labels_[u], g.labels_[v])) {
          g.set_edge(u, v);
        }
    return g;
  }

 private:
  Graph(int ground_n, GraphKind kind, std::vector<Flag> labels);
  void set_edge(int u, int v);

  int ground_n_;
  GraphKind kind_;
  int n_vertices_;
  int words_;
  std::vector<Flag> labels_;
  std::vector<std::uint64_t> rows_;
  std::unordered_map<Flag, int, FlagHash> index_;
};

// Γ(n,T): vertices are the flags of type T in canonical order, edges join
// flags in general position.
Graph build_gpg(int n, const FlagType& type, int vertex_cap = kDefaultVertexCap);

// KG(n,k): k-subsets with edges between disjoint pairs.
Graph build_kneser(int n, int k, int vertex_cap = kDefaultVertexCap);

// AIG(n,k): k-subsets with edges between pairs meeting in k-1 elements.
Graph build_aig(int n, int k, int vertex_cap = kDefaultVertexCap);

// True iff `map` (image of each G1 vertex) is a bijection preserving
// adjacency and non-adjacency.  Throws on length mismatch.
bool verify_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& map);

// The vertex map sending each G1 label to the G2 vertex labelled with its
// complement flag; the Kneser/complement reductions use this.
std::vector<int> complement_label_map(const Graph& g1, const Graph& g2);

}  // namespace flaggraph
