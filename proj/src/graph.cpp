#include "flaggraph/graph.hpp"

#include <bit>
#include <map>

namespace flaggraph {

bool is_general_position(int n, const Flag& f, const Flag& g) {
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (const Subset& x : f.chain)
    for (const Subset& y : g.chain) {
      const bool disjoint = (x.bits & y.bits) == 0;
      const bool covering = (x.bits | y.bits) == full;
      if (!disjoint && !covering) return false;
    }
  return true;
}

Graph::Graph(int ground_n, GraphKind kind, std::vector<Flag> labels)
    : ground_n_(ground_n),
      kind_(kind),
      n_vertices_(static_cast<int>(labels.size())),
      words_((n_vertices_ + 63) / 64),
      labels_(std::move(labels)),
      rows_(static_cast<std::size_t>(n_vertices_) * words_, 0) {
  index_.reserve(labels_.size() * 2);
  for (int i = 0; i < n_vertices_; ++i) index_.emplace(labels_[i], i);
}

void Graph::set_edge(int u, int v) {
  rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

int Graph::vertex_of(const Flag& f) const {
  auto it = index_.find(f);
  if (it == index_.end())
    throw parameter_error("no vertex with label " + f.to_string());
  return it->second;
}

int Graph::degree(int v) const {
  const std::uint64_t* r = row(v);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::int64_t Graph::edge_count() const {
  std::int64_t total = 0;
  for (int v = 0; v < n_vertices_; ++v) total += degree(v);
  return total / 2;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w)
    for (std::uint64_t m = r[w]; m != 0; m &= m - 1)
      out.push_back(w * 64 + std::countr_zero(m));
  return out;
}

int Graph::common_neighbor_count(int u, int v) const {
  const std::uint64_t* a = row(u);
  const std::uint64_t* b = row(v);
  int c = 0;
  for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

std::vector<std::vector<int>> Graph::connected_components() const {
  std::vector<std::vector<int>> components;
  std::vector<bool> seen(n_vertices_, false);
  std::vector<int> stack;
  for (int start = 0; start < n_vertices_; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp;
    stack.push_back(start);
    seen[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : neighbors(v))
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

std::vector<std::vector<int>> Graph::twin_classes() const {
  std::map<std::vector<std::uint64_t>, int> by_row;
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < n_vertices_; ++v) {
    std::vector<std::uint64_t> key(row(v), row(v) + words_);
    auto [it, inserted] = by_row.emplace(std::move(key), static_cast<int>(classes.size()));
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

std::string Graph::to_dot() const {
  std::string out = "graph G {\n";
  for (int v = 0; v < n_vertices_; ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" + labels_[v].to_string() + "\"]\n";
  }
  for (int u = 0; u < n_vertices_; ++u)
    for (int v = u + 1; v < n_vertices_; ++v)
      if (adjacent(u, v))
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + "\n";
  out += "}\n";
  return out;
}

namespace {

void check_vertex_cap(std::int64_t n_vertices, int vertex_cap) {
  if (n_vertices > vertex_cap)
    throw budget_error("construction would need " + std::to_string(n_vertices) +
                       " vertices, above the cap of " + std::to_string(vertex_cap));
}

std::vector<Flag> subset_labels(int n, int k) {
  if (k < 1 || k > n - 1)
    throw parameter_error("need 1 <= k <= n-1, got k=" + std::to_string(k));
  std::vector<Flag> labels;
  for (const Subset& s : enumerate_subsets(n, k)) labels.push_back(Flag{{s}});
  return labels;
}

}  // namespace

Graph build_gpg(int n, const FlagType& type, int vertex_cap) {
  check_flag_type(n, type);
  check_vertex_cap(flag_count(n, type), vertex_cap);
  return Graph::build(n, GraphKind::GeneralPosition, enumerate_flags(n, type),
                      [n](const Flag& f, const Flag& g) { return is_general_position(n, f, g); });
}

Graph build_kneser(int n, int k, int vertex_cap) {
  check_ground_size(n);
  std::vector<Flag> labels = subset_labels(n, k);
  check_vertex_cap(static_cast<std::int64_t>(labels.size()), vertex_cap);
  return Graph::build(n, GraphKind::Kneser, std::move(labels),
                      [](const Flag& f, const Flag& g) {
                        return (f.chain[0].bits & g.chain[0].bits) == 0;
                      });
}

Graph build_aig(int n, int k, int vertex_cap) {
  check_ground_size(n);
  std::vector<Flag> labels = subset_labels(n, k);
  check_vertex_cap(static_cast<std::int64_t>(labels.size()), vertex_cap);
  return Graph::build(n, GraphKind::AlmostIdentical, std::move(labels),
                      [k](const Flag& f, const Flag& g) {
                        return Subset{f.chain[0].bits & g.chain[0].bits}.size() == k - 1;
                      });
}

bool verify_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != g1.vertex_count())
    throw parameter_error("vertex map length does not match the first graph");
  if (g1.vertex_count() != g2.vertex_count()) return false;
  const int n = g1.vertex_count();
  std::vector<bool> hit(n, false);
  for (int v : map) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g1.adjacent(u, v) != g2.adjacent(map[u], map[v])) return false;
  return true;
}

std::vector<int> complement_label_map(const Graph& g1, const Graph& g2) {
  std::vector<int> map;
  map.reserve(g1.vertex_count());
  for (int v = 0; v < g1.vertex_count(); ++v)
    map.push_back(g2.vertex_of(complement_flag(g1.ground_n(), g1.label(v))));
  return map;
}

}  // namespace flaggraph
