// Simple undirected graphs on vertex set {0..n-1}, stored as dense
// symmetric bitset rows. Graphs are immutable values once built; every
// operation here is a pure function.
#ifndef QG_GRAPH_HPP
#define QG_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qg {

constexpr int kMaxVertices = 64;

/// A set of vertices of some host graph, one bit per vertex.
using VertexSet = std::uint64_t;

inline int set_size(VertexSet s) { return std::popcount(s); }

inline bool set_contains(VertexSet s, int v) { return (s >> v) & VertexSet{1}; }

inline VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= VertexSet{1} << v;
  return s;
}

inline VertexSet full_set(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Members in ascending order.
inline std::vector<int> set_members(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = std::countr_zero(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

/// Undirected edge, kept normalized with u < v.
struct Edge {
  int u = 0, v = 0;
  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}
  friend bool operator==(Edge a, Edge b) { return a.u == b.u && a.v == b.v; }
  friend bool operator<(Edge a, Edge b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0)), 0) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("Graph: vertex count out of range");
  }

  int order() const { return n_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return set_contains(adj_[static_cast<size_t>(u)], v);
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    adj_[static_cast<size_t>(u)] |= VertexSet{1} << v;
    adj_[static_cast<size_t>(v)] |= VertexSet{1} << u;
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<size_t>(u)] &= ~(VertexSet{1} << v);
    adj_[static_cast<size_t>(v)] &= ~(VertexSet{1} << u);
  }

  /// Neighbor set of v as a bit mask.
  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
  }

  int degree(int v) const { return set_size(neighbors(v)); }

  int edge_count() const {
    int twice = 0;
    for (VertexSet row : adj_) twice += set_size(row);
    return twice / 2;
  }

  /// Edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
      VertexSet higher = adj_[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
      for (int v : set_members(higher)) out.emplace_back(u, v);
    }
    return out;
  }

  bool has_edge(Edge e) const { return e.u != e.v && adjacent(e.u, e.v); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

inline int min_degree(const Graph& g) {
  int d = g.order() == 0 ? 0 : g.order();
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return g.order() == 0 ? 0 : d;
}

inline bool is_regular(const Graph& g, int d) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

inline Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

/// Vertex-disjoint juxtaposition; h's vertices are shifted by g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.order() + h.order() > kMaxVertices)
    throw std::invalid_argument("disjoint_union: too many vertices");
  Graph out(g.order() + h.order());
  for (Edge e : g.edges()) out.add_edge(e.u, e.v);
  for (Edge e : h.edges()) out.add_edge(e.u + g.order(), e.v + g.order());
  return out;
}

/// Disjoint union plus all edges between the two parts.
inline Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

inline Graph copies(int m, const Graph& g) {
  if (m < 1) throw std::invalid_argument("copies: m must be positive");
  Graph out = g;
  for (int i = 1; i < m; ++i) out = disjoint_union(out, g);
  return out;
}

/// Subgraph induced by s, vertices relabeled 0..|s|-1 preserving order.
inline Graph induced(const Graph& g, VertexSet s) {
  if ((s & ~full_set(g.order())) != 0)
    throw std::out_of_range("induced: member out of range");
  std::vector<int> members = set_members(s);
  Graph out(static_cast<int>(members.size()));
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j]))
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

/// Vertices of L(g) are the edges of g in lexicographic (min, max) order;
/// two of them are adjacent iff the edges share an endpoint.
inline Graph line_graph(const Graph& g) {
  std::vector<Edge> es = g.edges();
  if (es.size() > static_cast<size_t>(kMaxVertices))
    throw std::invalid_argument("line_graph: too many edges");
  Graph out(static_cast<int>(es.size()));
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j)
      if (es[i].u == es[j].u || es[i].u == es[j].v || es[i].v == es[j].u ||
          es[i].v == es[j].v)
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

/// Neighborhood of a whole set, excluding the set itself.
inline VertexSet neighborhood(const Graph& g, VertexSet s) {
  VertexSet out = 0;
  for (int v : set_members(s)) out |= g.neighbors(v);
  return out & ~s;
}

/// Connected components of g restricted to `within`, as vertex sets in
/// ascending order of their smallest member.
inline std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet seen = 0;
  for (int start = 0; start < g.order(); ++start) {
    if (!set_contains(within, start) || set_contains(seen, start)) continue;
    VertexSet comp = 0;
    VertexSet frontier = VertexSet{1} << start;
    while (frontier) {
      comp |= frontier;
      VertexSet next = 0;
      for (int v : set_members(frontier)) next |= g.neighbors(v);
      frontier = next & within & ~comp;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.order() <= 1 || components(g, full_set(g.order())).size() == 1;
}

/// True iff some three mutually adjacent vertices exist.
inline bool has_triangle(const Graph& g) {
  for (Edge e : g.edges())
    if (g.neighbors(e.u) & g.neighbors(e.v)) return true;
  return false;
}

inline bool edge_in_triangle(const Graph& g, Edge e) {
  return (g.neighbors(e.u) & g.neighbors(e.v)) != 0;
}

/// Calls fn(mask) for every k-subset of `universe`, in lexicographic order
/// of the ascending member lists.
template <typename Fn>
void for_each_subset(const std::vector<int>& universe, int k, Fn&& fn) {
  const int m = static_cast<int>(universe.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    VertexSet mask = 0;
    for (int i : idx) mask |= VertexSet{1} << universe[static_cast<size_t>(i)];
    fn(mask);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

}  // namespace qg

#endif  // QG_GRAPH_HPP
