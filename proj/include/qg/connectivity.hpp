// Vertex connectivity, vertex-cut enumeration and classification,
// quasi k-connectivity, and cyclic 4-connectivity for cubic graphs.
#ifndef QG_CONNECTIVITY_HPP
#define QG_CONNECTIVITY_HPP

#include <optional>
#include <vector>

#include "qg/graph.hpp"

namespace qg {

/// Two sides and a cut partitioning the host's vertex set, with no edge
/// joining the sides.
struct Separation {
  VertexSet cut = 0;
  VertexSet side_a = 0;
  VertexSet side_b = 0;
};

inline bool separation_valid(const Graph& g, const Separation& s) {
  VertexSet all = full_set(g.order());
  if ((s.cut | s.side_a | s.side_b) != all) return false;
  if ((s.cut & s.side_a) || (s.cut & s.side_b) || (s.side_a & s.side_b))
    return false;
  if (s.side_a == 0 || s.side_b == 0) return false;
  for (int v : set_members(s.side_a))
    if (g.neighbors(v) & s.side_b) return false;
  return true;
}

enum class CutClass { trivial, nontrivial };

namespace detail {

// Maximum number of vertex-disjoint paths from the source set to the sink
// set, capped at `limit`. Menger via unit-vertex-capacity max-flow on the
// split-node network. With share_terminals the paths may reuse source and
// sink vertices (internally disjoint paths, the single-pair Menger setup);
// without it the paths are pairwise disjoint outright.
inline int disjoint_path_count(const Graph& g, VertexSet sources,
                               VertexSet sinks, int limit,
                               bool share_terminals = true) {
  const int n = g.order();
  const int nodes = 2 * n + 2;  // in(v)=2v, out(v)=2v+1, S=2n, T=2n+1
  const int S = 2 * n, T = 2 * n + 1;
  const int big = n + 2;
  std::vector<int> cap(static_cast<size_t>(nodes * nodes), 0);
  auto at = [&](int a, int b) -> int& {
    return cap[static_cast<size_t>(a * nodes + b)];
  };
  for (int v = 0; v < n; ++v) {
    bool terminal = set_contains(sources | sinks, v);
    at(2 * v, 2 * v + 1) = (terminal && share_terminals) ? big : 1;
    if (set_contains(sources, v)) at(S, 2 * v) = big;
    if (set_contains(sinks, v)) at(2 * v + 1, T) = big;
  }
  for (Edge e : g.edges()) {
    at(2 * e.u + 1, 2 * e.v) = big;
    at(2 * e.v + 1, 2 * e.u) = big;
  }
  int flow = 0;
  std::vector<int> prev(static_cast<size_t>(nodes));
  while (flow < limit) {
    std::fill(prev.begin(), prev.end(), -1);
    std::vector<int> queue{S};
    prev[static_cast<size_t>(S)] = S;
    for (size_t qi = 0; qi < queue.size() && prev[static_cast<size_t>(T)] < 0;
         ++qi) {
      int a = queue[qi];
      for (int b = 0; b < nodes; ++b) {
        if (at(a, b) > 0 && prev[static_cast<size_t>(b)] < 0) {
          prev[static_cast<size_t>(b)] = a;
          queue.push_back(b);
        }
      }
    }
    if (prev[static_cast<size_t>(T)] < 0) break;
    for (int b = T; b != S; b = prev[static_cast<size_t>(b)]) {
      int a = prev[static_cast<size_t>(b)];
      --at(a, b);
      ++at(b, a);
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

/// kappa(g); complete graphs get n-1 by convention, disconnected get 0.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  int best = n - 1;
  bool any_pair = false;
  for (int s = 0; s < n && best > 0; ++s) {
    for (int t = s + 1; t < n && best > 0; ++t) {
      if (g.adjacent(s, t)) continue;
      any_pair = true;
      best = std::min(best, detail::disjoint_path_count(
                                g, VertexSet{1} << s, VertexSet{1} << t, best));
    }
  }
  return any_pair ? best : n - 1;
}

/// Exhaustive-subset oracle; n <= 12 enforced.
inline int brute_force_connectivity(const Graph& g) {
  const int n = g.order();
  if (n > 12)
    throw std::invalid_argument("brute_force_connectivity: n too large");
  if (n <= 1) return 0;
  VertexSet all = full_set(n);
  for (int k = 0; k <= n - 2; ++k) {
    bool found = false;
    std::vector<int> vs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vs[static_cast<size_t>(i)] = i;
    for_each_subset(vs, k, [&](VertexSet cut) {
      if (found) return;
      if (components(g, all & ~cut).size() >= 2) found = true;
    });
    if (found) return k;
  }
  return n - 1;
}

/// True iff the components of g - cut can be grouped into two sides, each
/// with at least two vertices. Component groupings place whole components
/// on one side, so a valid grouping exists iff some union of components
/// has size in [2, total-2].
inline bool is_nontrivial_cut(const Graph& g, VertexSet cut) {
  std::vector<VertexSet> comps = components(g, full_set(g.order()) & ~cut);
  if (comps.size() < 2) return false;
  int total = 0, largest = 0;
  for (VertexSet c : comps) {
    total += set_size(c);
    largest = std::max(largest, set_size(c));
  }
  if (total < 4) return false;
  if (largest >= 2) return total - largest >= 2;
  return true;  // all singletons, total >= 4
}

inline bool is_cut(const Graph& g, VertexSet cut) {
  return components(g, full_set(g.order()) & ~cut).size() >= 2;
}

/// Every k-subset T with g - T disconnected, classified, in lexicographic
/// vertex-set order.
inline std::vector<std::pair<VertexSet, CutClass>> enumerate_cuts(
    const Graph& g, int k) {
  if (k >= g.order() - 1)
    throw std::invalid_argument("enumerate_cuts: need k < n - 1");
  std::vector<std::pair<VertexSet, CutClass>> out;
  std::vector<int> vs(static_cast<size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) vs[static_cast<size_t>(i)] = i;
  for_each_subset(vs, k, [&](VertexSet cut) {
    if (!is_cut(g, cut)) return;
    out.emplace_back(cut, is_nontrivial_cut(g, cut) ? CutClass::nontrivial
                                                    : CutClass::trivial);
  });
  return out;
}

/// Some nontrivial (k-1)-cut if one exists, lexicographically first.
inline std::optional<VertexSet> find_nontrivial_cut(const Graph& g, int k) {
  std::optional<VertexSet> found;
  if (k >= g.order()) return found;
  std::vector<int> vs(static_cast<size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) vs[static_cast<size_t>(i)] = i;
  for_each_subset(vs, k, [&](VertexSet cut) {
    if (!found && is_nontrivial_cut(g, cut)) found = cut;
  });
  return found;
}

/// (k-1)-connected with no nontrivial (k-1)-cut.
inline bool is_quasi_k_connected(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("is_quasi_k_connected: need k >= 2");
  if (vertex_connectivity(g) < k - 1) return false;
  return !find_nontrivial_cut(g, k - 1).has_value();
}

namespace detail {

inline bool component_has_cycle(const Graph& g, VertexSet comp) {
  int edges = 0;
  for (int v : set_members(comp)) edges += set_size(g.neighbors(v) & comp);
  return edges / 2 >= set_size(comp);
}

// All distinct vertex supports of cycles. Each cycle is rooted at its
// smallest vertex; the DFS forces the second vertex below the last one so
// each cycle is traversed once per orientation pair.
inline std::vector<VertexSet> cycle_supports(const Graph& g) {
  std::vector<VertexSet> out;
  const int n = g.order();
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    VertexSet above = 0;
    for (int v = root; v < n; ++v) above |= VertexSet{1} << v;
    // iterative DFS over simple paths root -> ... using vertices > root
    struct Frame {
      int vertex;
      std::vector<int> nbrs;
      size_t next = 0;
    };
    std::vector<Frame> frames;
    VertexSet on_path = VertexSet{1} << root;
    frames.push_back({root, set_members(g.neighbors(root) & above), 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next >= f.nbrs.size()) {
        on_path &= ~(VertexSet{1} << f.vertex);
        frames.pop_back();
        continue;
      }
      int w = f.nbrs[f.next++];
      if (w == root) {
        if (frames.size() >= 3) out.push_back(on_path);
        continue;
      }
      if (set_contains(on_path, w)) continue;
      on_path |= VertexSet{1} << w;
      frames.push_back({w, set_members(g.neighbors(w) & above), 0});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// Cross-check: no removal of at most three edges leaves two components
/// that each contain a cycle.
inline bool cyclic_edge_connectivity_at_least_4(const Graph& g) {
  std::vector<Edge> es = g.edges();
  const int m = static_cast<int>(es.size());
  std::vector<int> ids(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) ids[static_cast<size_t>(i)] = i;
  for (int k = 0; k <= 3; ++k) {
    bool violated = false;
    // reuse subset enumeration over edge indices
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (!violated) {
      Graph h = g;
      for (int i : idx) h.remove_edge(es[static_cast<size_t>(i)].u,
                                      es[static_cast<size_t>(i)].v);
      int cyclic_comps = 0;
      for (VertexSet c : components(h, full_set(h.order())))
        if (detail::component_has_cycle(h, c)) ++cyclic_comps;
      if (cyclic_comps >= 2) violated = true;
      int i = k - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == m - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    if (violated) return false;
  }
  return true;
}

/// For a cubic graph: four pairwise vertex-disjoint paths exist between
/// every two vertex-disjoint cycles (vacuously true when no such pair
/// exists). Path counts via Menger max-flow between the cycle supports.
inline bool is_cyclically_4_connected_cubic(const Graph& g) {
  if (!is_regular(g, 3))
    throw std::invalid_argument(
        "is_cyclically_4_connected_cubic: graph is not cubic");
  std::vector<VertexSet> cycles = detail::cycle_supports(g);
  for (size_t i = 0; i < cycles.size(); ++i) {
    for (size_t j = i + 1; j < cycles.size(); ++j) {
      if (cycles[i] & cycles[j]) continue;
      if (detail::disjoint_path_count(g, cycles[i], cycles[j], 4, false) < 4)
        return false;
    }
  }
  return true;
}

}  // namespace qg

#endif  // QG_CONNECTIVITY_HPP
