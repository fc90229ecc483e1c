// Edge and subgraph contraction, (quasi) k-contractibility, contraction
// criticality, and quasi fragments/atoms.
#ifndef QG_CONTRACTION_HPP
#define QG_CONTRACTION_HPP

#include <cassert>
#include <optional>
#include <vector>

#include "qg/connectivity.hpp"
#include "qg/graph.hpp"

namespace qg {

/// G/e together with the bookkeeping needed to trace the merged vertex.
/// Relabeling: the merged vertex takes min(x, y)'s slot and vertices above
/// max(x, y) shift down by one.
struct ContractionResult {
  Graph graph;
  int merged_vertex = -1;
  Edge origin;
};

inline ContractionResult contract_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e)) throw std::invalid_argument("contract_edge: not an edge");
  const int x = e.u, y = e.v;  // x < y
  auto relabel = [&](int v) { return v - (v > y ? 1 : 0); };
  Graph h(g.order() - 1);
  for (Edge f : g.edges()) {
    int a = (f.u == y) ? x : f.u;
    int b = (f.v == y) ? x : f.v;
    if (a == b) continue;  // the contracted edge itself
    h.add_edge(relabel(a), relabel(b));  // double edges collapse in the bitset
  }
  return {std::move(h), relabel(x), e};
}

/// Identify each connected component of g[s] to a single vertex; loops
/// removed and double edges merged. Survivors keep their relative order,
/// with each component represented by its smallest member.
inline Graph contract_subgraph(const Graph& g, VertexSet s) {
  if (s == 0) throw std::invalid_argument("contract_subgraph: empty set");
  if ((s & ~full_set(g.order())) != 0)
    throw std::out_of_range("contract_subgraph: member out of range");
  std::vector<int> rep(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) rep[static_cast<size_t>(v)] = v;
  for (VertexSet comp : components(g, s)) {
    int head = set_members(comp).front();
    for (int v : set_members(comp)) rep[static_cast<size_t>(v)] = head;
  }
  std::vector<int> newlabel(static_cast<size_t>(g.order()), -1);
  int next = 0;
  for (int v = 0; v < g.order(); ++v)
    if (rep[static_cast<size_t>(v)] == v) newlabel[static_cast<size_t>(v)] = next++;
  Graph h(next);
  for (Edge f : g.edges()) {
    int a = newlabel[static_cast<size_t>(rep[static_cast<size_t>(f.u)])];
    int b = newlabel[static_cast<size_t>(rep[static_cast<size_t>(f.v)])];
    if (a != b) h.add_edge(a, b);
  }
  return h;
}

enum class ContractionVerdict {
  quasi_k,     // G/e is quasi k-connected
  e0_member,   // (k-1)-connected but not quasi k-connected
  below        // not even (k-1)-connected
};

inline const char* to_string(ContractionVerdict v) {
  switch (v) {
    case ContractionVerdict::quasi_k: return "quasi_k";
    case ContractionVerdict::e0_member: return "e0_member";
    default: return "below";
  }
}

/// delta(G/e) >= 4; when the host is quasi 5-connected this certifies
/// that G/e is 4-connected, so the flow computation can be skipped.
inline bool lemma4_pretest(const Graph& g, Edge e) {
  if (!g.has_edge(e)) throw std::invalid_argument("lemma4_pretest: not an edge");
  return min_degree(contract_edge(g, e).graph) >= 4;
}

/// Caller guarantees g is quasi k-connected. For k = 5 the minimum-degree
/// pretest replaces the 4-connectivity flow check (asserted in debug).
inline ContractionVerdict classify_contraction(const Graph& g, Edge e, int k) {
  Graph h = contract_edge(g, e).graph;
  if (k == 5) {
    if (min_degree(h) < 4) {
      // kappa <= delta, so (k-1)-connectivity is already lost
      assert(vertex_connectivity(h) < 4);
      return ContractionVerdict::below;
    }
    assert(vertex_connectivity(h) >= 4);
    return find_nontrivial_cut(h, 4).has_value() ? ContractionVerdict::e0_member
                                                 : ContractionVerdict::quasi_k;
  }
  if (vertex_connectivity(h) < k - 1) return ContractionVerdict::below;
  return find_nontrivial_cut(h, k - 1).has_value()
             ? ContractionVerdict::e0_member
             : ContractionVerdict::quasi_k;
}

inline bool is_k_contractible(const Graph& g, Edge e, int k) {
  if (!g.has_edge(e)) throw std::invalid_argument("is_k_contractible: not an edge");
  if (g.edge_count() == g.order() * (g.order() - 1) / 2)
    throw std::invalid_argument("is_k_contractible: host must be non-complete");
  if (vertex_connectivity(g) < k)
    throw std::invalid_argument("is_k_contractible: host must be k-connected");
  return vertex_connectivity(contract_edge(g, e).graph) >= k;
}

/// All edges whose contraction stays quasi k-connected, in lexicographic
/// order. Precondition: g itself is quasi k-connected.
inline std::vector<Edge> quasi_contractible_edges(const Graph& g, int k) {
  if (!is_quasi_k_connected(g, k))
    throw std::invalid_argument(
        "quasi_contractible_edges: host must be quasi k-connected");
  std::vector<Edge> out;
  for (Edge e : g.edges())
    if (classify_contraction(g, e, k) == ContractionVerdict::quasi_k)
      out.push_back(e);
  return out;
}

/// A side F of a k-cut T = N_G(F) with both sides >= 2; "with respect to
/// e" means both ends of e lie in T.
struct QuasiFragment {
  VertexSet fragment = 0;
  VertexSet cut = 0;
  Edge with_respect_to;
};

/// All quasi fragments with respect to e, found by enumerating the
/// (k-2)-subsets completing {x, y} to a candidate cut, sorted by fragment
/// vertex list.
inline std::vector<QuasiFragment> quasi_fragments(const Graph& g, Edge e,
                                                  int k) {
  if (!g.has_edge(e)) throw std::invalid_argument("quasi_fragments: not an edge");
  std::vector<QuasiFragment> out;
  const VertexSet ends = (VertexSet{1} << e.u) | (VertexSet{1} << e.v);
  std::vector<int> rest;
  for (int v = 0; v < g.order(); ++v)
    if (!set_contains(ends, v)) rest.push_back(v);
  for_each_subset(rest, k - 2, [&](VertexSet extra) {
    const VertexSet cut = ends | extra;
    std::vector<VertexSet> comps = components(g, full_set(g.order()) & ~cut);
    if (comps.size() < 2) return;
    const int c = static_cast<int>(comps.size());
    for (unsigned pick = 1; pick + 1 < (1u << c); ++pick) {
      VertexSet frag = 0;
      for (int i = 0; i < c; ++i)
        if ((pick >> i) & 1) frag |= comps[static_cast<size_t>(i)];
      VertexSet other = 0;
      for (int i = 0; i < c; ++i)
        if (!((pick >> i) & 1)) other |= comps[static_cast<size_t>(i)];
      if (set_size(frag) < 2 || set_size(other) < 2) continue;
      if (neighborhood(g, frag) != cut) continue;
      out.push_back({frag, cut, e});
    }
  });
  std::sort(out.begin(), out.end(), [](const QuasiFragment& a,
                                       const QuasiFragment& b) {
    return set_members(a.fragment) < set_members(b.fragment);
  });
  return out;
}

/// Minimum-cardinality fragment over all fragments with respect to any of
/// the listed edges; ties broken by lexicographically smallest fragment.
inline std::optional<QuasiFragment> quasi_atom(const Graph& g,
                                               const std::vector<Edge>& edges,
                                               int k) {
  std::optional<QuasiFragment> best;
  for (Edge e : edges) {
    for (const QuasiFragment& f : quasi_fragments(g, e, k)) {
      if (!best || set_size(f.fragment) < set_size(best->fragment) ||
          (set_size(f.fragment) == set_size(best->fragment) &&
           set_members(f.fragment) < set_members(best->fragment)))
        best = f;
    }
  }
  return best;
}

/// No edge is (quasi) k-contractible.
inline bool is_contraction_critical(const Graph& g, int k, bool quasi) {
  if (quasi) {
    if (!is_quasi_k_connected(g, k))
      throw std::invalid_argument(
          "is_contraction_critical: host must be quasi k-connected");
    return quasi_contractible_edges(g, k).empty();
  }
  if (vertex_connectivity(g) < k)
    throw std::invalid_argument(
        "is_contraction_critical: host must be k-connected");
  for (Edge e : g.edges())
    if (vertex_connectivity(contract_edge(g, e).graph) >= k) return false;
  return true;
}

}  // namespace qg

#endif  // QG_CONTRACTION_HPP
