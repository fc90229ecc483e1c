// Handle addition, closure generation of cubic cyclically 4-connected
// graphs from the two seeds, exhaustive small-graph enumeration, and a
// cubic-graph corpus builder.
#ifndef QG_GENERATORS_HPP
#define QG_GENERATORS_HPP

#include <bit>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "qg/constructors.hpp"
#include "qg/graph.hpp"
#include "qg/patterns.hpp"

namespace qg {

/// Two edges of the host sharing no endpoint.
struct HandleSite {
  Edge e1, e2;
};

inline bool handle_site_valid(const Graph& g, const HandleSite& site) {
  if (!g.has_edge(site.e1) || !g.has_edge(site.e2)) return false;
  return site.e1.u != site.e2.u && site.e1.u != site.e2.v &&
         site.e1.v != site.e2.u && site.e1.v != site.e2.v;
}

/// Subdivide both site edges and join the two new internal vertices
/// (labels n and n+1). Adds 2 vertices and 3 edges; preserves cubicity.
inline Graph add_handle(const Graph& g, const HandleSite& site) {
  if (!handle_site_valid(g, site))
    throw std::invalid_argument("add_handle: site edges must be nonadjacent");
  const int n = g.order();
  Graph h(n + 2);
  for (Edge f : g.edges())
    if (!(f == site.e1) && !(f == site.e2)) h.add_edge(f.u, f.v);
  h.add_edge(site.e1.u, n);
  h.add_edge(site.e1.v, n);
  h.add_edge(site.e2.u, n + 1);
  h.add_edge(site.e2.v, n + 1);
  h.add_edge(n, n + 1);
  return h;
}

namespace detail {

// Breadth-first closure of `seeds` under an expansion step, deduplicated
// by canonical form and sorted by (order, canonical form).
inline std::vector<Graph> expansion_closure(
    std::vector<Graph> seeds, int max_n,
    const std::function<std::vector<Graph>(const Graph&)>& expand) {
  std::map<std::pair<int, std::string>, Graph> found;
  std::vector<Graph> frontier;
  for (Graph& s : seeds) {
    if (s.order() > max_n) continue;
    auto key = std::make_pair(s.order(), canonical_form(s));
    if (found.emplace(key, s).second) frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<Graph> next;
    for (const Graph& g : frontier) {
      if (g.order() + 2 > max_n) continue;
      for (Graph& h : expand(g)) {
        auto key = std::make_pair(h.order(), canonical_form(h));
        if (found.emplace(key, h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [key, g] : found) out.push_back(g);
  return out;
}

}  // namespace detail

/// Closure of {K33, cube} under handle addition over all valid sites,
/// deduplicated up to isomorphism; this is the class of cubic cyclically
/// 4-connected graphs with at most max_n vertices.
inline std::vector<Graph> generate_ccc4(int max_n) {
  if (max_n < 6 || max_n % 2 != 0)
    throw std::invalid_argument("generate_ccc4: max_n must be even and >= 6");
  return detail::expansion_closure(
      {k33(), cube()}, max_n, [](const Graph& g) {
        std::vector<Graph> out;
        std::vector<Edge> es = g.edges();
        for (size_t i = 0; i < es.size(); ++i)
          for (size_t j = i + 1; j < es.size(); ++j) {
            HandleSite site{es[i], es[j]};
            if (handle_site_valid(g, site)) out.push_back(add_handle(g, site));
          }
        return out;
      });
}

namespace detail {

// Subdivide two distinct edges (shared endpoints allowed) and join the
// internal vertices. Never creates parallels.
inline Graph edge_expansion(const Graph& g, Edge e1, Edge e2) {
  const int n = g.order();
  Graph h(n + 2);
  for (Edge f : g.edges())
    if (!(f == e1) && !(f == e2)) h.add_edge(f.u, f.v);
  h.add_edge(e1.u, n);
  h.add_edge(e1.v, n);
  h.add_edge(e2.u, n + 1);
  h.add_edge(e2.v, n + 1);
  h.add_edge(n, n + 1);
  return h;
}

}  // namespace detail

namespace detail {

// One representative per isomorphism class of connected cubic graphs on
// exactly n vertices, by vertex augmentation over max-degree-3 partial
// graphs with per-level canonical deduplication. Pruning: every deficient
// vertex must be satisfiable by the remaining vertices, the total
// deficiency must be realizable with the right parity, and a component
// already saturated at degree 3 can never reconnect.
inline std::vector<Graph> enumerate_cubic_exact(int n) {
  std::map<std::string, Graph> level;
  level.emplace(canonical_form(Graph(0)), Graph(0));
  for (int m = 1; m <= n; ++m) {
    const int rem = n - m;
    std::map<std::string, Graph> next;
    for (const auto& [key, g] : level) {
      std::vector<int> avail;
      for (int v = 0; v < m - 1; ++v)
        if (g.degree(v) < 3) avail.push_back(v);
      const int a = static_cast<int>(avail.size());
      for (unsigned mask = 0; mask < (1u << a); ++mask) {
        if (std::popcount(mask) > 3) continue;
        Graph h(m);
        for (Edge e : g.edges()) h.add_edge(e.u, e.v);
        for (int i = 0; i < a; ++i)
          if ((mask >> i) & 1) h.add_edge(avail[static_cast<size_t>(i)], m - 1);
        int needsum = 0;
        bool ok = true;
        for (int v = 0; v < m && ok; ++v) {
          const int need = 3 - h.degree(v);
          if (need > rem) ok = false;
          needsum += need;
        }
        if (!ok || 3 * rem < needsum || (3 * rem - needsum) % 2 != 0) continue;
        if (rem > 0 || needsum > 0) {
          bool saturated_component = false;
          for (VertexSet comp : components(h, full_set(m))) {
            bool open = false;
            for (int v : set_members(comp))
              if (h.degree(v) < 3) open = true;
            if (!open) saturated_component = true;
          }
          if (saturated_component) continue;
        }
        next.emplace(canonical_form(h), std::move(h));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [key, g] : level)
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace detail

/// All connected cubic graphs with at most max_n vertices, one per
/// isomorphism class, grouped by order. Counts per order are
/// cross-checked against published totals in the tests.
inline std::vector<Graph> generate_cubic_connected(int max_n) {
  if (max_n < 4 || max_n % 2 != 0)
    throw std::invalid_argument(
        "generate_cubic_connected: max_n must be even and >= 4");
  std::vector<Graph> out;
  for (int n = 4; n <= max_n; n += 2)
    for (Graph& g : detail::enumerate_cubic_exact(n)) out.push_back(std::move(g));
  return out;
}

/// One representative per isomorphism class of graphs on exactly n
/// vertices with minimum degree at least min_deg, by vertex augmentation
/// with level-wise degree bounds. Capped at n <= 10 for runtime.
inline std::vector<Graph> enumerate_graphs_min_degree(int n, int min_deg) {
  if (n < 0 || n > 10)
    throw std::invalid_argument("enumerate_graphs_min_degree: n too large");
  std::vector<std::pair<std::string, Graph>> level{{canonical_form(Graph(0)), Graph(0)}};
  for (int m = 1; m <= n; ++m) {
    const int bound = std::max(0, min_deg - (n - m));
    std::map<std::string, Graph> next;
    for (const auto& [key, g] : level) {
      const unsigned subsets = 1u << (m - 1);
      for (unsigned mask = 0; mask < subsets; ++mask) {
        Graph h(m);
        for (Edge e : g.edges()) h.add_edge(e.u, e.v);
        for (int v = 0; v < m - 1; ++v)
          if ((mask >> v) & 1) h.add_edge(v, m - 1);
        if (min_degree(h) < bound) continue;
        std::string c = canonical_form(h);
        next.emplace(std::move(c), std::move(h));
      }
    }
    level.assign(std::make_move_iterator(next.begin()),
                 std::make_move_iterator(next.end()));
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [key, g] : level) out.push_back(std::move(g));
  return out;
}

/// One representative per isomorphism class on exactly n vertices
/// satisfying the predicate. Built-in enumeration is capped at n <= 8;
/// larger corpora must be ingested as graph6 files.
inline std::vector<Graph> enumerate_small_graphs(
    int n, const std::function<bool(const Graph&)>& predicate) {
  if (n < 0 || n > 8)
    throw std::invalid_argument(
        "enumerate_small_graphs: n too large for built-in mode");
  std::vector<Graph> all = enumerate_graphs_min_degree(n, 0);
  std::vector<Graph> out;
  for (Graph& g : all)
    if (!predicate || predicate(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace qg

#endif  // QG_GENERATORS_HPP
