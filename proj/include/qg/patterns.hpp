// Subgraph monomorphism for tiny patterns, canonical labeling by color
// refinement with individualization, neighborhood classification, and the
// {K4-, P5-complement} forbidden-pair test.
#ifndef QG_PATTERNS_HPP
#define QG_PATTERNS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qg/constructors.hpp"
#include "qg/graph.hpp"

namespace qg {

/// Injective map pattern-vertex -> host-vertex witnessing a match.
struct PatternMatch {
  std::vector<int> mapping;
};

namespace detail {

// Static pattern order: highest degree first, then greedily the vertex
// with the most already-placed neighbors. Keeps the partial match
// connected whenever the pattern is.
inline std::vector<int> pattern_order(const Graph& p) {
  const int n = p.order();
  std::vector<int> order;
  std::vector<bool> placed(static_cast<size_t>(n), false);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[static_cast<size_t>(v)]) continue;
      int links = 0;
      for (int u : order)
        if (p.adjacent(u, v)) ++links;
      if (links > best_links ||
          (links == best_links && p.degree(v) > best_deg)) {
        best = v;
        best_links = links;
        best_deg = p.degree(v);
      }
    }
    order.push_back(best);
    placed[static_cast<size_t>(best)] = true;
  }
  return order;
}

inline bool match_search(const Graph& host, const Graph& p,
                         const std::vector<int>& order,
                         const std::vector<int>& candidates, bool induced_mode,
                         size_t depth, std::vector<int>& map, VertexSet& used) {
  if (depth == order.size()) return true;
  const int pv = order[depth];
  for (int hv : candidates) {
    if (set_contains(used, hv)) continue;
    if (host.degree(hv) < p.degree(pv)) continue;
    bool ok = true;
    for (size_t d = 0; d < depth && ok; ++d) {
      const int qu = order[d];
      const bool pe = p.adjacent(qu, pv);
      const bool he = host.adjacent(map[static_cast<size_t>(qu)], hv);
      if (pe && !he) ok = false;
      if (induced_mode && !pe && he) ok = false;
    }
    if (!ok) continue;
    map[static_cast<size_t>(pv)] = hv;
    used |= VertexSet{1} << hv;
    if (match_search(host, p, order, candidates, induced_mode, depth + 1, map,
                     used))
      return true;
    used &= ~(VertexSet{1} << hv);
  }
  return false;
}

}  // namespace detail

/// A witness monomorphism (induced_mode: isomorphism onto an induced
/// subgraph) if one exists. Patterns are capped at 8 vertices.
inline std::optional<PatternMatch> contains_subgraph(const Graph& host,
                                                     const Graph& pattern,
                                                     bool induced_mode = false) {
  if (pattern.order() > 8)
    throw std::invalid_argument("contains_subgraph: pattern too large");
  if (pattern.order() > host.order()) return std::nullopt;
  std::vector<int> order = detail::pattern_order(pattern);
  // host candidates by degree descending, index ascending
  std::vector<int> candidates(static_cast<size_t>(host.order()));
  for (int v = 0; v < host.order(); ++v) candidates[static_cast<size_t>(v)] = v;
  std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    return host.degree(a) > host.degree(b);
  });
  std::vector<int> map(static_cast<size_t>(pattern.order()), -1);
  VertexSet used = 0;
  if (detail::match_search(host, pattern, order, candidates, induced_mode, 0,
                           map, used))
    return PatternMatch{map};
  return std::nullopt;
}

/// Neither K4- nor the P5 complement occurs as a (not necessarily
/// induced) subgraph.
inline bool forbidden_pair_free(const Graph& g) {
  return !contains_subgraph(g, k4_minus()).has_value() &&
         !contains_subgraph(g, p5_complement()).has_value();
}

enum class NeighborhoodClass { four_k1, k2_plus_2k1, two_k2, other };

inline const char* to_string(NeighborhoodClass c) {
  switch (c) {
    case NeighborhoodClass::four_k1: return "4K1";
    case NeighborhoodClass::k2_plus_2k1: return "2K1+K2";
    case NeighborhoodClass::two_k2: return "2K2";
    default: return "other";
  }
}

/// Isomorphism type of the induced neighborhood of a degree-4 vertex,
/// distinguishing only the three triangle-free-relevant labels.
inline NeighborhoodClass classify_neighborhood(const Graph& g, int v) {
  if (g.degree(v) != 4) return NeighborhoodClass::other;
  Graph nbhd = induced(g, g.neighbors(v));
  switch (nbhd.edge_count()) {
    case 0:
      return NeighborhoodClass::four_k1;
    case 1:
      return NeighborhoodClass::k2_plus_2k1;
    case 2: {
      std::vector<Edge> es = nbhd.edges();
      bool disjoint = es[0].u != es[1].u && es[0].u != es[1].v &&
                      es[0].v != es[1].u && es[0].v != es[1].v;
      return disjoint ? NeighborhoodClass::two_k2 : NeighborhoodClass::other;
    }
    default:
      return NeighborhoodClass::other;
  }
}

namespace detail {

// Iterated color refinement: re-rank (color, sorted neighbor colors)
// signatures until stable. Rank assignment depends only on the signature
// order, so the result is isomorphism-invariant.
inline void refine_colors(const Graph& g, std::vector<int>& color) {
  const int n = g.order();
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sigs(
        static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> key;
      key.push_back(color[static_cast<size_t>(v)]);
      std::vector<int> nbr;
      for (int u : set_members(g.neighbors(v)))
        nbr.push_back(color[static_cast<size_t>(u)]);
      std::sort(nbr.begin(), nbr.end());
      key.insert(key.end(), nbr.begin(), nbr.end());
      sigs[static_cast<size_t>(v)] = {std::move(key), v};
    }
    std::vector<std::pair<std::vector<int>, int>> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(static_cast<size_t>(n));
    int rank = -1;
    const std::vector<int>* last = nullptr;
    for (auto& [key, v] : sorted) {
      if (!last || key != *last) {
        ++rank;
        last = &key;
      }
      next[static_cast<size_t>(v)] = rank;
    }
    if (next == color) return;
    color = std::move(next);
  }
}

inline std::string certificate_for(const Graph& g,
                                   const std::vector<int>& color) {
  const int n = g.order();
  std::vector<int> vertex_at(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) vertex_at[static_cast<size_t>(color[static_cast<size_t>(v)])] = v;
  std::string cert(1, static_cast<char>(n));
  int acc = 0, nbits = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      acc = (acc << 1) | (g.adjacent(vertex_at[static_cast<size_t>(i)],
                                     vertex_at[static_cast<size_t>(j)])
                              ? 1
                              : 0);
      if (++nbits == 8) {
        cert.push_back(static_cast<char>(acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits) cert.push_back(static_cast<char>(acc << (8 - nbits)));
  return cert;
}

struct CanonSearch {
  const Graph& g;
  std::string best;
  bool have_best = false;

  void run(std::vector<int> color) {
    refine_colors(g, color);
    const int n = g.order();
    // first color value with multiplicity > 1
    std::vector<int> count(static_cast<size_t>(n), 0);
    for (int c : color) ++count[static_cast<size_t>(c)];
    int cell = -1;
    for (int c = 0; c < n; ++c) {
      if (count[static_cast<size_t>(c)] > 1) {
        cell = c;
        break;
      }
    }
    if (cell < 0) {
      std::string cert = certificate_for(g, color);
      if (!have_best || cert < best) {
        best = std::move(cert);
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<size_t>(v)] != cell) continue;
      std::vector<int> branch(static_cast<size_t>(n));
      for (int u = 0; u < n; ++u)
        branch[static_cast<size_t>(u)] =
            2 * color[static_cast<size_t>(u)] + (u == v ? 0 : 1);
      run(std::move(branch));
    }
  }
};

}  // namespace detail

/// Permutation-invariant byte string; equal iff the graphs are isomorphic.
inline std::string canonical_form(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::string(1, '\0');
  const int m = g.edge_count();
  if (m == 0 || m == n * (n - 1) / 2) {
    std::vector<int> identity(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) identity[static_cast<size_t>(v)] = v;
    return detail::certificate_for(g, identity);
  }
  detail::CanonSearch search{g};
  search.run(std::vector<int>(static_cast<size_t>(n), 0));
  return search.best;
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg, dh;
  for (int v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace qg

#endif  // QG_PATTERNS_HPP
