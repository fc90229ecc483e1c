// Canonically labeled instances of the named graph families used
// throughout the library and its test corpora.
#ifndef QG_CONSTRUCTORS_HPP
#define QG_CONSTRUCTORS_HPP

#include <vector>

#include "qg/graph.hpp"

namespace qg {

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// K_n minus the edge (0, 1).
inline Graph complete_minus_edge(int n) {
  if (n < 2) throw std::invalid_argument("complete_minus_edge: need n >= 2");
  Graph g = complete(n);
  g.remove_edge(0, 1);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

inline Graph k33() { return complete_bipartite(3, 3); }

/// Vertices 0..2^3-1 as bit strings, edges between strings at Hamming
/// distance one.
inline Graph cube() {
  Graph g(8);
  for (int u = 0; u < 8; ++u)
    for (int b = 0; b < 3; ++b)
      if (u < (u ^ (1 << b))) g.add_edge(u, u ^ (1 << b));
  return g;
}

/// Circulant graph: i ~ j iff (i - j) mod n is in the connection set
/// (closed under negation automatically).
inline Graph circulant(int n, const std::vector<int>& connection_set) {
  Graph g(n);
  for (int d : connection_set) {
    int r = ((d % n) + n) % n;
    if (r == 0) throw std::invalid_argument("circulant: zero offset");
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + r) % n);
  }
  return g;
}

/// Cycle plus all chords between vertices at distance two on the cycle.
inline Graph cycle_square(int n) {
  if (n < 5) throw std::invalid_argument("cycle_square: need n >= 5");
  return circulant(n, {1, 2});
}

inline Graph c11_4() { return circulant(11, {1, 4}); }

inline Graph k4_minus() { return complete_minus_edge(4); }

/// Complement of the path 0-1-2-3-4.
inline Graph p5_complement() { return complement(path(5)); }

/// C4 (0-1-2-3-0) with a pendant vertex 4 attached to vertex 0.
/// 5 vertices, 5 edges; its line graph is isomorphic to p5_complement(),
/// which pins this shape (see the derivation oracle in the tests).
inline Graph c4_plus() {
  Graph g = cycle(4);
  Graph out(5);
  for (Edge e : g.edges()) out.add_edge(e.u, e.v);
  out.add_edge(0, 4);
  return out;
}

inline Graph petersen() {
  Graph g(10);
  for (int v = 0; v < 5; ++v) {
    g.add_edge(v, (v + 1) % 5);      // outer cycle
    g.add_edge(v, v + 5);            // spokes
    g.add_edge(v + 5, (v + 2) % 5 + 5);  // inner pentagram
  }
  return g;
}

}  // namespace qg

#endif  // QG_CONSTRUCTORS_HPP
