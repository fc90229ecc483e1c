#include <doctest.h>

#include <random>

#include "qg/connectivity.hpp"
#include "qg/constructors.hpp"
#include "qg/contraction.hpp"
#include "qg/graph.hpp"
#include "qg/patterns.hpp"

using namespace qg;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Oracle: every vertex subset F, checked directly against the fragment
// definition, independent of the cut-first enumeration in the library.
std::vector<QuasiFragment> all_subsets_fragments(const Graph& g, Edge e,
                                                 int k) {
  std::vector<QuasiFragment> out;
  const int n = g.order();
  const VertexSet ends = set_of({e.u, e.v});
  for (VertexSet f = 1; f < full_set(n); ++f) {
    if (f & ends) continue;
    if (set_size(f) < 2) continue;
    VertexSet cut = neighborhood(g, f);
    if (set_size(cut) != k) continue;
    if ((cut & ends) != ends) continue;
    VertexSet other = full_set(n) & ~f & ~cut;
    if (set_size(other) < 2) continue;
    // F must be a union of components of G - cut, i.e. no edge leaves F
    // except into the cut
    if (neighborhood(g, f) != cut) continue;
    out.push_back({f, cut, e});
  }
  std::sort(out.begin(), out.end(), [](const QuasiFragment& a,
                                       const QuasiFragment& b) {
    return set_members(a.fragment) < set_members(b.fragment);
  });
  return out;
}

}  // namespace

TEST_CASE("contract_edge basics") {
  auto r = contract_edge(cycle(5), {0, 1});
  CHECK(is_isomorphic(r.graph, cycle(4)));
  CHECK(r.merged_vertex == 0);
  CHECK(r.origin == Edge{0, 1});

  // parallel edges collapse
  CHECK(is_isomorphic(contract_edge(complete(4), {1, 2}).graph, complete(3)));

  // relabeling: contracting (2,3) keeps 0,1 fixed and shifts 4 down to 3
  auto r2 = contract_edge(cycle(5), {2, 3});
  CHECK(r2.graph.order() == 4);
  CHECK(r2.merged_vertex == 2);
  CHECK(r2.graph.adjacent(0, 1));
  CHECK(r2.graph.adjacent(3, 0));  // old edge (4,0)
  CHECK(r2.graph.adjacent(2, 3));  // old edge (3,4)

  CHECK_THROWS_AS(contract_edge(cycle(5), {0, 2}), std::invalid_argument);
}

TEST_CASE("contract_edge preserves untouched structure") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(rng, 5 + static_cast<int>(rng() % 6));
    std::vector<Edge> es = g.edges();
    if (es.empty()) continue;
    Edge e = es[rng() % es.size()];
    Graph h = contract_edge(g, e).graph;
    CHECK(h.order() == g.order() - 1);
    // degree of the merged vertex: union of the two neighborhoods
    int expect = set_size((g.neighbors(e.u) | g.neighbors(e.v)) &
                          ~set_of({e.u, e.v}));
    CHECK(h.degree(contract_edge(g, e).merged_vertex) == expect);
  }
}

TEST_CASE("contract_subgraph") {
  CHECK(contract_subgraph(complete(4), set_of({0, 1, 2})).order() == 2);
  CHECK(contract_subgraph(complete(4), set_of({0, 1, 2})).edge_count() == 1);
  // two components contracted independently: C6 / {0,1} / {3,4} = C4
  Graph h = contract_subgraph(cycle(6), set_of({0, 1, 3, 4}));
  CHECK(is_isomorphic(h, cycle(4)));
  // a single vertex contracts to itself
  CHECK(contract_subgraph(cycle(5), set_of({2})) == cycle(5));
  CHECK_THROWS_AS(contract_subgraph(cycle(5), 0), std::invalid_argument);
  CHECK_THROWS_AS(contract_subgraph(cycle(5), set_of({5})), std::out_of_range);
}

TEST_CASE("contraction verdicts on the circulant (11; 1,4)") {
  Graph c11 = c11_4();
  REQUIRE(is_quasi_k_connected(c11, 5));
  for (Edge e : c11.edges()) {
    int diff = e.v - e.u;
    int dist = std::min(diff, 11 - diff);
    ContractionVerdict v = classify_contraction(c11, e, 5);
    if (dist == 4)
      CHECK(v == ContractionVerdict::quasi_k);
    else
      CHECK(v == ContractionVerdict::e0_member);
  }
  std::vector<Edge> q = quasi_contractible_edges(c11, 5);
  CHECK(q.size() == 11);
  for (Edge e : q) CHECK(std::min(e.v - e.u, 11 - (e.v - e.u)) == 4);
}

TEST_CASE("verdicts on other hosts") {
  CHECK(classify_contraction(complete(6), {0, 1}, 5) ==
        ContractionVerdict::quasi_k);
  CHECK(classify_contraction(complete(5), {0, 1}, 5) ==
        ContractionVerdict::below);  // K4 has kappa 3
  // k = 4 on C7^2: contracting any edge keeps kappa 4? no: C7^2 is
  // contraction-critical, so every contraction drops below 4
  Graph c72 = cycle_square(7);
  REQUIRE(vertex_connectivity(c72) == 4);
  for (Edge e : c72.edges())
    CHECK(classify_contraction(c72, e, 5) != ContractionVerdict::quasi_k);
}

TEST_CASE("k = 5 pretest path matches the generic path") {
  // classify with k = 5 must agree with a direct recomputation
  std::vector<Graph> hosts{c11_4(), complete(6), complete(7),
                           complete_bipartite(5, 5), cycle_square(10)};
  for (const Graph& g : hosts) {
    for (Edge e : g.edges()) {
      Graph h = contract_edge(g, e).graph;
      ContractionVerdict expect;
      if (vertex_connectivity(h) < 4)
        expect = ContractionVerdict::below;
      else if (find_nontrivial_cut(h, 4))
        expect = ContractionVerdict::e0_member;
      else
        expect = ContractionVerdict::quasi_k;
      CHECK(classify_contraction(g, e, 5) == expect);
    }
  }
}

TEST_CASE("minimum degree pretest") {
  Graph c11 = c11_4();
  for (Edge e : c11.edges()) CHECK(lemma4_pretest(c11, e));
  // C6^2 = K2,2,2-ish: contracting an edge of K5 drops a degree below 4
  CHECK_FALSE(lemma4_pretest(complete(5), {0, 1}));
  CHECK(lemma4_pretest(complete(6), {0, 1}));
  CHECK_THROWS_AS(lemma4_pretest(cycle(5), {0, 2}), std::invalid_argument);
}

TEST_CASE("k-contractibility") {
  Graph c82 = cycle_square(8);
  int contractible = 0;
  for (Edge e : c82.edges())
    if (is_k_contractible(c82, e, 4)) ++contractible;
  // C_n^2 is contraction-critical for 4-connectivity
  CHECK(contractible == 0);
  CHECK(is_k_contractible(complete_bipartite(4, 4), {0, 4}, 4));
  CHECK_THROWS_AS(is_k_contractible(complete(5), {0, 1}, 4),
                  std::invalid_argument);  // complete host
  CHECK_THROWS_AS(is_k_contractible(cycle(5), {0, 1}, 4),
                  std::invalid_argument);  // not 4-connected
}

TEST_CASE("quasi fragments of the circulant, pinned") {
  Graph c11 = c11_4();
  Edge e{0, 1};
  auto frs = quasi_fragments(c11, e, 5);
  REQUIRE(frs.size() == 2);
  CHECK(frs[0].fragment == set_of({2, 10}));
  CHECK(frs[0].cut == set_of({0, 1, 3, 6, 9}));
  CHECK(frs[1].fragment == set_of({4, 5, 7, 8}));
  CHECK(frs[1].cut == set_of({0, 1, 3, 6, 9}));
  for (const QuasiFragment& f : frs) {
    CHECK(f.with_respect_to == e);
    CHECK(neighborhood(c11, f.fragment) == f.cut);
    CHECK(set_contains(f.cut, e.u));
    CHECK(set_contains(f.cut, e.v));
  }
  auto atom = quasi_atom(c11, {e}, 5);
  REQUIRE(atom.has_value());
  CHECK(atom->fragment == set_of({2, 10}));
}

TEST_CASE("quasi fragments agree with the all-subsets oracle") {
  std::mt19937 rng(57);
  std::vector<Graph> hosts{c11_4(), cycle_square(9), complete_bipartite(4, 5)};
  for (int trial = 0; trial < 60; ++trial)
    hosts.push_back(random_graph(rng, 7 + static_cast<int>(rng() % 3), 0.6));
  for (const Graph& g : hosts) {
    for (Edge e : g.edges()) {
      for (int k : {4, 5}) {
        auto got = quasi_fragments(g, e, k);
        auto want = all_subsets_fragments(g, e, k);
        REQUIRE(got.size() == want.size());
        for (size_t i = 0; i < got.size(); ++i) {
          CHECK(got[i].fragment == want[i].fragment);
          CHECK(got[i].cut == want[i].cut);
        }
      }
    }
  }
}

TEST_CASE("contraction criticality") {
  CHECK(is_contraction_critical(complete(5), 4, false));
  CHECK(is_contraction_critical(cycle_square(7), 4, false));
  CHECK_FALSE(is_contraction_critical(complete_bipartite(4, 4), 4, false));
  // quasi flavor: the circulant has quasi 5-contractible edges
  CHECK_FALSE(is_contraction_critical(c11_4(), 5, true));
  CHECK_THROWS_AS(is_contraction_critical(cycle(5), 4, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_contraction_critical(cycle_square(8), 5, true),
                  std::invalid_argument);
}

TEST_CASE("quasi contractible edge list preconditions and order") {
  CHECK_THROWS_AS(quasi_contractible_edges(cycle_square(8), 5),
                  std::invalid_argument);
  std::vector<Edge> q = quasi_contractible_edges(complete(6), 5);
  CHECK(q.size() == 15);  // every edge of K6 works
  CHECK(std::is_sorted(q.begin(), q.end()));
}
