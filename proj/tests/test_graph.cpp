#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "uec/canonical.hpp"
#include "uec/error.hpp"
#include "uec/graph.hpp"
#include "uec/io.hpp"

using namespace uec;

namespace {

bool symmetric_and_simple(const Graph& g) {
  int deg_sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.neighbors(v) & bit(v)) return false;
    if (g.neighbors(v) & ~g.vertices()) return false;
    for (Vertex w : members(g.neighbors(v)))
      if (!g.has_edge(w, v)) return false;
    deg_sum += g.degree(v);
  }
  return deg_sum == 2 * g.size();
}

}  // namespace

TEST_CASE("build_graph fixtures") {
  const Graph k3 = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(k3.size() == 3);
  CHECK(k3 == fixture("k3"));

  const Graph fan5 = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(fan5.size() == 7);
  CHECK(fan5 == fixture("fan5"));

  const Graph diamond = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(diamond.size() == 5);
  CHECK(diamond == fixture("diamond"));
}

TEST_CASE("build_graph rejects bad edges") {
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(build_graph(3, {{-1, 2}}), InputError);
  CHECK_THROWS_AS(build_graph(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Graph(65), InputError);
  Graph g(3);
  CHECK_THROWS_AS(g.remove_edge(0, 1), InputError);
}

TEST_CASE("contract_edge examples") {
  const Graph k2 = build_graph(2, {{0, 1}});
  for (const Edge& e : fixture("k3").edges()) CHECK(contract_edge(fixture("k3"), e) == k2);
  for (const Edge& e : fixture("c5").edges()) CHECK(are_isomorphic(contract_edge(fixture("c5"), e), fixture("c4")));
  // rim edge 12 of W4: 2 merges into 1, vertices 3, 4 shift to 2, 3
  const Graph w4e = contract_edge(fixture("w4"), {1, 2});
  CHECK(w4e == fixture("k4"));
}

TEST_CASE("contract_edge properties") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    for (const Edge& e : g.edges()) {
      const Graph h = contract_edge(g, e);
      CHECK(h.order() == n - 1);
      CHECK(h.size() <= g.size() - 1);
      CHECK(symmetric_and_simple(h));
      CHECK(h == oracle::contract(g, e));
    }
  }
}

TEST_CASE("delete, induce and union") {
  CHECK(delete_edge(fixture("diamond"), {1, 2}) == build_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  CHECK(are_isomorphic(delete_edge(fixture("diamond"), {1, 2}), fixture("c4")));
  CHECK(induced_subgraph(fixture("bowtie"), mask_of({0, 1, 2})) == fixture("k3"));
  const Graph t1 = build_graph(5, {{0, 1}, {0, 2}, {1, 2}});
  const Graph t2 = build_graph(5, {{2, 3}, {2, 4}, {3, 4}});
  const Graph parts[] = {t1, t2};
  CHECK(union_subgraphs(parts) == fixture("bowtie"));
  CHECK_THROWS_AS(delete_edge(fixture("c4"), {0, 2}), InputError);
}

TEST_CASE("e_between examples") {
  CHECK(e_between(fixture("oct"), mask_of({0, 1}), mask_of({2, 3})) == 4);
  CHECK(e_between(fixture("fan5"), mask_of({0}), mask_of({1, 2, 3, 4})) == 4);
  CHECK(e_between(fixture("bowtie"), mask_of({0, 1}), mask_of({3, 4})) == 0);
  CHECK_THROWS_AS(e_between(fixture("k3"), mask_of({0, 1}), mask_of({1, 2})), InputError);
}

TEST_CASE("mutations keep adjacency symmetric") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 12);
    Graph g = oracle::random_graph(rng, n, 0.4);
    CHECK(symmetric_and_simple(g));
    const auto es = g.edges();
    if (!es.empty()) {
      const Edge e = es[rng() % es.size()];
      CHECK(symmetric_and_simple(delete_edge(g, e)));
      CHECK(delete_edge(g, e).size() == g.size() - 1);
    }
    const VertexMask s = rng() & g.vertices();
    const Graph h = induced_subgraph(g, s);
    CHECK(h.order() == popcount(s));
    CHECK(symmetric_and_simple(h));
    const Graph a = add_vertex(g, rng() & g.vertices());
    CHECK(a.order() == n + 1);
    CHECK(symmetric_and_simple(a));
    CHECK(induced_subgraph(a, g.vertices()) == g);
  }
}

TEST_CASE("separating_3_cycles examples") {
  CHECK(separating_3_cycles(fixture("twok4")) == std::vector<Triangle>{{0, 1, 2}});
  CHECK(separating_3_cycles(fixture("bowtie")).empty());
  CHECK(separating_3_cycles(fixture("k4")).empty());
  CHECK(separating_3_cycles(fixture("fan5")).size() == 1);
}

TEST_CASE("separating_3_cycles agrees with direct removal") {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const Graph g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 6), 0.5);
    std::vector<Triangle> expect;
    for (const Triangle& t : triangles(g))
      if (components(g, g.vertices() & ~mask_of({t[0], t[1], t[2]})).size() >= 2) expect.push_back(t);
    CHECK(separating_3_cycles(g) == expect);
  }
}

TEST_CASE("connectivity predicates") {
  CHECK(is_connected(fixture("p3")));
  CHECK_FALSE(is_biconnected(fixture("p3")));
  CHECK(is_biconnected(fixture("c4")));
  CHECK_FALSE(is_biconnected(fixture("bowtie")));
  CHECK(component_count(Graph(4)) == 4);
  CHECK(triangle_count(fixture("k4")) == 4);
  CHECK(triangle_count(fixture("oct")) == 8);
  CHECK(triangles(fixture("bowtie")) == std::vector<Triangle>{{0, 1, 2}, {2, 3, 4}});
  CHECK(drop_isolated(build_graph(4, {{1, 3}})) == build_graph(2, {{0, 1}}));
}

TEST_CASE("biconnectivity matches cut-vertex removal") {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(rng, n, 0.45);
    bool expect = n >= 3 && is_connected(g);
    for (Vertex v = 0; expect && v < n; ++v)
      if (components(g, g.vertices() & ~bit(v)).size() != 1) expect = false;
    CHECK(is_biconnected(g) == expect);
  }
}
