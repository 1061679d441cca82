#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "uec/coloring.hpp"
#include "uec/error.hpp"
#include "uec/io.hpp"
#include "uec/search.hpp"

using namespace uec;

namespace {

std::set<std::vector<std::vector<Vertex>>> as_set(const std::vector<ColorPartition>& ps) {
  std::set<std::vector<std::vector<Vertex>>> out;
  for (const auto& p : ps) out.insert(p.classes);
  return out;
}

using Classes = std::vector<std::vector<Vertex>>;

}  // namespace

TEST_CASE("proper_3_partitions examples") {
  const auto k3 = proper_3_partitions(fixture("k3"), 2);
  REQUIRE(k3.size() == 1);
  CHECK(k3[0].classes == Classes{{0}, {1}, {2}});
  CHECK(proper_3_partitions(fixture("c5"), 10).size() == 5);
  CHECK(proper_3_partitions(fixture("bowtie"), 10).size() == 2);
  CHECK(proper_3_partitions(fixture("c5"), 3).size() == 3);
  CHECK(proper_3_partitions(fixture("k4")).empty());
}

TEST_CASE("proper_3_partitions equals brute force") {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      const Graph g = oracle::from_code(n, code);
      CHECK(as_set(proper_3_partitions(g)) == oracle::partitions(g));
    }
  }
  std::mt19937 rng(42);
  for (int iter = 0; iter < 200; ++iter) {
    const Graph g = oracle::random_graph(rng, 6 + static_cast<int>(rng() % 3), 0.35 + (rng() % 30) / 100.0);
    CHECK(as_set(proper_3_partitions(g)) == oracle::partitions(g));
  }
}

TEST_CASE("chromatic_value examples") {
  CHECK(chromatic_value(fixture("k3"), 3) == 6);
  CHECK(chromatic_value(fixture("c5"), 3) == 30);
  CHECK(chromatic_value(fixture("oct"), 3) == 6);
  CHECK(chromatic_value(fixture("k4"), 3) == 0);
  CHECK(chromatic_value(fixture("k4"), 4) == 24);
}

TEST_CASE("chromatic_value equals brute force") {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.45);
    for (int k = 1; k <= 4; ++k) CHECK(chromatic_value(g, k) == oracle::count_colorings(g, k));
  }
}

TEST_CASE("chromatic_value on larger graphs matches closed forms") {
  for (int n : {20, 24, 30}) {
    Graph cycle(n), path(n);
    for (int i = 0; i < n; ++i) cycle.add_edge(i, (i + 1) % n);
    for (int i = 0; i + 1 < n; ++i) path.add_edge(i, i + 1);
    for (int k = 2; k <= 4; ++k) {
      std::uint64_t pw = 1, tree = k;
      for (int i = 0; i < n; ++i) pw *= k - 1;
      for (int i = 1; i < n; ++i) tree *= k - 1;
      CHECK(chromatic_value(cycle, k) == pw + (n % 2 ? -(k - 1) : (k - 1)));
      CHECK(chromatic_value(path, k) == tree);
    }
  }
}

TEST_CASE("uniqueness examples") {
  const auto fan5 = is_uniquely_3_colorable(fixture("fan5"));
  CHECK(fan5.unique);
  REQUIRE(fan5.partition);
  CHECK(fan5.partition->classes == Classes{{0}, {1, 3}, {2, 4}});
  CHECK_FALSE(is_uniquely_3_colorable(fixture("c5")).unique);
  const auto oct = is_uniquely_3_colorable(fixture("oct"));
  CHECK(oct.unique);
  CHECK(oct.partition->classes == Classes{{0, 1}, {2, 3}, {4, 5}});
  CHECK_FALSE(is_uniquely_3_colorable(fixture("c4")).unique);
  CHECK_FALSE(is_uniquely_3_colorable(fixture("k4")).unique);
}

TEST_CASE("uniqueness agrees with brute force and the chromatic test") {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      const Graph g = oracle::from_code(n, code);
      const bool u = is_uniquely_3_colorable(g).unique;
      CHECK(u == oracle::unique3(g));
      CHECK(u == (chromatic_value(g, 3) == 6 && chromatic_value(g, 2) == 0));
      CHECK(is_3_colorable(g) == (oracle::count_colorings(g, 3) > 0));
      CHECK(is_bipartite(g) == (oracle::count_colorings(g, 2) > 0));
    }
  }
}

TEST_CASE("structural facts of uniquely 3-colourable graphs, n <= 7") {
  for (int n = 3; n <= 7; ++n) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.prune = PruneFlags::none();
    cfg.prune.colorable = true;
    enumerate(cfg, [&](const Graph& g) {
      const auto u = is_uniquely_3_colorable(g);
      if (!u.unique) return;
      CHECK(is_connected(g));
      if (n >= 4) CHECK(is_biconnected(g));
      CHECK(g.min_degree() >= 2);
      CHECK(g.size() >= 2 * n - 3);
      CHECK(classes_union_connected(g, *u.partition));
    });
  }
}

TEST_CASE("classes_union_connected examples") {
  CHECK(classes_union_connected(fixture("k3"), *is_uniquely_3_colorable(fixture("k3")).partition));
  CHECK(classes_union_connected(fixture("fan5"), *is_uniquely_3_colorable(fixture("fan5")).partition));
  ColorPartition c6;
  c6.classes = {{0, 3}, {1, 4}, {2, 5}};
  CHECK_FALSE(classes_union_connected(fixture("c6"), c6));
  ColorPartition bad;
  bad.classes = {{0, 1}, {2}};
  CHECK_THROWS_AS(classes_union_connected(fixture("k3"), bad), InputError);
}

TEST_CASE("extend_precoloring examples") {
  CHECK(extend_precoloring(fixture("k3"), {{0, 0}, {1, 1}}).size() == 1);
  const auto c5 = extend_precoloring(fixture("c5"), {{0, 0}, {2, 0}});
  CHECK_FALSE(c5.empty());
  ColorPartition sample;
  sample.classes = {{0, 2}, {1, 3}, {4}};
  CHECK(std::ranges::find(c5, sample) != c5.end());
  CHECK_THROWS_AS(extend_precoloring(fixture("diamond"), {{1, 0}, {2, 0}}), InputError);
  CHECK_THROWS_AS(extend_precoloring(fixture("k3"), {{0, 3}}), InputError);
}

TEST_CASE("extend_precoloring equals filtered brute force") {
  std::mt19937 rng(21);
  for (int iter = 0; iter < 150; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    Precoloring pre;
    const Vertex a = static_cast<Vertex>(rng() % n), b = static_cast<Vertex>(rng() % n);
    pre[a] = 0;
    if (a != b && !g.has_edge(a, b)) pre[b] = static_cast<int>(rng() % 2);
    std::set<std::vector<std::vector<Vertex>>> expect;
    oracle::each_assignment(n, 3, [&](const std::vector<int>& col) {
      if (!oracle::proper(g, col)) return;
      for (auto [v, c] : pre)
        if (col[v] != c) return;
      expect.insert(ColorPartition::from_labels(col).classes);
    });
    CHECK(as_set(extend_precoloring(g, pre)) == expect);
  }
}

TEST_CASE("colorable_with_equal matches identification") {
  std::mt19937 rng(9);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const Vertex a = static_cast<Vertex>(rng() % n);
    Vertex b = static_cast<Vertex>(rng() % n);
    if (a == b) continue;
    bool expect = false;
    oracle::each_assignment(n, 3, [&](const std::vector<int>& col) {
      if (col[a] != col[b]) return;
      for (const Edge& e : g.edges())
        if (e != make_edge(a, b) && col[e.u] == col[e.v]) return;
      expect = true;
    });
    CHECK(colorable_with_equal(g, a, b) == expect);
  }
}

TEST_CASE("partition labels round trip") {
  const int labels[] = {2, 2, 0, 1, 0};
  const ColorPartition p = ColorPartition::from_labels(labels);
  CHECK(p.classes == Classes{{0, 1}, {2, 4}, {3}});
  CHECK(p.labels(5) == std::vector<int>{0, 0, 1, 2, 1});
}
