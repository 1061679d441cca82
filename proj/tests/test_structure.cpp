#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "uec/criticality.hpp"
#include "uec/error.hpp"
#include "uec/io.hpp"
#include "uec/search.hpp"
#include "uec/structure.hpp"

using namespace uec;

namespace {

// Triangles 012, 234, 450 taken as three separate components, as in the
// abstract ring; the host graph also carries the inner triangle 024.
Graph triforce_graph() {
  return build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {0, 4}, {0, 5}});
}

TriangleDecomposition triforce_decomposition() {
  TriangleDecomposition d;
  d.n = 6;
  d.triangles = {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}};
  d.gprime = triforce_graph();
  d.gprime_vertices = prefix_mask(6);
  d.D = {2, 1, 2, 1, 2, 1};
  d.omega_prime = 1;
  for (int i = 0; i < 3; ++i) {
    const Triangle& t = d.triangles[i];
    d.components.push_back({{i}, mask_of({t[0], t[1], t[2]}), {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}});
  }
  return d;
}

// Three diamonds on tips 0, 1, 2: diamond i joins tip i to tip i+1 through
// the adjacent pair 3+2i, 4+2i.
Graph diamond_ring() {
  Graph g(9);
  for (int i = 0; i < 3; ++i) {
    const int a = i, b = (i + 1) % 3, x = 3 + 2 * i, y = 4 + 2 * i;
    g.add_edge(a, x);
    g.add_edge(a, y);
    g.add_edge(x, y);
    g.add_edge(x, b);
    g.add_edge(y, b);
  }
  return g;
}

AuxGraph aux_of(const Graph& g, const TriangleDecomposition& d) {
  return build_HG(g, *is_planar(g).embedding, d);
}

}  // namespace

TEST_CASE("triangle_components examples") {
  const auto bowtie = triangle_components(fixture("bowtie"));
  CHECK(bowtie.k() == 2);
  CHECK(bowtie.components[0].t() == 1);
  CHECK(bowtie.components[1].t() == 1);
  CHECK(bowtie.D[2] == 2);
  CHECK(bowtie.containing(2) == std::vector<int>{0, 1});

  const auto diamond = triangle_components(fixture("diamond"));
  CHECK(diamond.k() == 1);
  CHECK(diamond.components[0].t() == 2);
  CHECK(popcount(diamond.components[0].vertices) == 4);
  CHECK(diamond.components[0].edges.size() == 5);

  const auto fan5 = triangle_components(fixture("fan5"), DomainMode::relaxed);
  CHECK(fan5.k() == 1);
  CHECK(fan5.components[0].t() == 3);
  CHECK_FALSE(fan5.separating_free);
  CHECK_THROWS_AS(triangle_components(fixture("fan5")), PreconditionError);
  CHECK_THROWS_AS(triangle_components(fixture("twok4")), PreconditionError);

  const auto c5 = triangle_components(fixture("c5"));
  CHECK(c5.k() == 0);
  CHECK(c5.gprime.size() == 0);
}

TEST_CASE("decomposition invariants on the pool, n <= 7") {
  for (int n = 3; n <= 7; ++n) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.prune = PruneFlags::pool();
    enumerate(cfg, [](const Graph& g) {
      const auto d = triangle_components(g, DomainMode::relaxed);
      std::size_t edge_sum = 0;
      int t_sum = 0;
      for (const auto& h : d.components) {
        edge_sum += h.edges.size();
        t_sum += h.t();
      }
      CHECK(t_sum == triangle_count(g));
      CHECK(edge_sum == static_cast<std::size_t>(d.gprime.size()));
      for (Vertex v = 0; v < g.order(); ++v) CHECK(d.D[v] == static_cast<int>(d.containing(v).size()));
      if (d.separating_free && classify(g).in_ue) {
        const auto a = decomposition_audit(g, d);
        CHECK(a.verdict != Verdict::fail);
        CHECK(d.gprime.size() == d.k() + 2 * triangle_count(g));
      }
    });
  }
}

TEST_CASE("property_P examples") {
  const auto bowtie = triangle_components(fixture("bowtie"));
  CHECK_FALSE(property_P(bowtie, 0, 1));
  CHECK_FALSE(property_P(bowtie, 0, 1, 2));
  CHECK_THROWS_AS(property_P(bowtie, 0, 1, 0), InputError);

  const auto tri = triforce_decomposition();
  CHECK(property_P(tri, 0, 1));
  CHECK(property_P(tri, 1, 2));
  CHECK(property_P(tri, 0, 2));

  // 012 and 234 share 2; 056 meets only the first of them
  const Graph g = build_graph(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {0, 5}, {0, 6}, {5, 6}});
  const auto d = triangle_components(g, DomainMode::relaxed);
  REQUIRE(d.k() == 3);
  const int h012 = d.containing(1).front(), h234 = d.containing(3).front();
  CHECK_FALSE(property_P(d, h012, h234, 2));
}

TEST_CASE("build_HG examples") {
  const auto bowtie = triangle_components(fixture("bowtie"));
  const AuxGraph hb = aux_of(fixture("bowtie"), bowtie);
  CHECK(hb.k == 2);
  REQUIRE(hb.edges.size() == 1);
  CHECK(hb.edges[0].tag == AuxProvenance::step1);
  CHECK(hb.edges[0].via == 2);

  const auto k3 = triangle_components(fixture("k3"));
  const AuxGraph hk = aux_of(fixture("k3"), k3);
  CHECK(hk.k == 1);
  CHECK(hk.edges.empty());

  const AuxGraph ht = aux_of(triforce_graph(), triforce_decomposition());
  CHECK(ht.k == 3);
  CHECK(ht.edges.size() == 3);
  for (const auto& e : ht.edges) CHECK(e.tag == AuxProvenance::step1);
  CHECK(ht.graph.size() == 3);

  const Graph ring = diamond_ring();
  const auto rd = triangle_components(ring);
  CHECK(rd.k() == 3);
  CHECK(rd.D[0] == 2);
  const AuxGraph hr = aux_of(ring, rd);
  CHECK(hr.edges.size() == 3);
  for (const auto& e : hr.edges) CHECK(e.tag == AuxProvenance::step1);
  CHECK(hr.simple);
  CHECK(hr.planar);
  CHECK(hr.face_count() == 2);
}

TEST_CASE("f_ge4 of G' examples") {
  auto f4 = [](const char* name) {
    const Graph g = fixture(name);
    return gprime_faces(triangle_components(g), *is_planar(g).embedding);
  };
  const auto bowtie = f4("bowtie");
  CHECK(bowtie.faces_euler == 3);
  CHECK(bowtie.sum_t == 2);
  CHECK(bowtie.f_ge4 == 1);
  CHECK(f4("k3").faces_euler == 2);
  CHECK(f4("k3").f_ge4 == 1);
  CHECK(f4("diamond").faces_euler == 3);
  CHECK(f4("diamond").f_ge4 == 1);
}

TEST_CASE("H_G face count audit, relaxed") {
  for (const char* name : {"bowtie", "k3"}) {
    const Graph g = fixture(name);
    const auto d = triangle_components(g, DomainMode::relaxed);
    const auto r = thm41_audit(aux_of(g, d), d, DomainMode::relaxed);
    CHECK_FALSE(r.binding);
    CHECK(r.data["faces_HG"] == 1);
    CHECK(r.data["f_ge4_Gprime"] == 1);
    CHECK(r.verdict == Verdict::pass);
  }
}

TEST_CASE("triangle path audit examples") {
  const Graph diamond = fixture("diamond");
  const auto a = cor34_audit(diamond, triangle_components(diamond));
  CHECK(a.verdict == Verdict::pass);
  CHECK(a.data["ordered_pairs"] == 2);
  const Graph fan5 = fixture("fan5");
  const auto b = cor34_audit(fan5, triangle_components(fan5, DomainMode::relaxed));
  CHECK(b.verdict == Verdict::pass);
  CHECK(b.data["ordered_pairs"] == 6);
  // the tips 0 and 3 of the diamond become adjacent in K4, whose triangles form no tree
  const Graph k4 = fixture("k4");
  CHECK(cor34_audit(k4, triangle_components(k4)).verdict == Verdict::fail);
}

TEST_CASE("subgraph pair audit examples") {
  const auto tri = thm36_audit(triforce_graph(), triforce_decomposition(), DomainMode::strict);
  CHECK(tri.verdict == Verdict::pass);
  CHECK(tri.data["pairs"] == 3);
  CHECK(tri.data["union_triples"] == 1);

  const Graph bowtie = fixture("bowtie");
  const auto bt = thm36_audit(bowtie, triangle_components(bowtie), DomainMode::relaxed);
  CHECK(bt.verdict == Verdict::pass);
  CHECK_FALSE(bt.binding);
  CHECK(bt.data["pairs"] == 1);
}

TEST_CASE("face sequence audit examples") {
  const Graph bowtie = fixture("bowtie");
  const auto bd = triangle_components(bowtie);
  CHECK(thm42_audit(bowtie, aux_of(bowtie, bd), bd, DomainMode::relaxed).verdict == Verdict::vacuous);

  // the diamonds can swap their middle pairs independently, so the union is
  // not uniquely 3-colourable; the relaxed audit records that without failing
  const Graph ring = diamond_ring();
  const auto rd = triangle_components(ring);
  const auto r = thm42_audit(ring, aux_of(ring, rd), rd, DomainMode::relaxed);
  CHECK(r.data["start_faces"] == 2);
  CHECK(r.verdict == Verdict::fail);
  CHECK_FALSE(r.failed());
  CHECK_FALSE(classify(ring).uniquely_3);
}

TEST_CASE("f_ge4 bound audit precondition") {
  const Graph bowtie = fixture("bowtie");
  const auto d = triangle_components(bowtie);
  CHECK_THROWS_AS(cor45_audit(aux_of(bowtie, d), d, *is_planar(bowtie).embedding), PreconditionError);
}

TEST_CASE("structural theorems on U_E graphs without separating 3-cycles, n <= 8") {
  int audited = 0;
  for (int n = 4; n <= 8; ++n) {
    SearchConfig cfg;
    cfg.n = n;
    enumerate(cfg, [&](const Graph& g) {
      if (!separating_3_cycles(g).empty() || !classify(g).in_ue) return;
      ++audited;
      const auto emb = *is_planar(g).embedding;
      const auto d = triangle_components(g);
      const AuxGraph aux = build_HG(g, emb, d);
      CHECK(aux.simple);
      CHECK(aux.planar);
      CHECK(aux.forests);
      CHECK_FALSE(decomposition_audit(g, d).failed());
      CHECK_FALSE(thm41_audit(aux, d, DomainMode::strict).failed());
      CHECK_FALSE(cor34_audit(g, d).failed());
      CHECK_FALSE(thm36_audit(g, d, DomainMode::strict).failed());
      CHECK_FALSE(thm42_audit(g, aux, d, DomainMode::strict).failed());
      if (d.k() >= 4) CHECK_FALSE(cor45_audit(aux, d, emb).failed());
    });
  }
  CHECK(audited > 0);
}
