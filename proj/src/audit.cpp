#include "uec/audit.hpp"

#include "uec/bounds.hpp"
#include "uec/canonical.hpp"
#include "uec/coloring.hpp"
#include "uec/criticality.hpp"
#include "uec/error.hpp"

namespace uec {

namespace {

AuditResult skipped(std::string check, std::string why) {
  AuditResult r{.check = std::move(check), .verdict = Verdict::not_applicable, .detail = std::move(why)};
  return r;
}

AuditResult relabel_binding(AuditResult r, bool binding) {
  if (!binding && r.binding) {
    r.binding = false;
    if (r.verdict == Verdict::fail) r.detail += " (non-binding, relaxed mode)";
  }
  return r;
}

}  // namespace

std::string AuditReport::digest() const {
  int p = 0, v = 0, na = 0, f = 0;
  for (const auto& r : results) {
    switch (r.verdict) {
      case Verdict::pass: ++p; break;
      case Verdict::vacuous: ++v; break;
      case Verdict::not_applicable: ++na; break;
      case Verdict::fail: ++f; break;
    }
  }
  return "p" + std::to_string(p) + "v" + std::to_string(v) + "n" + std::to_string(na) + "f" + std::to_string(f);
}

AuditResult union_connectivity_audit(const Graph& g) {
  AuditResult r{.check = "thm11_class_unions_connected"};
  const UniqueColoring u = is_uniquely_3_colorable(g);
  if (!u.unique) return skipped(r.check, "not uniquely 3-colorable");
  const bool ok = classes_union_connected(g, *u.partition);
  r.data = {{"classes", u.partition->classes}};
  if (!ok) {
    r.verdict = Verdict::fail;
    r.detail = "some pair of colour classes induces a disconnected subgraph";
  }
  return r;
}

AuditResult subgraph_closure_audit(const Graph& g, const TriangleDecomposition& d) {
  AuditResult r{.check = "thm33_subgraph_closure"};
  Json violations = Json::array();
  for (int i = 0; i < d.k(); ++i) {
    const VertexMask vi = d.components[i].vertices;
    const Graph h = induced_subgraph(d.component_graph(i), vi);
    if (!classify(h).in_ue) violations.push_back({{"component", i}, {"claim", "in U_E"}});
    for (Vertex v : members(g.vertices() & ~vi))
      if (popcount(g.neighbors(v) & vi) > 2)
        violations.push_back({{"component", i}, {"vertex", v}, {"claim", "at most two neighbours"}});
  }
  r.data = {{"components", d.k()}, {"violations", violations}};
  if (d.k() == 0) r.verdict = Verdict::vacuous;
  if (!violations.empty()) {
    r.verdict = Verdict::fail;
    r.detail = "a triangle-subgraph is not closed as claimed";
  }
  return r;
}

AuditResult separating_split_audit(const Graph& g) {
  AuditResult r{.check = "separating_3_cycle_split"};
  const auto seps = separating_3_cycles(g);
  Json parts = Json::array();
  bool ok = true;
  for (const Triangle& t : seps) {
    const VertexMask tm = mask_of(t);
    for (VertexMask x : components(g, g.vertices() & ~tm)) {
      const bool inner = classify(induced_subgraph(g, tm | x)).in_ue;
      const bool outer = classify(induced_subgraph(g, g.vertices() & ~x)).in_ue;
      ok = ok && inner && outer;
      parts.push_back({{"triangle", t}, {"component", members(x)}, {"inner_in_ue", inner}, {"outer_in_ue", outer}});
    }
  }
  r.data = {{"separating_3_cycles", seps.size()}, {"splits", parts}};
  if (seps.empty()) r.verdict = Verdict::vacuous;
  if (!ok) {
    r.verdict = Verdict::fail;
    r.detail = "a side of a separating 3-cycle is not in U_E";
  }
  return r;
}

AuditResult aux_face_bound_audit(const AuxGraph& aux) {
  AuditResult r{.check = "thm44_lemma43_HG"};
  if (aux.k < 4) return skipped(r.check, "fewer than four triangle-subgraphs");
  if (!aux.planar) {
    r.verdict = Verdict::fail;
    r.detail = "H_G is not planar";
    return r;
  }
  const Lemma43Report lr = lemma43_check(aux.graph);
  r.data = to_json(lr);
  std::vector<std::string> bad;
  if (!lr.premise) bad.push_back("premise fails on H_G");
  if (lr.faces > lr.vertices - 2) bad.push_back("|F(H_G)| > |V(H_G)| - 2");
  if (lr.ledger && !lr.ledger->conserved) bad.push_back("discharging does not conserve charge");
  if (lr.ledger && lr.premise && !lr.ledger->nonnegative) bad.push_back("negative final charge");
  if (!bad.empty()) {
    r.verdict = Verdict::fail;
    r.detail = bad.front();
  }
  return r;
}

AuditReport audit_instance(const Graph& g, DomainMode mode) {
  AuditReport rep;
  rep.n = g.order();
  rep.m = g.size();
  rep.mode = mode;
  rep.graph6 = canonical_graph6(g);
  PlanarityResult pr = is_planar(g);
  if (!pr.planar) throw PreconditionError("audit: graph is not planar");
  if (!is_connected(g) || g.order() < 3)
    throw PreconditionError("audit: graph must be connected with at least 3 vertices");
  const ClassificationReport cls = classify(g);
  rep.in_ue = cls.in_ue;
  rep.separating_free = separating_3_cycles(g).empty();
  if (mode == DomainMode::strict && !rep.in_ue)
    throw PreconditionError("audit: graph is not in U_E (use relaxed mode)");
  const bool binding = mode == DomainMode::strict;
  const PlanarEmbedding& emb = *pr.embedding;
  auto& out = rep.results;

  out.push_back(union_connectivity_audit(g));
  out.push_back(relabel_binding(degree_parity_audit(g, emb), rep.in_ue));
  out.push_back(relabel_binding(triangle_count_audit(g), rep.in_ue));
  if (cls.uniquely_3) out.push_back(min_edge_check(g));
  else out.push_back(skipped("min_edge_count", "not uniquely 3-colorable"));
  out.push_back(separating_split_audit(g));
  out.back() = relabel_binding(out.back(), rep.in_ue);

  const bool structural = rep.separating_free || mode == DomainMode::relaxed;
  const TriangleDecomposition d = triangle_components(g, DomainMode::relaxed);
  const bool struct_binding = binding && rep.separating_free;
  static const char* kStructural[] = {"triangle_decomposition", "thm33_subgraph_closure", "cor34_triangle_paths",
                                      "thm36_subgraph_pairs",   "thm41_faces_HG",        "thm42_face_sequences",
                                      "cor45_f_ge4_bound",      "thm44_lemma43_HG"};
  if (!structural) {
    for (const char* c : kStructural) out.push_back(skipped(c, "graph has a separating 3-cycle"));
  } else {
    const DomainMode sm = struct_binding ? DomainMode::strict : DomainMode::relaxed;
    const AuxGraph aux = build_HG(g, emb, d);
    out.push_back(relabel_binding(decomposition_audit(g, d), struct_binding));
    out.push_back(relabel_binding(subgraph_closure_audit(g, d), struct_binding));
    out.push_back(relabel_binding(cor34_audit(g, d), struct_binding));
    out.push_back(thm36_audit(g, d, sm));
    out.push_back(thm41_audit(aux, d, sm));
    out.push_back(thm42_audit(g, aux, d, sm));
    if (d.k() >= 4) {
      out.push_back(relabel_binding(cor45_audit(aux, d, emb), struct_binding));
      out.push_back(relabel_binding(aux_face_bound_audit(aux), struct_binding));
    } else {
      out.push_back(skipped("cor45_f_ge4_bound", "fewer than four triangle-subgraphs"));
      out.push_back(skipped("thm44_lemma43_HG", "fewer than four triangle-subgraphs"));
    }
  }

  const BoundReport br = bound_report(g, emb, d, rep.in_ue && rep.separating_free);
  out.push_back(formula1_audit(br));
  out.push_back(formula2_audit(br));
  out.push_back(thm46_audit(br, rep.in_ue));
  return rep;
}

Json to_json(const AuditReport& r) {
  Json results = Json::array();
  for (const auto& a : r.results) results.push_back(to_json(a));
  return {{"graph6", r.graph6},
          {"n", r.n},
          {"m", r.m},
          {"in_ue", r.in_ue},
          {"separating_3_cycle_free", r.separating_free},
          {"mode", r.mode == DomainMode::strict ? "strict" : "relaxed"},
          {"passed", r.passed()},
          {"digest", r.digest()},
          {"results", results}};
}

}  // namespace uec
