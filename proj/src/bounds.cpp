#include "uec/bounds.hpp"

#include <numeric>

#include "uec/criticality.hpp"
#include "uec/error.hpp"

namespace uec {

namespace {

RestrictedDual restricted_dual(const Graph& g, const PlanarEmbedding& emb, const FaceStructure& fs) {
  const DualMultigraph dm = dual(g, emb);
  const auto& fw = fs.faces();
  std::vector<int> id(dm.nodes, -1);
  RestrictedDual out;
  for (int f = 0; f < dm.nodes; ++f)
    if (fw[f].degree() >= 4) id[f] = out.nodes++;
  std::vector<int> parent(out.nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int merges = 0;
  for (auto [a, b] : dm.links) {
    if (id[a] < 0 || id[b] < 0) continue;
    ++out.edges;
    const int ra = find(id[a]), rb = find(id[b]);
    if (ra != rb) {
      parent[std::max(ra, rb)] = std::min(ra, rb);
      ++merges;
    }
  }
  out.components = out.nodes - merges;
  out.faces = out.edges - out.nodes + 1 + out.components;
  return out;
}

}  // namespace

BoundReport bound_report(const Graph& g, const PlanarEmbedding& emb, const TriangleDecomposition& d,
                         bool in_domain) {
  if (!is_connected(g) || g.order() < 3)
    throw InputError("bound_report: graph must be connected with at least 3 vertices");
  validate_rotation(g, emb);
  BoundReport r;
  r.n = g.order();
  r.m = g.size();
  r.q = 3 * r.n - 6 - r.m;
  const FaceStructure fs(g, emb);
  r.faces = fs.face_count();
  r.f3 = fs.count_of_degree(3);
  r.f_ge4 = fs.count_of_degree_at_least(4);
  r.k = d.k();
  r.vprime = popcount(d.gprime_vertices);
  r.eprime = d.gprime.size();
  r.omega_prime = d.omega_prime;
  r.f_ge4_prime = gprime_faces(d, emb).f_ge4;
  r.dual0 = restricted_dual(g, emb, fs);
  r.formula1_terms = {{"2n-4-q", 2 * r.n - 4 - r.q},
                      {"f3", r.f3},
                      {"k-f_ge4_prime", r.k - r.f_ge4_prime},
                      {"n-vprime", r.n - r.vprime},
                      {"omega_prime-1", r.omega_prime - 1}};
  for (const auto& t : r.formula1_terms) r.formula1_sum += t.value;
  r.formula2_slack = r.f3 - (2 * r.n - 4 - 2 * r.q);
  r.formula2_equality = r.formula2_slack == 0;
  r.thm46_margin_x2 = 5 * r.n - 12 - 2 * r.m;
  r.in_domain = in_domain && r.n >= 4;
  return r;
}

BoundReport bound_report(const Graph& g) {
  PlanarityResult pr = is_planar(g);
  if (!pr.planar) throw InputError("bound_report: graph is not planar");
  if (!is_connected(g) || g.order() < 3)
    throw InputError("bound_report: graph must be connected with at least 3 vertices");
  const TriangleDecomposition d = triangle_components(g, DomainMode::relaxed);
  const bool in_ue = classify(g).in_ue;
  return bound_report(g, *pr.embedding, d, in_ue && d.separating_free);
}

AuditResult formula1_audit(const BoundReport& r) {
  AuditResult a{.check = "formula1_identities"};
  struct Identity {
    const char* name;
    int lhs;
    int rhs;
  };
  const Identity ids[] = {
      {"|E(G')| = k + 2 f3", r.eprime, r.k + 2 * r.f3},
      {"|V(G0*)| = f_ge4", r.dual0.nodes, r.f_ge4},
      {"|F(G0*)| = n - |V(G')| + omega(G')", r.dual0.faces, r.n - r.vprime + r.omega_prime},
      {"omega(G0*) = f_ge4(G')", r.dual0.components, r.f_ge4_prime},
      {"|E(G)| = |E(G')| + |E(G0*)|", r.m, r.eprime + r.dual0.edges},
      {"|E(G)| = sum of terms", r.m, r.formula1_sum},
  };
  Json rows = Json::array();
  bool ok = true;
  for (const auto& id : ids) {
    rows.push_back({{"identity", id.name}, {"lhs", id.lhs}, {"rhs", id.rhs}, {"holds", id.lhs == id.rhs}});
    if (id.lhs != id.rhs && ok) {
      ok = false;
      a.detail = std::string("identity fails: ") + id.name;
    }
  }
  a.data = {{"identities", rows}, {"in_domain", r.in_domain}};
  if (!r.in_domain) {
    a.verdict = Verdict::vacuous;
    a.detail = "outside the domain (requires U_E, no separating 3-cycles, n >= 4)";
  } else if (!ok) {
    a.verdict = Verdict::fail;
  }
  return a;
}

AuditResult formula2_audit(const BoundReport& r) {
  AuditResult a{.check = "formula2_inequality"};
  a.data = {{"f3", r.f3}, {"lower", 2 * r.n - 4 - 2 * r.q}, {"slack", r.formula2_slack},
            {"equality", r.formula2_equality}};
  if (r.formula2_slack < 0) {
    a.verdict = Verdict::fail;
    a.detail = "fewer 3-faces than 2n - 4 - 2q";
  }
  return a;
}

AuditResult thm46_audit(const BoundReport& r, bool in_ue) {
  AuditResult a{.check = "thm46_upper_bound"};
  a.data = {{"n", r.n}, {"m", r.m}, {"bound", upper_line(r.n)}, {"margin", r.thm46_margin_x2 / 2.0}};
  if (!in_ue || r.n < 6) {
    a.verdict = Verdict::not_applicable;
    a.detail = !in_ue ? "not in U_E" : "n < 6";
  } else if (r.m > upper_line(r.n)) {
    a.verdict = Verdict::fail;
    a.detail = "m exceeds floor(5n/2) - 6";
  }
  return a;
}

std::vector<AuditResult> size_table_assert(const std::vector<SizeRow>& rows) {
  std::vector<AuditResult> out;
  for (const SizeRow& row : rows) {
    AuditResult a{.check = "size_row_n" + std::to_string(row.n)};
    a.data = {{"n", row.n},
              {"lower", lower_line(row.n)},
              {"upper", upper_line(row.n)},
              {"conjecture", 9.0 * row.n / 4.0 - 6.0},
              {"complete", row.complete}};
    a.data["size"] = row.size ? Json(*row.size) : Json("none");
    if (!row.complete) {
      a.verdict = Verdict::not_applicable;
      a.detail = "incomplete run, no size claim";
    } else if (!row.size) {
      a.verdict = Verdict::vacuous;
      a.detail = "no U_E graph on this many vertices";
    } else {
      a.data["above_conjecture"] = 4 * *row.size > 9 * row.n - 24;
      if (*row.size < lower_line(row.n)) {
        a.verdict = Verdict::fail;
        a.detail = "size(n) below 2n - 3";
      } else if (row.n >= 6 && *row.size > upper_line(row.n)) {
        a.verdict = Verdict::fail;
        a.detail = "size(n) above floor(5n/2) - 6";
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

Json to_json(const BoundReport& r) {
  Json terms = Json::array();
  for (const auto& t : r.formula1_terms) terms.push_back({{"term", t.name}, {"value", t.value}});
  return {{"n", r.n},
          {"m", r.m},
          {"q", r.q},
          {"faces", r.faces},
          {"f3", r.f3},
          {"f_ge4", r.f_ge4},
          {"k", r.k},
          {"vprime", r.vprime},
          {"eprime", r.eprime},
          {"omega_prime", r.omega_prime},
          {"f_ge4_prime", r.f_ge4_prime},
          {"dual0", {{"nodes", r.dual0.nodes}, {"edges", r.dual0.edges},
                     {"components", r.dual0.components}, {"faces", r.dual0.faces}}},
          {"formula1_terms", terms},
          {"formula1_sum", r.formula1_sum},
          {"formula2_slack", r.formula2_slack},
          {"formula2_equality", r.formula2_equality},
          {"thm46_margin", r.thm46_margin_x2 / 2.0},
          {"in_domain", r.in_domain}};
}

Json to_json(const SizeRow& r) {
  Json j{{"n", r.n}};
  j["size"] = r.size ? Json(*r.size) : Json("none");
  j["witnesses"] = r.witnesses;
  j["ue_count"] = r.ue_count;
  j["complete"] = r.complete;
  j["lower_line"] = lower_line(r.n);
  j["upper_line"] = upper_line(r.n);
  j["conjecture_line"] = 9.0 * r.n / 4.0 - 6.0;
  return j;
}

}  // namespace uec
