#include "uec/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "uec/coloring.hpp"
#include "uec/error.hpp"

namespace uec {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

Json vertex_list(VertexMask s) { return members(s); }

}  // namespace

std::string to_string(AuxProvenance p) {
  switch (p) {
    case AuxProvenance::step1: return "step1";
    case AuxProvenance::step2_property_p: return "step2_propertyP";
    case AuxProvenance::step2_tree: return "step2_tree";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

Graph TriangleDecomposition::component_graph(int i) const {
  return edge_subgraph(n, components.at(i).edges);
}

std::vector<int> TriangleDecomposition::containing(Vertex u) const {
  std::vector<int> out;
  for (int i = 0; i < k(); ++i)
    if (components[i].vertices & bit(u)) out.push_back(i);
  return out;
}

TriangleDecomposition triangle_components(const Graph& g, DomainMode mode) {
  TriangleDecomposition d;
  d.n = g.order();
  d.separating_free = separating_3_cycles(g).empty();
  if (mode == DomainMode::strict && !d.separating_free)
    throw PreconditionError("triangle_components: graph has a separating 3-cycle");
  d.triangles = triangles(g);
  const int t = static_cast<int>(d.triangles.size());

  std::map<Edge, std::vector<int>> on_edge;
  for (int i = 0; i < t; ++i) {
    const auto& tr = d.triangles[i];
    on_edge[make_edge(tr[0], tr[1])].push_back(i);
    on_edge[make_edge(tr[0], tr[2])].push_back(i);
    on_edge[make_edge(tr[1], tr[2])].push_back(i);
  }
  DisjointSets sets(t);
  for (const auto& [e, ts] : on_edge)
    for (std::size_t i = 1; i < ts.size(); ++i) sets.unite(ts[0], ts[i]);

  std::map<int, int> root_to_component;
  for (int i = 0; i < t; ++i) {
    const int r = sets.find(i);
    auto [it, fresh] = root_to_component.try_emplace(r, static_cast<int>(d.components.size()));
    if (fresh) d.components.emplace_back();
    TriangleSubgraph& h = d.components[it->second];
    h.triangles.push_back(i);
    h.vertices |= mask_of(d.triangles[i]);
  }
  for (auto& h : d.components) {
    std::set<Edge> es;
    for (int i : h.triangles) {
      const auto& tr = d.triangles[i];
      es.insert(make_edge(tr[0], tr[1]));
      es.insert(make_edge(tr[0], tr[2]));
      es.insert(make_edge(tr[1], tr[2]));
    }
    h.edges.assign(es.begin(), es.end());
  }

  d.gprime = Graph(d.n);
  for (const auto& h : d.components) {
    d.gprime_vertices |= h.vertices;
    for (const Edge& e : h.edges)
      if (!d.gprime.has_edge(e)) d.gprime.add_edge(e.u, e.v);
  }
  d.D.assign(d.n, 0);
  for (const auto& h : d.components)
    for (Vertex v : members(h.vertices)) ++d.D[v];
  d.omega_prime = static_cast<int>(components(d.gprime, d.gprime_vertices).size());
  return d;
}

AuditResult decomposition_audit(const Graph& g, const TriangleDecomposition& d) {
  AuditResult r{.check = "triangle_decomposition"};
  Json problems = Json::array();
  int edge_sum = 0;
  for (int i = 0; i < d.k(); ++i) {
    const auto& h = d.components[i];
    const int nv = popcount(h.vertices);
    const int ne = static_cast<int>(h.edges.size());
    edge_sum += ne;
    if (nv != h.t() + 2) problems.push_back("H" + std::to_string(i) + ": |V| != t + 2");
    if (ne != 2 * h.t() + 1) problems.push_back("H" + std::to_string(i) + ": |E| != 2t + 1");
    const Graph induced = induced_subgraph(g, h.vertices);
    if (induced.size() != ne) problems.push_back("H" + std::to_string(i) + ": G[V(H)] has extra edges");
    const Graph compact = induced_subgraph(d.component_graph(i), h.vertices);
    const bool outerplanar = planar(add_vertex(compact, compact.vertices()));
    if (!outerplanar || ne != 2 * nv - 3)
      problems.push_back("H" + std::to_string(i) + ": not maximal outerplanar");
  }
  const int tri = static_cast<int>(d.triangles.size());
  if (edge_sum != d.gprime.size()) problems.push_back("components share an edge");
  if (d.gprime.size() != d.k() + 2 * tri) problems.push_back("|E(G')| != k + 2 * triangles");
  r.data = {{"k", d.k()}, {"triangles", tri}, {"edges_gprime", d.gprime.size()}, {"problems", problems}};
  if (!problems.empty()) {
    r.verdict = Verdict::fail;
    r.detail = problems.front().get<std::string>();
  }
  return r;
}

bool property_P(const TriangleDecomposition& d, int i, int j, Vertex via) {
  if (i < 0 || j < 0 || i >= d.k() || j >= d.k() || i == j)
    throw InputError("property_P: bad component indices");
  const VertexMask vi = d.components[i].vertices;
  const VertexMask vj = d.components[j].vertices;
  if (!(vi & vj & bit(via)))
    throw InputError("property_P: vertex " + std::to_string(via) + " is not common to both");
  for (int l = 0; l < d.k(); ++l) {
    if (l == i || l == j) continue;
    const VertexMask vl = d.components[l].vertices;
    if ((vl & vi & ~bit(via)) && (vl & vj & ~bit(via))) return true;
  }
  return false;
}

bool property_P(const TriangleDecomposition& d, int i, int j) {
  if (i < 0 || j < 0 || i >= d.k() || j >= d.k() || i == j)
    throw InputError("property_P: bad component indices");
  const VertexMask common = d.components[i].vertices & d.components[j].vertices;
  if (!common) throw InputError("property_P: components have no common vertex");
  return property_P(d, i, j, lowest(common));
}

// ---------------------------------------------------------------------------

int AuxGraph::face_count() const { return euler_face_count(graph); }

AuxGraph build_HG(const Graph& g, const PlanarEmbedding& emb, const TriangleDecomposition& d) {
  validate_rotation(g, emb);
  AuxGraph aux;
  aux.k = d.k();
  std::map<Edge, int> comp_of_edge;
  for (int i = 0; i < d.k(); ++i)
    for (const Edge& e : d.components[i].edges) comp_of_edge[e] = i;

  for (Vertex u : members(d.gprime_vertices)) {
    if (d.D[u] == 2) {
      const auto cs = d.containing(u);
      aux.edges.push_back({cs[0], cs[1], AuxProvenance::step1, u});
      continue;
    }
    if (d.D[u] < 3) continue;
    LocalTree lt;
    lt.u = u;
    for (Vertex w : emb.rotation[u]) {
      const auto it = comp_of_edge.find(make_edge(u, w));
      if (it == comp_of_edge.end()) continue;
      if (std::ranges::find(lt.order, it->second) == lt.order.end()) lt.order.push_back(it->second);
    }
    std::ranges::rotate(lt.order, std::ranges::min_element(lt.order));
    const int du = static_cast<int>(lt.order.size());
    DisjointSets forest(d.k());
    for (int a = 0; a < du; ++a)
      for (int b = a + 1; b < du; ++b) {
        const int ia = lt.order[a], ib = lt.order[b];
        if (!property_P(d, ia, ib, u)) continue;
        lt.property_p_edges.emplace_back(ia, ib);
        if (!forest.unite(ia, ib)) lt.forest = false;
        aux.edges.push_back({ia, ib, AuxProvenance::step2_property_p, u});
      }
    for (int l = 0; l < du; ++l) {
      const int ia = lt.order[l], ib = lt.order[(l + 1) % du];
      if (forest.unite(ia, ib)) {
        lt.tree_edges.emplace_back(ia, ib);
        aux.edges.push_back({ia, ib, AuxProvenance::step2_tree, u});
      }
    }
    if (!lt.forest) aux.forests = false;
    aux.local.push_back(std::move(lt));
  }

  aux.graph = Graph(aux.k);
  for (const AuxEdge& e : aux.edges) {
    if (aux.graph.has_edge(e.a, e.b)) aux.simple = false;
    else aux.graph.add_edge(e.a, e.b);
  }
  auto pr = is_planar(aux.graph);
  aux.planar = pr.planar;
  aux.embedding = std::move(pr.embedding);
  return aux;
}

GprimeFaces gprime_faces(const TriangleDecomposition& d, const PlanarEmbedding& emb) {
  GprimeFaces out;
  const Graph& gp = d.gprime;
  const int vprime = popcount(d.gprime_vertices);
  out.faces_euler = gp.size() - vprime + 1 + d.omega_prime;
  for (const auto& h : d.components) out.sum_t += h.t();
  PlanarEmbedding restricted;
  restricted.rotation.resize(d.n);
  for (Vertex v = 0; v < d.n; ++v)
    for (Vertex w : emb.rotation.at(v))
      if (gp.has_edge(v, w)) restricted.rotation[v].push_back(w);
  out.faces_traversal = FaceStructure(gp, restricted).face_count();
  if (out.faces_traversal != out.faces_euler)
    throw TheoremViolation("face count of G' under the inherited embedding violates Euler's formula");
  out.f_ge4 = out.faces_euler - out.sum_t;
  return out;
}

int f_ge4_of_Gprime(const TriangleDecomposition& d, const PlanarEmbedding& emb) {
  return gprime_faces(d, emb).f_ge4;
}

namespace {

int f_ge4_euler(const TriangleDecomposition& d) {
  int sum_t = 0;
  for (const auto& h : d.components) sum_t += h.t();
  return d.gprime.size() - popcount(d.gprime_vertices) + 1 + d.omega_prime - sum_t;
}

}  // namespace

AuditResult thm41_audit(const AuxGraph& aux, const TriangleDecomposition& d, DomainMode mode) {
  AuditResult r{.check = "thm41_faces_HG", .binding = mode == DomainMode::strict};
  const int fh = aux.face_count();
  const int f4 = f_ge4_euler(d);
  r.data = {{"faces_HG", fh},     {"f_ge4_Gprime", f4},         {"simple", aux.simple},
            {"planar", aux.planar}, {"forests", aux.forests}, {"k", aux.k}};
  std::vector<std::string> bad;
  if (fh != f4) bad.push_back("|F(H_G)| != |F>=4(G')|");
  if (!aux.simple) bad.push_back("H_G has parallel edges");
  if (!aux.planar) bad.push_back("H_G is not planar");
  if (!aux.forests) bad.push_back("some G_u contains a cycle");
  if (!bad.empty()) {
    r.verdict = Verdict::fail;
    r.detail = bad.front();
  }
  if (!r.binding) r.detail += (r.detail.empty() ? "" : "; ") + std::string("non-binding (relaxed mode)");
  return r;
}

AuditResult cor34_audit(const Graph& g, const TriangleDecomposition& d) {
  AuditResult r{.check = "cor34_triangle_paths"};
  Json violations = Json::array();
  Json non_tree = Json::array();
  long long pairs = 0;
  auto shares_edge = [&](int a, int b) {
    return popcount(mask_of(d.triangles[a]) & mask_of(d.triangles[b])) == 2;
  };
  for (int c = 0; c < d.k(); ++c) {
    const auto& ts = d.components[c].triangles;
    const int t = static_cast<int>(ts.size());
    int adjacency_edges = 0;
    for (int a = 0; a < t; ++a)
      for (int b = a + 1; b < t; ++b)
        if (shares_edge(ts[a], ts[b])) ++adjacency_edges;
    if (adjacency_edges != t - 1) non_tree.push_back(c);
    for (int s = 0; s < t; ++s) {
      std::vector<int> parent(t, -1);
      std::vector<int> queue{s};
      parent[s] = s;
      for (std::size_t q = 0; q < queue.size(); ++q)
        for (int b = 0; b < t; ++b)
          if (parent[b] < 0 && shares_edge(ts[queue[q]], ts[b])) {
            parent[b] = queue[q];
            queue.push_back(b);
          }
      for (int e = 0; e < t; ++e) {
        if (e == s || parent[e] < 0) continue;
        std::vector<int> path{e};  // path from e back to s
        while (path.back() != s) path.push_back(parent[path.back()]);
        std::ranges::reverse(path);
        const VertexMask first = mask_of(d.triangles[ts[path[0]]]);
        const VertexMask second = mask_of(d.triangles[ts[path[1]]]);
        const VertexMask last = mask_of(d.triangles[ts[path.back()]]);
        const VertexMask before = mask_of(d.triangles[ts[path[path.size() - 2]]]);
        const Vertex v = lowest(first & ~second);
        const Vertex u = lowest(last & ~before);
        ++pairs;
        if (v == u || g.has_edge(v, u))
          violations.push_back({{"component", c}, {"tips", {v, u}}, {"adjacent", g.has_edge(v, u)}});
      }
    }
  }
  r.data = {{"ordered_pairs", pairs}, {"violations", violations}, {"non_tree_components", non_tree}};
  if (pairs == 0) r.verdict = Verdict::vacuous;
  if (!violations.empty()) {
    r.verdict = Verdict::fail;
    r.detail = "triangle path with equal or adjacent tips";
  } else if (d.separating_free && !non_tree.empty()) {
    r.verdict = Verdict::fail;
    r.detail = "triangle adjacency inside a component is not a tree";
  }
  return r;
}

AuditResult thm36_audit(const Graph& g, const TriangleDecomposition& d, DomainMode mode) {
  AuditResult r{.check = "thm36_subgraph_pairs", .binding = mode == DomainMode::strict};
  Json violations = Json::array();
  int pairs = 0, triples = 0;
  for (int a = 0; a < d.k(); ++a)
    for (int b = a + 1; b < d.k(); ++b) {
      ++pairs;
      const VertexMask va = d.components[a].vertices, vb = d.components[b].vertices;
      const VertexMask common = va & vb;
      if (popcount(common) > 1) {
        violations.push_back({{"part", "i"}, {"pair", {a, b}}, {"common", vertex_list(common)}});
        continue;
      }
      const int crossing = common ? e_between(g, va & ~common, vb & ~common) : e_between(g, va, vb);
      const int limit = common ? 1 : 3;
      if (crossing > limit)
        violations.push_back({{"part", "ii"}, {"pair", {a, b}}, {"crossing", crossing}, {"limit", limit}});
    }
  std::set<std::vector<int>> checked;
  for (int a = 0; a < d.k(); ++a)
    for (int b = a + 1; b < d.k(); ++b) {
      const VertexMask va = d.components[a].vertices, vb = d.components[b].vertices;
      if (popcount(va & vb) != 1) continue;
      const VertexMask v = va & vb;
      for (int c = 0; c < d.k(); ++c) {
        if (c == a || c == b) continue;
        const VertexMask vc = d.components[c].vertices;
        if (!(vc & va & ~v) || !(vc & vb & ~v)) continue;
        std::vector<int> key{a, b, c};
        std::ranges::sort(key);
        if (!checked.insert(key).second) continue;
        ++triples;
        const std::vector<Graph> parts{d.component_graph(a), d.component_graph(b), d.component_graph(c)};
        if (!is_uniquely_3_colorable(drop_isolated(union_subgraphs(parts))).unique)
          violations.push_back({{"part", "iii"}, {"triple", key}});
      }
    }
  r.data = {{"pairs", pairs}, {"union_triples", triples}, {"violations", violations}};
  if (pairs == 0) r.verdict = Verdict::vacuous;
  if (!violations.empty()) {
    r.verdict = Verdict::fail;
    r.detail = "maximal triangle-subgraph pair or triple violates the bound";
  }
  if (!r.binding && r.verdict == Verdict::fail) r.detail += " (non-binding, relaxed mode)";
  return r;
}

AuditResult thm42_audit(const Graph& g, const AuxGraph& aux, const TriangleDecomposition& d,
                        DomainMode mode) {
  AuditResult r{.check = "thm42_face_sequences", .binding = mode == DomainMode::strict};
  if (!aux.planar || !aux.embedding) {
    r.verdict = Verdict::not_applicable;
    r.detail = "H_G is not planar";
    return r;
  }
  if (aux.k > 64) {
    r.verdict = Verdict::not_applicable;
    r.detail = "more than 64 triangle-subgraphs";
    return r;
  }
  const FaceStructure fs(aux.graph, *aux.embedding);
  const auto& faces = fs.faces();
  const int nf = static_cast<int>(faces.size());
  constexpr std::size_t kStateCap = 20000;

  std::map<VertexMask, bool> unique_cache;
  auto union_unique = [&](VertexMask nodes) {
    auto it = unique_cache.find(nodes);
    if (it != unique_cache.end()) return it->second;
    std::vector<Graph> parts;
    for (int i : members(nodes)) parts.push_back(d.component_graph(i));
    const bool u = is_uniquely_3_colorable(drop_isolated(union_subgraphs(parts))).unique;
    unique_cache.emplace(nodes, u);
    return u;
  };
  // (i)/(ii) against a certified union G0 and a component outside it
  Json closure_violations = Json::array();
  std::set<VertexMask> closure_checked;
  auto check_closure = [&](VertexMask nodes) {
    if (!closure_checked.insert(nodes).second) return;
    VertexMask v0 = 0;
    for (int i : members(nodes)) v0 |= d.components[i].vertices;
    for (int x = 0; x < d.k(); ++x) {
      if (nodes & bit(x)) continue;
      const VertexMask vx = d.components[x].vertices;
      const VertexMask common = v0 & vx;
      if (popcount(common) > 1) {
        closure_violations.push_back({{"union", members(nodes)}, {"other", x}, {"part", "i"}});
        continue;
      }
      const int crossing = common ? e_between(g, v0 & ~common, vx & ~common) : e_between(g, v0, vx);
      if (crossing > (common ? 1 : 3))
        closure_violations.push_back({{"union", members(nodes)}, {"other", x}, {"part", "ii"}});
    }
  };

  Json violations = Json::array();
  std::set<std::vector<bool>> seen;
  std::size_t states = 0;
  bool truncated = false;
  int starts = 0;
  for (int f0 = 0; f0 < nf && !truncated; ++f0) {
    if (faces[f0].degree() != 3) continue;
    ++starts;
    std::vector<std::pair<std::vector<bool>, VertexMask>> stack;
    std::vector<bool> s0(nf, false);
    s0[f0] = true;
    stack.emplace_back(s0, faces[f0].vertex_set());
    while (!stack.empty()) {
      auto [set, nodes] = stack.back();
      stack.pop_back();
      if (!seen.insert(set).second) continue;
      if (++states > kStateCap) {
        truncated = true;
        break;
      }
      if (!union_unique(nodes)) {
        violations.push_back({{"faces", [&] {
                                 Json fl = Json::array();
                                 for (int f = 0; f < nf; ++f)
                                   if (set[f]) fl.push_back(f);
                                 return fl;
                               }()},
                              {"claim", "union uniquely 3-colorable"}});
      } else {
        check_closure(nodes);
      }
      for (int f = 0; f < nf; ++f) {
        if (set[f] || faces[f].degree() != 4) continue;
        bool adjacent = false;
        for (const Edge& e : faces[f].edges()) {
          if (set[fs.face_of(e.u, e.v)] || set[fs.face_of(e.v, e.u)]) {
            adjacent = true;
            break;
          }
        }
        if (!adjacent) continue;
        const VertexMask fresh = faces[f].vertex_set() & ~nodes;
        if (popcount(fresh) != 2) {
          violations.push_back({{"face", f}, {"new_vertices", popcount(fresh)}, {"claim", "exactly two new vertices"}});
          continue;
        }
        auto next = set;
        next[f] = true;
        stack.emplace_back(std::move(next), nodes | fresh);
      }
    }
  }
  r.data = {{"start_faces", starts},
            {"sequence_states", std::min(states, kStateCap)},
            {"truncated", truncated},
            {"violations", violations},
            {"closure_violations", closure_violations}};
  if (starts == 0) r.verdict = Verdict::vacuous;
  if (!violations.empty() || !closure_violations.empty()) {
    r.verdict = Verdict::fail;
    r.detail = violations.empty() ? "certified union meets another component too often"
                                  : "face sequence claim failed";
  }
  if (truncated) r.detail += (r.detail.empty() ? "" : "; ") + std::string("state cap reached");
  if (!r.binding) r.detail += (r.detail.empty() ? "" : "; ") + std::string("non-binding (relaxed mode)");
  return r;
}

AuditResult cor45_audit(const AuxGraph& aux, const TriangleDecomposition& d, const PlanarEmbedding& emb) {
  if (d.k() < 4) throw PreconditionError("cor45_audit: requires at least four triangle-subgraphs");
  AuditResult r{.check = "cor45_f_ge4_bound"};
  const int f4 = f_ge4_of_Gprime(d, emb);
  r.data = {{"k", d.k()},
            {"f_ge4_Gprime", f4},
            {"bound", d.k() - 2},
            {"k_minus_f_ge4", d.k() - f4},
            {"faces_HG", aux.face_count()}};
  if (f4 > d.k() - 2) {
    r.verdict = Verdict::fail;
    r.detail = "|F>=4(G')| exceeds k - 2";
  }
  return r;
}

// ---------------------------------------------------------------------------

Json to_json(const TriangleDecomposition& d) {
  Json j;
  j["k"] = d.k();
  j["triangle_count"] = d.triangles.size();
  Json comps = Json::array();
  for (const auto& h : d.components)
    comps.push_back({{"vertices", vertex_list(h.vertices)}, {"t", h.t()}, {"edges", h.edges.size()}});
  j["components"] = comps;
  Json dmap = Json::object();
  for (Vertex v = 0; v < d.n; ++v)
    if (d.D[v] > 0) dmap[std::to_string(v)] = d.D[v];
  j["D"] = dmap;
  j["gprime_vertices"] = popcount(d.gprime_vertices);
  j["gprime_edges"] = d.gprime.size();
  j["omega_prime"] = d.omega_prime;
  j["separating_3_cycle_free"] = d.separating_free;
  return j;
}

Json to_json(const AuxGraph& aux) {
  Json j;
  j["nodes"] = aux.k;
  Json edges = Json::array();
  for (const auto& e : aux.edges)
    edges.push_back({{"a", e.a}, {"b", e.b}, {"tag", to_string(e.tag)}, {"via", e.via}});
  j["edges"] = edges;
  Json local = Json::array();
  for (const auto& lt : aux.local) {
    Json pe = Json::array(), te = Json::array();
    for (auto [a, b] : lt.property_p_edges) pe.push_back({a, b});
    for (auto [a, b] : lt.tree_edges) te.push_back({a, b});
    local.push_back({{"u", lt.u}, {"order", lt.order}, {"property_P", pe}, {"tree", te}, {"forest", lt.forest}});
  }
  j["local"] = local;
  j["simple"] = aux.simple;
  j["planar"] = aux.planar;
  j["faces"] = aux.face_count();
  return j;
}

}  // namespace uec
