#include <algorithm>
#include <string>

#include "uec/error.hpp"
#include "uec/structure.hpp"

namespace uec {

namespace {

class CycleWalker {
 public:
  CycleWalker(const Graph& h, int max_len, std::size_t max_count, CycleList& out)
      : h_(h), max_len_(max_len), max_count_(max_count), out_(out), index_(h.order() * h.order(), -1) {
    out_.edge_index = h.edges();
    for (std::size_t i = 0; i < out_.edge_index.size(); ++i) {
      const Edge& e = out_.edge_index[i];
      index_[e.u * h.order() + e.v] = index_[e.v * h.order() + e.u] = static_cast<int>(i);
    }
  }

  void run() {
    for (Vertex s = 0; s < h_.order() && !out_.truncated; ++s) {
      start_ = s;
      path_ = {s};
      extend(bit(s));
    }
  }

 private:
  // cycles rooted at their least vertex; the second vertex is below the last
  // so each cycle is produced in exactly one direction
  void extend(VertexMask used) {
    if (out_.truncated) return;
    const Vertex tail = path_.back();
    const int len = static_cast<int>(path_.size());
    if (len >= 3 && h_.has_edge(tail, start_) && path_[1] < tail) emit();
    if (len >= max_len_) return;
    const VertexMask next = h_.neighbors(tail) & ~used & ~prefix_mask(start_ + 1);
    for (Vertex w : members(next)) {
      path_.push_back(w);
      extend(used | bit(w));
      path_.pop_back();
      if (out_.truncated) return;
    }
  }

  void emit() {
    if (out_.cycles.size() >= max_count_) {
      out_.truncated = true;
      return;
    }
    Cycle c;
    c.vertices = path_;
    c.edge_set.resize(out_.edge_index.size());
    for (std::size_t i = 0; i < path_.size(); ++i)
      c.edge_set.set(index_[path_[i] * h_.order() + path_[(i + 1) % path_.size()]]);
    out_.cycles.push_back(std::move(c));
  }

  const Graph& h_;
  int max_len_;
  std::size_t max_count_;
  CycleList& out_;
  std::vector<int> index_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
};

int allowed_triangles(int length) { return length <= 5 ? length - 3 : length - 2; }

std::string charge_text(const Charge& c) {
  return c.denominator() == 1 ? std::to_string(c.numerator())
                              : std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

}  // namespace

CycleList cycles_up_to(const Graph& h, int max_len, std::size_t max_count) {
  CycleList out;
  CycleWalker(h, max_len, max_count, out).run();
  return out;
}

CycleList all_cycles(const Graph& h) { return cycles_up_to(h, h.order(), 1'000'000); }

bool DependenceRelation::related(int a, int b) const {
  return std::ranges::binary_search(dependent.at(a), b);
}

DependenceRelation dependence_relation(const Graph& h, const CycleList& cycles) {
  if (cycles.truncated) throw InputError("dependence_relation: cycle list is truncated");
  const int nc = static_cast<int>(cycles.cycles.size());
  std::vector<std::vector<int>> on_edge(cycles.edge_index.size());
  for (int c = 0; c < nc; ++c)
    for (auto e = cycles.cycles[c].edge_set.find_first(); e != boost::dynamic_bitset<>::npos;
         e = cycles.cycles[c].edge_set.find_next(e))
      on_edge[e].push_back(c);
  (void)h;

  auto sharing = [&](int c, std::vector<char>& mark, std::vector<int>& found) {
    const auto& es = cycles.cycles[c].edge_set;
    for (auto e = es.find_first(); e != boost::dynamic_bitset<>::npos; e = es.find_next(e))
      for (int d : on_edge[e])
        if (!mark[d]) {
          mark[d] = 1;
          found.push_back(d);
        }
  };

  DependenceRelation rel;
  rel.dependent.resize(nc);
  std::vector<char> reached(nc), expanded(nc);
  for (int c = 0; c < nc; ++c) {
    std::ranges::fill(reached, 0);
    std::ranges::fill(expanded, 0);
    std::vector<int> found;
    std::vector<int> queue{c};
    expanded[c] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t before = found.size();
      sharing(queue[q], reached, found);
      for (std::size_t i = before; i < found.size(); ++i) {
        const int d = found[i];
        if (cycles.cycles[d].length() == 4 && !expanded[d]) {
          expanded[d] = 1;
          queue.push_back(d);
        }
      }
    }
    for (int d : found)
      if (d != c) rel.dependent[c].push_back(d);
    std::ranges::sort(rel.dependent[c]);
  }
  return rel;
}

Lemma43Report lemma43_check(const Graph& h) {
  if (h.order() < 4) throw PreconditionError("lemma43_check: requires at least four vertices");
  PlanarityResult pr = is_planar(h);
  if (!pr.planar) throw PreconditionError("lemma43_check: graph is not planar");
  const CycleList cycles = all_cycles(h);
  if (cycles.truncated) throw PreconditionError("lemma43_check: cycle enumeration truncated");
  const DependenceRelation rel = dependence_relation(h, cycles);

  Lemma43Report r;
  r.vertices = h.order();
  r.faces = euler_face_count(h);
  for (int c = 0; c < static_cast<int>(cycles.cycles.size()); ++c) {
    const int len = cycles.cycles[c].length();
    int tri = 0;
    for (int d : rel.dependent[c])
      if (cycles.cycles[d].length() == 3) ++tri;
    if (tri > allowed_triangles(len)) r.violations.push_back({c, len, tri, allowed_triangles(len)});
  }
  r.premise = r.violations.empty();
  r.conclusion = r.vertices >= r.faces + 2;

  const FaceStructure fs(h, *pr.embedding);
  const int three_faces = fs.count_of_degree(3);
  if (!is_biconnected(h) || three_faces < 2) {
    r.note = "no ledger: requires a 2-connected graph with at least two 3-faces";
    return r;
  }
  // in a 2-connected plane graph every face boundary is a cycle
  const auto& fw = fs.faces();
  const int nf = static_cast<int>(fw.size());
  std::vector<int> face_cycle(nf, -1);
  for (int f = 0; f < nf; ++f) {
    boost::dynamic_bitset<> es(cycles.edge_index.size());
    for (const Edge& e : fw[f].edges())
      es.set(std::ranges::lower_bound(cycles.edge_index, e) - cycles.edge_index.begin());
    for (int c = 0; c < static_cast<int>(cycles.cycles.size()); ++c)
      if (cycles.cycles[c].edge_set == es) {
        face_cycle[f] = c;
        break;
      }
    if (face_cycle[f] < 0) throw TheoremViolation("face boundary of a 2-connected plane graph is not a cycle");
  }

  ChargeLedger ledger;
  for (int f = 0; f < nf; ++f) {
    ledger.face_degree.push_back(fw[f].degree());
    ledger.initial.emplace_back(fw[f].degree() - 4);
  }
  ledger.final_charge = ledger.initial;
  for (int to = 0; to < nf; ++to) {
    if (fw[to].degree() != 3) continue;
    for (int from = 0; from < nf; ++from) {
      if (fw[from].degree() < 5 || !rel.related(face_cycle[to], face_cycle[from])) continue;
      const Charge half(1, 2);
      ledger.transfers.push_back({from, to, half});
      ledger.final_charge[from] -= half;
      ledger.final_charge[to] += half;
    }
  }
  for (int f = 0; f < nf; ++f) {
    ledger.total_initial += ledger.initial[f];
    ledger.total_final += ledger.final_charge[f];
    if (ledger.final_charge[f] < 0) ledger.nonnegative = false;
  }
  ledger.conserved = ledger.total_initial == ledger.total_final;
  r.ledger = std::move(ledger);
  return r;
}

Json to_json(const Lemma43Report& r) {
  Json j;
  j["vertices"] = r.vertices;
  j["faces"] = r.faces;
  j["premise"] = r.premise;
  Json vs = Json::array();
  for (const auto& v : r.violations)
    vs.push_back({{"cycle", v.cycle}, {"length", v.length}, {"dependent_triangles", v.dependent_triangles},
                  {"allowed", v.allowed}});
  j["premise_violations"] = vs;
  j["conclusion"] = r.conclusion;
  if (r.ledger) {
    const ChargeLedger& l = *r.ledger;
    Json faces = Json::array();
    for (std::size_t f = 0; f < l.face_degree.size(); ++f)
      faces.push_back({{"degree", l.face_degree[f]},
                       {"initial", charge_text(l.initial[f])},
                       {"final", charge_text(l.final_charge[f])}});
    Json transfers = Json::array();
    for (const auto& t : l.transfers)
      transfers.push_back({{"from", t.from}, {"to", t.to}, {"amount", charge_text(t.amount)}});
    j["ledger"] = {{"faces", faces},
                   {"transfers", transfers},
                   {"total_initial", charge_text(l.total_initial)},
                   {"total_final", charge_text(l.total_final)},
                   {"conserved", l.conserved},
                   {"nonnegative", l.nonnegative}};
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace uec
