#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/rational.hpp>

#include "uec/audit_result.hpp"
#include "uec/embedding.hpp"
#include "uec/graph.hpp"

namespace uec {

// ---------------------------------------------------------------------------
// Maximal triangle-subgraphs
// ---------------------------------------------------------------------------

/// One maximal triangle-subgraph H_i: a class of the "shares an edge"
/// relation on the 3-cycles of G, together with its vertices and edges.
struct TriangleSubgraph {
  std::vector<int> triangles;  // indices into TriangleDecomposition::triangles
  VertexMask vertices = 0;
  std::vector<Edge> edges;
  int t() const { return static_cast<int>(triangles.size()); }
};

struct TriangleDecomposition {
  int n = 0;
  std::vector<Triangle> triangles;
  std::vector<TriangleSubgraph> components;  // ordered by least triangle
  Graph gprime;                              // G' on the universe 0..n-1
  VertexMask gprime_vertices = 0;
  std::vector<int> D;  // D[u] = number of components containing u
  int omega_prime = 0;
  bool separating_free = true;

  int k() const { return static_cast<int>(components.size()); }
  /// H_i as a graph on the universe 0..n-1.
  Graph component_graph(int i) const;
  /// Components (ascending) containing u.
  std::vector<int> containing(Vertex u) const;
};

enum class DomainMode { strict, relaxed };

/// Strict mode throws PreconditionError when g has a separating 3-cycle.
TriangleDecomposition triangle_components(const Graph& g, DomainMode mode = DomainMode::strict);

/// Per-component checks that hold in the audit domain: |V(H_i)| = t_i + 2,
/// |E(H_i)| = 2t_i + 1, G[V(H_i)] = H_i, H_i maximal outerplanar, and
/// sum_i |E(H_i)| = |E(G')| = k + 2 * (number of triangles).
AuditResult decomposition_audit(const Graph& g, const TriangleDecomposition& d);

/// Some third component meets H_i at a vertex other than `via` and H_j at a
/// vertex other than `via`. Throws InputError unless `via` lies in both.
bool property_P(const TriangleDecomposition& d, int i, int j, Vertex via);
/// Uses the least common vertex of H_i and H_j; InputError if there is none.
bool property_P(const TriangleDecomposition& d, int i, int j);

// ---------------------------------------------------------------------------
// The auxiliary graph H_G
// ---------------------------------------------------------------------------

enum class AuxProvenance { step1, step2_property_p, step2_tree };

std::string to_string(AuxProvenance p);

struct AuxEdge {
  int a = 0;
  int b = 0;
  AuxProvenance tag = AuxProvenance::step1;
  Vertex via = 0;  // the shared vertex u that produced the edge
};

/// G_u and G_<u> for a vertex with D(u) >= 3.
struct LocalTree {
  Vertex u = 0;
  std::vector<int> order;  // components around u, cyclic, starting at the least index
  std::vector<std::pair<int, int>> property_p_edges;
  std::vector<std::pair<int, int>> tree_edges;
  bool forest = true;  // G_u acyclic
};

struct AuxGraph {
  int k = 0;
  std::vector<AuxEdge> edges;
  std::vector<LocalTree> local;
  bool simple = true;
  bool planar = true;
  bool forests = true;
  Graph graph;  // simple graph on nodes 0..k-1 (parallel copies dropped)
  std::optional<PlanarEmbedding> embedding;

  /// |F(H_G)| = |E| - |V| + 1 + omega.
  int face_count() const;
};

/// Step 1 edges for D(u) = 2; for D(u) >= 3, Property-P edges and then the
/// fewest consecutive (rotation order) pairs that connect G_u.
AuxGraph build_HG(const Graph& g, const PlanarEmbedding& emb, const TriangleDecomposition& d);

struct GprimeFaces {
  int faces_euler = 0;      // |E(G')| - |V(G')| + 1 + omega(G')
  int faces_traversal = 0;  // faces of the inherited embedding restricted to G'
  int sum_t = 0;
  int f_ge4 = 0;            // faces_euler - sum_t
};

/// Face accounting for G'. Throws TheoremViolation when the inherited
/// embedding disagrees with Euler's formula.
GprimeFaces gprime_faces(const TriangleDecomposition& d, const PlanarEmbedding& emb);
int f_ge4_of_Gprime(const TriangleDecomposition& d, const PlanarEmbedding& emb);

// ---------------------------------------------------------------------------
// Instance audits
// ---------------------------------------------------------------------------

/// |F(H_G)| = |F>=4(G')|; also reports simplicity, planarity and forests.
AuditResult thm41_audit(const AuxGraph& aux, const TriangleDecomposition& d, DomainMode mode);
/// Tip vertices of every triangle path inside a component are distinct and non-adjacent.
AuditResult cor34_audit(const Graph& g, const TriangleDecomposition& d);
/// Pairwise intersection and crossing-edge bounds, and uniqueness of the
/// unions named by the third part, over maximal triangle-subgraphs.
AuditResult thm36_audit(const Graph& g, const TriangleDecomposition& d, DomainMode mode);
/// Face sequences of H_G starting at a 3-face and growing through 4-faces.
AuditResult thm42_audit(const Graph& g, const AuxGraph& aux, const TriangleDecomposition& d,
                        DomainMode mode);
/// |F>=4(G')| <= k - 2 when k >= 4. Throws PreconditionError when k < 4.
AuditResult cor45_audit(const AuxGraph& aux, const TriangleDecomposition& d,
                        const PlanarEmbedding& emb);

// ---------------------------------------------------------------------------
// Cycles, dependence, and the discharging lemma
// ---------------------------------------------------------------------------

struct Cycle {
  std::vector<Vertex> vertices;      // starts at its least vertex
  boost::dynamic_bitset<> edge_set;  // over the edge indices of the host graph
  int length() const { return static_cast<int>(vertices.size()); }
};

struct CycleList {
  std::vector<Edge> edge_index;  // host edges, sorted
  std::vector<Cycle> cycles;
  bool truncated = false;
};

/// All simple cycles of length <= max_len, at most max_count of them.
CycleList cycles_up_to(const Graph& h, int max_len, std::size_t max_count);
/// Default caps: length <= |V(h)|, count <= 10^6.
CycleList all_cycles(const Graph& h);

/// dependent[c] lists (ascending) the cycles dependent with cycle c: reachable
/// through edge-sharing steps whose intermediate cycles are 4-cycles.
/// Irreflexive. Throws InputError on a truncated list.
struct DependenceRelation {
  std::vector<std::vector<int>> dependent;
  bool related(int a, int b) const;
};

DependenceRelation dependence_relation(const Graph& h, const CycleList& cycles);

using Charge = boost::rational<long long>;

struct ChargeTransfer {
  int from = 0;  // a >=5-face
  int to = 0;    // a 3-face
  Charge amount;
};

struct ChargeLedger {
  std::vector<int> face_degree;
  std::vector<Charge> initial;
  std::vector<Charge> final_charge;
  std::vector<ChargeTransfer> transfers;
  Charge total_initial;
  Charge total_final;
  bool conserved = true;
  bool nonnegative = true;
};

struct PremiseViolation {
  int cycle = 0;
  int length = 0;
  int dependent_triangles = 0;
  int allowed = 0;
};

struct Lemma43Report {
  int vertices = 0;
  int faces = 0;
  bool premise = false;
  std::vector<PremiseViolation> violations;
  bool conclusion = false;  // |V| >= |F| + 2
  std::optional<ChargeLedger> ledger;
  std::string note;
};

/// Tests the premise on all cycles, checks the conclusion, and for a
/// 2-connected graph with at least two 3-faces builds the discharging ledger.
/// Throws PreconditionError when |V| < 4, h is not planar, or the cycle list
/// would be truncated.
Lemma43Report lemma43_check(const Graph& h);

Json to_json(const Lemma43Report& r);
Json to_json(const TriangleDecomposition& d);
Json to_json(const AuxGraph& aux);

}  // namespace uec
