#pragma once

#include <optional>
#include <vector>

#include "uec/audit_result.hpp"
#include "uec/coloring.hpp"
#include "uec/embedding.hpp"
#include "uec/graph.hpp"

namespace uec {

/// An edge whose removal keeps the graph uniquely 3-colourable (definitional
/// oracle, with that partition) or whose contraction is not 3-colourable.
struct EdgeWitness {
  Edge edge;
  std::optional<ColorPartition> partition;
};

struct CriticalityResult {
  bool critical = false;
  std::vector<EdgeWitness> witnesses;  // sorted by edge
};

/// Every G - e fails to be uniquely 3-colourable.
/// Throws PreconditionError unless g is uniquely 3-colourable.
CriticalityResult edge_critical_definitional(const Graph& g);

/// Every G / e is 3-colourable.
/// Throws PreconditionError unless g is uniquely 3-colourable.
CriticalityResult edge_critical_contraction(const Graph& g);

struct ClassificationReport {
  int n = 0;
  int m = 0;
  bool planar = false;
  bool chromatic_3 = false;
  bool uniquely_3 = false;
  std::optional<ColorPartition> partition;
  bool edge_critical_definitional = false;
  bool edge_critical_contraction = false;
  bool in_ue = false;
  std::vector<EdgeWitness> definitional_witnesses;
  std::vector<EdgeWitness> contraction_witnesses;
};

/// Runs both oracles when g is uniquely 3-colourable. Throws TheoremViolation
/// if they disagree.
ClassificationReport classify(const Graph& g);

/// m >= 2n - 3, and m = 2n - 3 forces edge-criticality.
AuditResult min_edge_check(const Graph& g);

/// A vertex meeting exactly one 4-face and otherwise only 3-faces has even
/// degree, when the vertex opposite it on the 4-face is not a neighbour.
/// Odd-degree vertices with an adjacent opposite vertex are listed apart.
AuditResult degree_parity_audit(const Graph& g, const PlanarEmbedding& emb);

/// At least two triangles when n >= 4 and at least three when n >= 5.
AuditResult triangle_count_audit(const Graph& g);

}  // namespace uec
