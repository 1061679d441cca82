#pragma once

#include <string>
#include <vector>

#include "uec/audit_result.hpp"
#include "uec/graph.hpp"
#include "uec/structure.hpp"

namespace uec {

struct AuditReport {
  std::string graph6;  // canonical
  int n = 0;
  int m = 0;
  bool in_ue = false;
  bool separating_free = true;
  DomainMode mode = DomainMode::strict;
  std::vector<AuditResult> results;

  bool passed() const { return all_passed(results); }
  /// Verdict tally such as "p12v3n2f0" (pass, vacuous, not applicable, fail).
  std::string digest() const;
};

/// Each union of two colour classes of the unique colouring is connected.
AuditResult union_connectivity_audit(const Graph& g);
/// Every maximal triangle-subgraph is in U_E and no outside vertex has three
/// neighbours in it.
AuditResult subgraph_closure_audit(const Graph& g, const TriangleDecomposition& d);
/// For a separating 3-cycle T and each component X of G - V(T), both
/// G[V(T) + X] and G - X are in U_E. Vacuous without separating 3-cycles.
AuditResult separating_split_audit(const Graph& g);
/// Lemma check on H_G for k >= 4: premise, |F| <= |V| - 2, ledger sums.
AuditResult aux_face_bound_audit(const AuxGraph& aux);

/// Full battery. Strict mode throws PreconditionError unless g is in U_E;
/// checks that need a graph without separating 3-cycles report
/// not_applicable when one exists. Relaxed mode runs every mechanic on any
/// connected planar graph and marks structural verdicts non-binding.
AuditReport audit_instance(const Graph& g, DomainMode mode = DomainMode::strict);

Json to_json(const AuditReport& r);

}  // namespace uec
