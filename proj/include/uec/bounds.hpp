#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uec/audit_result.hpp"
#include "uec/embedding.hpp"
#include "uec/graph.hpp"
#include "uec/structure.hpp"

namespace uec {

struct Formula1Term {
  std::string name;
  int value = 0;
};

/// Dual multigraph restricted to faces of degree >= 4.
struct RestrictedDual {
  int nodes = 0;
  int edges = 0;
  int components = 0;
  int faces = 0;  // Euler count edges - nodes + 1 + components
};

struct BoundReport {
  int n = 0;
  int m = 0;
  int q = 0;  // 3n - 6 - m
  int faces = 0;
  int f3 = 0;
  int f_ge4 = 0;
  int k = 0;
  int vprime = 0;
  int eprime = 0;
  int omega_prime = 0;
  int f_ge4_prime = 0;
  RestrictedDual dual0;
  std::vector<Formula1Term> formula1_terms;
  int formula1_sum = 0;
  int formula2_slack = 0;  // f3 - (2n - 4 - 2q)
  bool formula2_equality = false;
  int thm46_margin_x2 = 0;  // 2 * ((5n/2 - 6) - m)
  bool in_domain = false;   // in U_E, no separating 3-cycles, n >= 4
};

/// Requires g planar and connected (InputError otherwise). `in_domain`
/// marks instances on which the identities are expected to hold.
BoundReport bound_report(const Graph& g, const PlanarEmbedding& emb, const TriangleDecomposition& d,
                         bool in_domain);
/// Computes the embedding, decomposition and membership itself.
BoundReport bound_report(const Graph& g);

/// Term identities of the edge count; vacuous outside the domain.
AuditResult formula1_audit(const BoundReport& r);
/// f3 >= 2n - 4 - 2q; holds for every connected planar graph with n >= 3.
AuditResult formula2_audit(const BoundReport& r);
/// m <= floor(5n/2) - 6 for U_E members with n >= 6.
AuditResult thm46_audit(const BoundReport& r, bool in_ue);

inline int upper_line(int n) { return 5 * n / 2 - 6; }
inline int lower_line(int n) { return 2 * n - 3; }

struct SizeRow {
  int n = 0;
  std::optional<int> size;  // nullopt: no U_E graph on n vertices
  std::vector<std::string> witnesses;  // canonical graph6, sorted
  long long ue_count = 0;
  bool complete = true;
};

/// Lower line for every complete row, upper line for n >= 6; the 9n/4 - 6
/// comparison is reported only.
std::vector<AuditResult> size_table_assert(const std::vector<SizeRow>& rows);

Json to_json(const BoundReport& r);
Json to_json(const SizeRow& r);

}  // namespace uec
