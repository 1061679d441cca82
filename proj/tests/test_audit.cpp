#include "doctest.h"
#include "uec/audit.hpp"
#include "uec/canonical.hpp"
#include "uec/error.hpp"
#include "uec/io.hpp"

using namespace uec;

namespace {

const AuditResult& find(const AuditReport& r, const std::string& check) {
  for (const auto& a : r.results)
    if (a.check == check) return a;
  FAIL("missing check " << check);
  return r.results.front();
}

}  // namespace

TEST_CASE("strict audit of the diamond") {
  const auto r = audit_instance(fixture("diamond"));
  CHECK(r.in_ue);
  CHECK(r.separating_free);
  CHECK(r.passed());
  CHECK(r.graph6 == canonical_graph6(fixture("diamond")));
  CHECK(r.digest().ends_with("f0"));
  CHECK(find(r, "thm11_class_unions_connected").verdict == Verdict::pass);
  CHECK(find(r, "triangle_decomposition").verdict == Verdict::pass);
  CHECK(find(r, "thm41_faces_HG").verdict == Verdict::pass);
  CHECK(find(r, "formula1_identities").verdict == Verdict::pass);
  CHECK(find(r, "cor45_f_ge4_bound").verdict == Verdict::not_applicable);
  CHECK(find(r, "thm46_upper_bound").verdict == Verdict::not_applicable);
}

TEST_CASE("strict audit of FAN6 skips the structural checks") {
  const auto r = audit_instance(fixture("fan6"));
  CHECK(r.passed());
  CHECK_FALSE(r.separating_free);
  CHECK(find(r, "thm41_faces_HG").verdict == Verdict::not_applicable);
  CHECK(find(r, "separating_3_cycle_split").verdict == Verdict::pass);
  CHECK(find(r, "thm46_upper_bound").verdict == Verdict::pass);
  CHECK(find(r, "thm46_upper_bound").data["margin"] == 0.0);
}

TEST_CASE("audit preconditions") {
  CHECK_THROWS_AS(audit_instance(fixture("oct")), PreconditionError);
  CHECK_THROWS_AS(audit_instance(fixture("c5")), PreconditionError);
  CHECK_THROWS_AS(audit_instance(fixture("k5"), DomainMode::relaxed), PreconditionError);
  CHECK_THROWS_AS(audit_instance(build_graph(4, {{0, 1}, {2, 3}}), DomainMode::relaxed), PreconditionError);
}

TEST_CASE("relaxed audits never fail bindingly outside U_E") {
  for (const char* name : {"bowtie", "oct", "w4", "c5", "c6", "k4", "twok4", "p3", "c4"}) {
    CAPTURE(name);
    const auto r = audit_instance(fixture(name), DomainMode::relaxed);
    CHECK_FALSE(r.in_ue);
    CHECK(r.passed());
    CHECK(r.mode == DomainMode::relaxed);
  }
}

TEST_CASE("separating split audit") {
  const auto a = separating_split_audit(fixture("fan5"));
  CHECK(a.verdict == Verdict::pass);
  CHECK(a.data["separating_3_cycles"] == 1);
  CHECK(separating_split_audit(fixture("diamond")).verdict == Verdict::vacuous);
}

TEST_CASE("report JSON carries the canonical graph6 and digest") {
  const auto r = audit_instance(fixture("fan5"));
  const Json j = to_json(r);
  CHECK(j["graph6"] == r.graph6);
  CHECK(j["digest"] == r.digest());
  CHECK(j["results"].size() == r.results.size());
  CHECK(j["mode"] == "strict");
}
