#include "uec/audit_result.hpp"

namespace uec {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::vacuous: return "vacuous";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "unknown";
}

Json to_json(const AuditResult& r) {
  Json j;
  j["check"] = r.check;
  j["verdict"] = to_string(r.verdict);
  j["binding"] = r.binding;
  if (!r.detail.empty()) j["detail"] = r.detail;
  j["data"] = r.data;
  return j;
}

}  // namespace uec
