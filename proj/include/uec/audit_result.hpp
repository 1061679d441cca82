#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace uec {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, vacuous, not_applicable };

std::string to_string(Verdict v);

/// Outcome of one instance check (a theorem consequence or an identity).
struct AuditResult {
  std::string check;
  Verdict verdict = Verdict::pass;
  /// False when the check ran outside the domain where it is a theorem.
  bool binding = true;
  std::string detail;
  Json data = Json::object();

  /// A failure only counts against the instance when the check is binding.
  bool failed() const { return verdict == Verdict::fail && binding; }
};

Json to_json(const AuditResult& r);

inline bool all_passed(const std::vector<AuditResult>& rs) {
  for (const auto& r : rs)
    if (r.failed()) return false;
  return true;
}

}  // namespace uec
