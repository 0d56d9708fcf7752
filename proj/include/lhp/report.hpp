#pragma once

// Outcome record shared by every verifier.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lhp/exact.hpp"
#include "lhp/series.hpp"

namespace lhp {

enum class Status { pass, fail, skip };

inline const char* to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "?";
}

/// The first disagreeing monomial, exponents keyed by variable name.
struct Witness {
  std::vector<std::pair<std::string, int>> exponents;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string id;
  Status status = Status::pass;
  std::string reason;
  std::vector<std::pair<std::string, int>> caps;
  std::size_t monomials_compared = 0;
  std::optional<Witness> mismatch;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  bool passed() const { return status == Status::pass; }
  bool failed() const { return status == Status::fail; }

  void fail(std::string why) {
    status = Status::fail;
    if (reason.empty()) reason = std::move(why);
  }

  static VerificationReport skipped(std::string id, std::string why) {
    VerificationReport report;
    report.id = std::move(id);
    report.status = Status::skip;
    report.reason = std::move(why);
    return report;
  }

  /// Records a series comparison: pass unless a coefficient differs.
  void record(const SeriesComparison& comparison, const VariableSet& vars) {
    monomials_compared += comparison.monomials_compared;
    if (!comparison.mismatch) return;
    Witness w;
    for (std::size_t i = 0; i < vars.size(); ++i)
      w.exponents.emplace_back(vars.name(i), comparison.mismatch->exponents[i]);
    w.lhs = lhp::to_string(comparison.mismatch->lhs);
    w.rhs = lhp::to_string(comparison.mismatch->rhs);
    if (!mismatch) mismatch = std::move(w);
    fail("coefficients differ");
  }
};

inline nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json out;
  out["id"] = report.id;
  out["status"] = to_string(report.status);
  if (!report.reason.empty()) out["reason"] = report.reason;
  nlohmann::ordered_json caps = nlohmann::ordered_json::object();
  for (const auto& [name, cap] : report.caps) caps[name] = cap;
  out["caps"] = caps;
  out["monomials_compared"] = report.monomials_compared;
  if (report.mismatch) {
    nlohmann::ordered_json exps = nlohmann::ordered_json::object();
    for (const auto& [name, e] : report.mismatch->exponents) exps[name] = e;
    out["mismatch"] = {{"exponents", exps}, {"lhs", report.mismatch->lhs}, {"rhs", report.mismatch->rhs}};
  }
  if (!report.details.empty()) out["details"] = report.details;
  return out;
}

}  // namespace lhp
