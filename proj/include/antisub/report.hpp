#ifndef ANTISUB_REPORT_HPP
#define ANTISUB_REPORT_HPP

// Claims and verification reports.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "antisub/linalg.hpp"

namespace antisub {

using ClaimValue = std::variant<bool, Scalar>;

inline std::string to_string(const ClaimValue& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return to_string(std::get<Scalar>(v));
}

/// An expected outcome of a named check, e.g. {"anti_invariant[J]", true}.
struct Claim {
  std::string check;
  ClaimValue expected;
  std::string source;  // where the claim comes from, free text
};

enum class Status { confirmed, refuted, unclaimed, error };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::confirmed: return "confirmed";
    case Status::refuted: return "refuted";
    case Status::unclaimed: return "unclaimed";
    case Status::error: return "error";
  }
  return "?";
}

struct CheckRecord {
  std::string name;
  std::optional<ClaimValue> claimed;
  std::optional<ClaimValue> computed;
  Status status = Status::unclaimed;
  std::string detail;
};

struct VerificationReport {
  std::string id;
  std::vector<CheckRecord> checks;
  std::vector<std::string> decisions;
  std::optional<double> timing_ms;

  const CheckRecord* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
  }

  bool clean() const { return count(Status::refuted) == 0 && count(Status::error) == 0; }
};

/// Accumulates check results and matches them against a claim list.
class ReportBuilder {
public:
  ReportBuilder(std::string id, const std::vector<Claim>& claims) : claims_(claims) { report_.id = std::move(id); }

  void record(std::string name, std::optional<ClaimValue> computed, std::string detail = {}) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.computed = std::move(computed);
    rec.detail = std::move(detail);
    if (const auto* c = claim_for(rec.name)) {
      rec.claimed = c->expected;
      if (!rec.computed) rec.status = Status::refuted;
      else rec.status = (*rec.computed == c->expected) ? Status::confirmed : Status::refuted;
      if (!c->source.empty()) rec.detail = rec.detail.empty() ? c->source : rec.detail + "; " + c->source;
    } else {
      rec.status = Status::unclaimed;
    }
    used_.push_back(rec.name);
    report_.checks.push_back(std::move(rec));
  }

  void record_error(std::string name, const std::string& what) {
    CheckRecord rec;
    rec.name = std::move(name);
    if (const auto* c = claim_for(rec.name)) rec.claimed = c->expected;
    rec.status = Status::error;
    rec.detail = what;
    used_.push_back(rec.name);
    report_.checks.push_back(std::move(rec));
  }

  /// Runs `fn` and records its value; exceptions become status error.
  template <class Fn>
  void run(const std::string& name, Fn&& fn) {
    try {
      auto [value, detail] = fn();
      record(name, std::optional<ClaimValue>(std::move(value)), std::move(detail));
    } catch (const std::exception& e) {
      record_error(name, e.what());
    }
  }

  void decision(std::string note) { report_.decisions.push_back(std::move(note)); }

  /// Claims naming a check that never ran are reported as errors.
  VerificationReport finish() && {
    for (const auto& c : claims_) {
      bool seen = false;
      for (const auto& u : used_) seen = seen || u == c.check;
      if (!seen) {
        CheckRecord rec{c.check, c.expected, std::nullopt, Status::error, "no such check for this scenario"};
        report_.checks.push_back(std::move(rec));
      }
    }
    return std::move(report_);
  }

private:
  const Claim* claim_for(std::string_view name) const {
    for (const auto& c : claims_)
      if (c.check == name) return &c;
    return nullptr;
  }

  const std::vector<Claim>& claims_;
  std::vector<std::string> used_;
  VerificationReport report_;
};

}  // namespace antisub

#endif  // ANTISUB_REPORT_HPP
