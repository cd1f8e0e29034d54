#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "micz/sections/section.hpp"

namespace micz::dynsym {

enum class Status { ExactPass, EvalPass, Fail };

std::string status_name(Status s);

/// Outcome of one identity suite at one (n, mu). These suites check identities
/// on finite batteries of sections; a pass is evidence, not a proof.
struct VerificationReport {
  std::string check;
  int n = 0;
  exact::Rational mu;
  /// Free-form parameters (battery descriptor, index ranges, first failure).
  std::map<std::string, std::string> params;
  Status status = Status::ExactPass;
  std::size_t residual_terms = 0;
  double elapsed_ms = 0;
  std::uint64_t seed = 0;

  bool passed() const { return status != Status::Fail; }
  /// One JSON object on a single line, keys sorted. elapsed_ms is written as 0
  /// unless `with_timing`, so that reports are byte-stable.
  std::string json(bool with_timing = false) const;
  /// Sort key used to merge reports from concurrent runs.
  std::string sort_key() const;
};

/// Collects residuals of one check. A residual that is not canonically zero is
/// handed to the evaluation oracle; if that oracle confirms zero the check can
/// still end as eval-pass, otherwise the first offender is recorded.
class ResidualTally {
 public:
  void add(const sections::SectionExpr& residual, const std::string& label);
  /// Records a condition that is not a section residual, e.g. a scalar equality.
  void require(bool ok, const std::string& label);
  /// Merges a tally produced for another part of the battery (in order).
  void merge(const ResidualTally& o);

  std::size_t checked() const { return checked_; }
  std::size_t residual_terms() const { return residual_terms_; }
  Status status() const;
  const std::string& first_failure() const { return first_failure_; }
  /// Writes status, residual count and failure detail into a report.
  void fill(VerificationReport& r) const;

 private:
  std::size_t checked_ = 0;
  std::size_t residual_terms_ = 0;
  std::size_t eval_only_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

/// Sorted by sort_key, one JSON line per report.
std::string render_json(std::vector<VerificationReport> reports, bool with_timing = false);
/// Markdown table derived from the same records.
std::string render_markdown(std::vector<VerificationReport> reports, bool with_timing = false);

}  // namespace micz::dynsym
