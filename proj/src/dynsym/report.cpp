#include "micz/dynsym/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "micz/errors.hpp"
#include "micz/sections/evaluate.hpp"

namespace micz::dynsym {

std::string status_name(Status s) {
  switch (s) {
    case Status::ExactPass:
      return "exact-pass";
    case Status::EvalPass:
      return "eval-pass";
    case Status::Fail:
      return "fail";
  }
  return "fail";
}

std::string VerificationReport::json(bool with_timing) const {
  nlohmann::json j;
  j["check"] = check;
  j["n"] = n;
  j["mu"] = mu.str();
  j["params"] = params;
  j["status"] = status_name(status);
  j["residual_terms"] = residual_terms;
  j["elapsed_ms"] = with_timing ? static_cast<std::int64_t>(elapsed_ms) : 0;
  j["seed"] = seed;
  return j.dump();
}

std::string VerificationReport::sort_key() const {
  std::ostringstream os;
  os << check << '\x1f' << n << '\x1f' << mu.str();
  for (const auto& [k, v] : params) os << '\x1f' << k << '=' << v;
  return os.str();
}

void ResidualTally::add(const sections::SectionExpr& residual, const std::string& label) {
  ++checked_;
  if (residual.is_zero()) return;
  residual_terms_ += residual.term_count();
  bool zero_by_eval = false;
  try {
    zero_by_eval = sections::equal(residual, sections::SectionExpr(residual.context())).equal;
  } catch (const Error&) {
    zero_by_eval = false;
  }
  if (zero_by_eval) {
    ++eval_only_;
    return;
  }
  if (failures_++ == 0) first_failure_ = label + " residual_terms=" + std::to_string(residual.term_count());
}

void ResidualTally::require(bool ok, const std::string& label) {
  ++checked_;
  if (!ok && failures_++ == 0) first_failure_ = label;
}

void ResidualTally::merge(const ResidualTally& o) {
  checked_ += o.checked_;
  residual_terms_ += o.residual_terms_;
  eval_only_ += o.eval_only_;
  if (failures_ == 0 && o.failures_ != 0) first_failure_ = o.first_failure_;
  failures_ += o.failures_;
}

Status ResidualTally::status() const {
  if (failures_ != 0) return Status::Fail;
  return eval_only_ != 0 ? Status::EvalPass : Status::ExactPass;
}

void ResidualTally::fill(VerificationReport& r) const {
  r.status = status();
  r.residual_terms = residual_terms_;
  r.params["identities_checked"] = std::to_string(checked_);
  if (failures_ != 0) {
    r.params["first_failure"] = first_failure_;
    r.params["failures"] = std::to_string(failures_);
  }
}

namespace {

void sort_reports(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const VerificationReport& a, const VerificationReport& b) { return a.sort_key() < b.sort_key(); });
}

}  // namespace

std::string render_json(std::vector<VerificationReport> reports, bool with_timing) {
  sort_reports(reports);
  std::string out;
  for (const auto& r : reports) out += r.json(with_timing) + "\n";
  return out;
}

std::string render_markdown(std::vector<VerificationReport> reports, bool with_timing) {
  sort_reports(reports);
  std::ostringstream os;
  os << "| check | n | mu | status | residual_terms | elapsed_ms | seed | params |\n";
  os << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : reports) {
    std::string params;
    for (const auto& [k, v] : r.params) params += (params.empty() ? "" : "; ") + k + "=" + v;
    os << "| " << r.check << " | " << r.n << " | " << r.mu << " | " << status_name(r.status) << " | "
       << r.residual_terms << " | " << (with_timing ? static_cast<std::int64_t>(r.elapsed_ms) : 0) << " | " << r.seed
       << " | " << params << " |\n";
  }
  return os.str();
}

}  // namespace micz::dynsym
