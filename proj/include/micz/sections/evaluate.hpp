#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "micz/sections/section.hpp"

namespace micz::sections {

/// Rational point of R^D where r = |x| and sqrt(r) are rational.
struct EvalPoint {
  std::vector<Rational> coords;
  Rational r;
  Rational sqrt_r;
};

/// Point N v for an integer vector v of integer norm N, so r = N^2 and sqrt(r) = N.
/// Throws if |v| is not an integer.
EvalPoint eval_point_from_integer_vector(const std::vector<long>& v);

/// `count` points with components of v in [-bound, bound], deterministic in `seed`.
/// Points with u = 0 or w = 0 (x on the D-axis) are rejected.
std::vector<EvalPoint> make_eval_points(int dim, std::size_t count, std::uint64_t seed, long bound = 6);

/// Exact value grouped by exponential rate q (the factor e^{q r} is omitted).
/// Throws OracleInapplicableError on half-integer u or w powers and
/// DivisionByZero when a negative power of a vanishing factor appears.
std::map<Rational, std::vector<GaussianRational>> evaluate(const SectionExpr& e, const EvalPoint& p);

struct EqualityResult {
  bool equal = false;
  /// Canonical forms differ but every evaluation agreed.
  bool eval_fallback = false;
};

/// Canonical comparison first; on mismatch the evaluation oracle is consulted
/// at `points` (at least 12) random points.
EqualityResult equal(const SectionExpr& a, const SectionExpr& b, std::uint64_t seed = 1, std::size_t points = 12);

}  // namespace micz::sections
