#pragma once

#include "micz/exact/rational.hpp"

namespace micz::exact {

/// Gamma(x + k) / Gamma(x) = x (x+1) ... (x+k-1), a rational for rational x.
/// Throws PoleError when one of the factors vanishes.
Rational gamma_ratio(const Rational& x, long k);

/// B(p, q + dq) / B(p, q) = Gamma(q+dq) Gamma(p+q) / (Gamma(q) Gamma(p+q+dq)).
/// Negative dq is handled through the reciprocal of the forward quotient.
Rational beta_quotient(const Rational& p, const Rational& q, long dq);

/// n! as a rational.
Rational factorial(long n);

/// Binomial coefficient C(n, k) for 0 <= k <= n.
Rational binomial(long n, long k);

}  // namespace micz::exact
