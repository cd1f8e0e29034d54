#include "micz/exact/gamma.hpp"

#include "micz/errors.hpp"

namespace micz::exact {

Rational gamma_ratio(const Rational& x, long k) {
  if (k < 0) throw std::invalid_argument("gamma_ratio: negative shift");
  Rational result(1);
  for (long j = 0; j < k; ++j) {
    Rational factor = x + Rational(j);
    if (factor.is_zero())
      throw PoleError("gamma_ratio: factor x+" + std::to_string(j) + " vanishes for x=" + x.str());
    result *= factor;
  }
  return result;
}

Rational beta_quotient(const Rational& p, const Rational& q, long dq) {
  if (dq < 0) return beta_quotient(p, q + Rational(dq), -dq).reciprocal();
  // Pole checks on the Gamma arguments themselves.
  for (const Rational* arg : {&p, &q}) {
    if (arg->is_integer() && arg->sign() <= 0)
      throw PoleError("beta_quotient: Gamma argument " + arg->str() + " is a pole");
  }
  const Rational pq = p + q;
  if (pq.is_integer() && pq.sign() <= 0)
    throw PoleError("beta_quotient: Gamma argument " + pq.str() + " is a pole");
  return gamma_ratio(q, dq) / gamma_ratio(pq, dq);
}

Rational factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  return gamma_ratio(Rational(1), n);
}

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace micz::exact
