#include <random>

#include "doctest.h"
#include "micz/errors.hpp"
#include "micz/exact/gamma.hpp"
#include "micz/exact/gaussian.hpp"
#include "micz/exact/matrix.hpp"

using micz::exact::GaussianRational;
using micz::exact::Matrix;
using micz::exact::Rational;

namespace {

// Independent factorial oracle on plain integers.
long long fact(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational::parse("1.5"));
  CHECK(Rational(7, 2).is_half_integer());
  CHECK_FALSE(Rational(1, 3).is_half_integer());
  CHECK(Rational(-7, 2).floor() == -4);
}

TEST_CASE("field axioms on random rationals and gaussian rationals") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const GaussianRational a(random_rational(rng), random_rational(rng));
    const GaussianRational b(random_rational(rng), random_rational(rng));
    const GaussianRational c(random_rational(rng), random_rational(rng));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a.conj().conj() == a);
    CHECK(a.norm2().sign() >= 0);
    CHECK((a.norm2().is_zero()) == a.is_zero());
    if (!a.is_zero()) CHECK(a * a.reciprocal() == GaussianRational(1));
  }
}

TEST_CASE("rational arithmetic agrees with gmp across the inline range") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> small(-40, 40);
  std::uniform_int_distribution<long> wide(-(1L << 40), 1L << 40);
  auto pick = [&](bool big_values) {
    long n = big_values ? wide(rng) : small(rng);
    long d = big_values ? wide(rng) : small(rng);
    if (d == 0) d = 1;
    return mpq_class(n, d);
  };
  for (int trial = 0; trial < 400; ++trial) {
    mpq_class a = pick(trial % 2), b = pick(trial % 3 == 0);
    a.canonicalize();
    b.canonicalize();
    // Push one operand beyond 64 bits now and then.
    if (trial % 5 == 0) a *= mpq_class(mpz_class("123456789012345678901234567"), 1);
    const Rational ra(a), rb(b);
    CHECK((ra + rb).value() == a + b);
    CHECK((ra - rb).value() == a - b);
    CHECK((ra * rb).value() == a * b);
    if (b != 0) CHECK((ra / rb).value() == a / b);
    CHECK(((ra < rb) == (a < b)));
    CHECK((ra == rb) == (a == b));
    // Round trip back into the inline range keeps equality and hashing consistent.
    const Rational back = (ra * rb) / (rb.is_zero() ? Rational(1) : rb);
    if (!rb.is_zero()) {
      CHECK(back == ra);
      CHECK(back.hash() == ra.hash());
    }
  }
  const Rational huge = Rational(1L << 61) * Rational(1L << 61);
  CHECK(huge.str() == "5316911983139663491615228241121378304");
  CHECK((huge / Rational(1L << 61)) == Rational(1L << 61));
  CHECK(Rational(-7, 2).floor() == -4);
}

TEST_CASE("gaussian rational text round trip") {
  for (const char* s : {"0", "3/2", "i", "-i", "2/3i", "1+i", "-1/2-3/4i"}) {
    CHECK(GaussianRational::parse(s).str() == s);
  }
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
}

TEST_CASE("gamma_ratio") {
  CHECK(micz::exact::gamma_ratio(Rational(5, 7), 0) == Rational(1));
  CHECK(micz::exact::gamma_ratio(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(micz::exact::gamma_ratio(Rational(2), 3) == Rational(fact(4), fact(1)));
  CHECK_THROWS_AS(micz::exact::gamma_ratio(Rational(-2), 4), micz::PoleError);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational x = Rational(std::uniform_int_distribution<long>(1, 30)(rng), 2);
    const long k1 = trial % 5, k2 = (trial / 5) % 4;
    CHECK(micz::exact::gamma_ratio(x, k1 + k2) ==
          micz::exact::gamma_ratio(x, k1) * micz::exact::gamma_ratio(x + Rational(k1), k2));
  }
}

TEST_CASE("beta_quotient") {
  using micz::exact::beta_quotient;
  CHECK(beta_quotient(Rational(3), Rational(4), 0) == Rational(1));
  CHECK(beta_quotient(Rational(2), Rational(3), 1) == Rational(3, 5));
  // B(2,4)/B(2,3) from factorials: B(p,q) = (p-1)!(q-1)!/(p+q-1)!.
  const Rational b24(fact(1) * fact(3), fact(5)), b23(fact(1) * fact(2), fact(4));
  CHECK(beta_quotient(Rational(2), Rational(3), 1) == b24 / b23);
  CHECK(beta_quotient(Rational(2), Rational(1), 1) == Rational(1, 3));
  CHECK(beta_quotient(Rational(2), Rational(4), -1) == b23 / b24);
  for (int p2 = 1; p2 < 12; ++p2)
    for (int q2 = 1; q2 < 12; ++q2) {
      const Rational p(p2, 2), q(q2, 2);
      CHECK(beta_quotient(p, q, 1) == q / (p + q));
    }
}

TEST_CASE("matrix helpers") {
  Matrix m(2, 3);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(1, 2) = 1;
  CHECK(micz::exact::rank(m) == 2);
  const Matrix ns = micz::exact::null_space(m);
  CHECK(ns.cols() == 1);
  CHECK((m * ns).is_zero());
  CHECK(micz::exact::kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
}
