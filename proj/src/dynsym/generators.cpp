#include "micz/dynsym/generators.hpp"

#include <stdexcept>

namespace micz::dynsym {

namespace {

const GaussianRational kI = GaussianRational::i();

GaussianRational half(const Rational& x) { return GaussianRational(x / Rational(2)); }

}  // namespace

int index_count(int D) { return D + 3; }

int eta(int A) { return A <= 0 ? 1 : -1; }

std::string index_name(int A, int D) {
  (void)D;
  return std::to_string(A);
}

std::vector<IndexPair> generator_pairs(int D) {
  std::vector<IndexPair> out;
  for (int A = -1; A <= D + 1; ++A)
    for (int B = A + 1; B <= D + 1; ++B) out.push_back({A, B});
  return out;
}

std::size_t pair_slot(int A, int B, int D) {
  if (A >= B) throw std::invalid_argument("pair_slot: need A < B");
  const int N = index_count(D);
  const int a = A + 1, b = B + 1;
  return static_cast<std::size_t>(a * N - a * (a + 1) / 2 + (b - a - 1));
}

OperatorExpr pi_squared(const Context& ctx) {
  OperatorExpr out;
  for (int b = 1; b <= ctx.D; ++b) out = out + OperatorExpr::pi(b) * OperatorExpr::pi(b);
  return out;
}

OperatorExpr r_dot_pi(const Context& ctx) {
  OperatorExpr out;
  for (int b = 1; b <= ctx.D; ++b) out = out + OperatorExpr::x(b) * OperatorExpr::pi(b);
  return out;
}

OperatorExpr hamiltonian(const Context& ctx) {
  return GaussianRational(Rational(1, 2)) * pi_squared(ctx) + half(ctx.c) * OperatorExpr::r_pow(Rational(-2)) -
         OperatorExpr::r_pow(Rational(-1));
}

namespace {

using Op = OperatorExpr;

Op r2F(int a, int b) { return Op::r_pow(Rational(2)) * Op::field(a, b); }

struct Expanded {
  const Context& ctx;
  int D = ctx.D;

  Op J(int a, int b) const { return Op::x(a) * Op::pi(b) - Op::x(b) * Op::pi(a) + r2F(a, b); }
  Op AM(int a, int sign) const {
    Op out = half(Rational(1)) * (Op::x(a) * pi_squared(ctx)) - Op::pi(a) * r_dot_pi(ctx);
    for (int b = 1; b <= D; ++b)
      if (b != a) out = out + r2F(a, b) * Op::pi(b);
    out = out + GaussianRational(-ctx.c / Rational(2)) * (Op::x(a) * Op::r_pow(Rational(-2)));
    out = out + GaussianRational(Rational(0), Rational(D - 3, 2)) * Op::pi(a);
    return out + GaussianRational(Rational(sign, 2)) * Op::x(a);
  }
  Op T() const { return r_dot_pi(ctx) + GaussianRational(Rational(0), Rational(-(D - 1), 2)) * Op::identity(); }
  Op Gamma(int a) const { return Op::r_pow(Rational(1)) * Op::pi(a); }
  Op GammaPM(int sign) const {
    return half(Rational(1)) * (Op::r_pow(Rational(1)) * pi_squared(ctx) +
                                GaussianRational(sign) * Op::r_pow(Rational(1)) +
                                GaussianRational(ctx.c) * Op::r_pow(Rational(-1)));
  }
};

struct Definitional {
  const Context& ctx;

  Op Gamma(int a) const { return Op::r_pow(Rational(1)) * Op::pi(a); }
  Op X() const {
    return Op::r_pow(Rational(1)) * pi_squared(ctx) + GaussianRational(ctx.c) * Op::r_pow(Rational(-1));
  }
  Op Y() const { return Op::r_pow(Rational(1)); }
  Op J(int a, int b) const { return kI * commutator(Gamma(a), Gamma(b)); }
  Op Z(int a) const { return kI * commutator(Gamma(a), X()); }
  Op W(int a) const { return kI * commutator(Gamma(a), Y()); }
  Op GammaD1() const { return half(Rational(1)) * (X() - Y()); }
  Op GammaM1() const { return half(Rational(1)) * (X() + Y()); }
  Op A(int a) const { return half(Rational(1)) * (Z(a) - W(a)); }
  Op M(int a) const { return half(Rational(1)) * (Z(a) + W(a)); }
  Op T() const { return kI * commutator(GammaD1(), GammaM1()); }
};

}  // namespace

OperatorExpr build_generator(const Context& ctx, int A, int B, Form form) {
  const int D = ctx.D;
  if (A < -1 || B < -1 || A > D + 1 || B > D + 1) throw std::out_of_range("build_generator: index");
  if (A == B) return Op();
  if (A > B) return GaussianRational(-1) * build_generator(ctx, B, A, form);
  const bool ex = form == Form::Expanded;
  const Expanded e{ctx};
  const Definitional d{ctx};
  // A < B from here on.
  if (A >= 1 && B <= D) return ex ? e.J(A, B) : d.J(A, B);
  if (A >= 1 && B == D + 1) return ex ? e.AM(A, -1) : d.A(A);
  if (A == -1 && B >= 1 && B <= D) return GaussianRational(-1) * (ex ? e.AM(B, 1) : d.M(B));
  if (A == 0 && B >= 1 && B <= D) return GaussianRational(-1) * (ex ? e.Gamma(B) : d.Gamma(B));
  if (A == -1 && B == D + 1) return GaussianRational(-1) * (ex ? e.T() : d.T());
  if (A == 0 && B == D + 1) return GaussianRational(-1) * (ex ? e.GammaPM(-1) : d.GammaD1());
  if (A == -1 && B == 0) return ex ? e.GammaPM(1) : d.GammaM1();
  throw std::logic_error("build_generator: unreachable");
}

GeneratorFamily::GeneratorFamily(std::shared_ptr<const Context> ctx, bool hatted)
    : ctx_(std::move(ctx)), hatted_(hatted) {}

std::vector<SectionExpr> GeneratorFamily::apply(const SectionExpr& psi) const {
  if (!hatted_) return apply_plain(psi);
  auto out = apply_plain(sections::multiply_r(psi, Rational(1, 2)));
  for (auto& s : out) s = sections::multiply_r(s, Rational(-1, 2));
  return out;
}

std::vector<SectionExpr> GeneratorFamily::apply_plain(const SectionExpr& psi) const {
  using namespace sections;
  const Context& c = *ctx_;
  const int D = c.D;
  const auto& cp = ctx_;
  std::vector<SectionExpr> g(static_cast<std::size_t>(D + 1));
  SectionExpr rp(cp);
  for (int b = 1; b <= D; ++b) {
    g[static_cast<std::size_t>(b)] = pi(psi, b);
    rp += multiply_x(g[static_cast<std::size_t>(b)], b);
  }
  SectionExpr p2(cp);
  for (int b = 1; b <= D; ++b) p2 += pi(g[static_cast<std::size_t>(b)], b);

  std::vector<SectionExpr> out(generator_pairs(D).size(), SectionExpr(cp));
  auto put = [&](int A, int B, SectionExpr v) { out[pair_slot(A, B, D)] = std::move(v); };

  // Angular momenta.
  for (int a = 1; a <= D; ++a)
    for (int b = a + 1; b <= D; ++b)
      put(a, b, multiply_x(g[static_cast<std::size_t>(b)], a) - multiply_x(g[static_cast<std::size_t>(a)], b) +
                    multiply_r(field_strength(psi, a, b), Rational(2)));

  // A and M share everything except the sign of x_a / 2.
  const SectionExpr c_over_r2 = multiply_r(psi, Rational(-2)) * half(c.c);
  for (int a = 1; a <= D; ++a) {
    Accumulator acc(D);
    acc.add(multiply_x(p2, a), half(Rational(1)));
    acc.add(pi(rp, a), GaussianRational(-1));
    for (int b = 1; b <= D; ++b)
      if (b != a) acc.add(multiply_r(field_strength(g[static_cast<std::size_t>(b)], a, b), Rational(2)));
    acc.add(multiply_x(c_over_r2, a), GaussianRational(-1));
    acc.add(g[static_cast<std::size_t>(a)], GaussianRational(Rational(0), Rational(D - 3, 2)));
    const SectionExpr common = acc.finish(cp);
    const SectionExpr xpsi = multiply_x(psi, a) * half(Rational(1));
    put(a, D + 1, common - xpsi);
    put(-1, a, -(common + xpsi));
    put(0, a, -multiply_r(g[static_cast<std::size_t>(a)], Rational(1)));
  }

  const SectionExpr T = rp + psi * GaussianRational(Rational(0), Rational(-(D - 1), 2));
  put(-1, D + 1, -T);
  const SectionExpr rp2 = multiply_r(p2, Rational(1));
  const SectionExpr rpsi = multiply_r(psi, Rational(1));
  const SectionExpr cr = multiply_r(psi, Rational(-1)) * GaussianRational(c.c);
  put(0, D + 1, -((rp2 - rpsi + cr) * half(Rational(1))));
  put(-1, 0, (rp2 + rpsi + cr) * half(Rational(1)));
  return out;
}

SectionExpr GeneratorFamily::lookup(const std::vector<SectionExpr>& table, int A, int B,
                                    const std::shared_ptr<const Context>& ctx) {
  if (A == B) return SectionExpr(ctx);
  if (A < B) return table.at(pair_slot(A, B, ctx->D));
  return -table.at(pair_slot(B, A, ctx->D));
}

}  // namespace micz::dynsym
