#include "micz/dynsym/battery.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <random>
#include <thread>

namespace micz::dynsym {

using exact::GaussianRational;
using exact::Rational;
using sections::SectionExpr;

std::string Battery::descriptor() const {
  return "sections=" + std::to_string(sections.size()) +
         ";terms=1-2;deg(x)<=2;s={-1,-1/2,0,1/2,1};t={0,1,2};q={0,-1};seed=" + std::to_string(seed);
}

Battery make_battery(const std::shared_ptr<const sections::Context>& ctx, std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return static_cast<int>(std::uniform_int_distribution<int>(lo, hi)(rng)); };
  const int D = ctx->D;
  const std::size_t spin = ctx->spin_dim();
  Battery b;
  b.seed = seed;
  while (b.sections.size() < size) {
    // The spinor component cycles so that every basis vector appears.
    const std::size_t comp = b.sections.size() % spin;
    const int terms = pick(1, 2);
    SectionExpr e(ctx);
    for (int j = 0; j < terms; ++j) {
      std::vector<int> xexp(static_cast<std::size_t>(D), 0);
      const int degree = pick(0, 2);
      for (int d = 0; d < degree; ++d) ++xexp[static_cast<std::size_t>(pick(0, D - 1))];
      const Rational s(pick(-2, 2), 2);
      const Rational t(-pick(0, 2));
      const Rational q(-pick(0, 1));
      int re = 0, im = 0;
      while (re == 0 && im == 0) {
        re = pick(-3, 3);
        im = pick(-2, 2);
      }
      std::vector<GaussianRational> v(spin);
      v[comp] = GaussianRational(1);
      e += SectionExpr::term(ctx, GaussianRational(Rational(re), Rational(im)), xexp, s, t, Rational(0), q, v);
    }
    if (!e.is_zero()) b.sections.push_back(std::move(e));
  }
  return b;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("MICZ_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  const unsigned n = std::min<std::size_t>(jobs, count);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  pool.clear();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace micz::dynsym
