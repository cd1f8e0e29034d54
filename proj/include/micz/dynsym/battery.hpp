#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "micz/sections/section.hpp"

namespace micz::dynsym {

/// Deterministic set of test sections. Each section has one or two terms
/// c x^m r^s u^{-t} e^{q r} (x) e_k with |m| <= 2, s in {-1,-1/2,0,1/2,1},
/// t in {0,1,2}, q in {0,-1} and e_k a spinor basis vector.
struct Battery {
  std::uint64_t seed = 0;
  std::vector<sections::SectionExpr> sections;

  std::string descriptor() const;
};

Battery make_battery(const std::shared_ptr<const sections::Context>& ctx, std::size_t size, std::uint64_t seed);

/// Default worker count: MICZ_JOBS if set, else the hardware concurrency.
unsigned default_jobs();

/// Runs task(i) for i < count on up to `jobs` threads. Exceptions are rethrown
/// on the calling thread (the first by index).
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task);

}  // namespace micz::dynsym
