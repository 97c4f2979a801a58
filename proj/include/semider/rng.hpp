#pragma once

#include <cstdint>
#include <random>

#include "semider/value.hpp"

namespace semider {

struct SampleBounds {
  Int max_int = 1000;  // magnitude bound for integer carriers
  int max_poly_degree = 4;
  Int max_poly_coeff = 9;
};

/// Deterministic source for sampled verification. mt19937_64 output is
/// fully specified by the standard, so equal seeds give equal reports.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  std::uint64_t below(std::uint64_t bound) {
    return bound <= 1 ? 0 : gen_() % bound;
  }

  Int int_in(Int lo, Int hi) {
    return lo + static_cast<Int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace semider
