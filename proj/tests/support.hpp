#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "casimir/error.hpp"

namespace testing {

inline double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

template <class F>
std::optional<casimir::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const casimir::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Log-uniform draw on [lo, hi].
inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

}  // namespace testing
