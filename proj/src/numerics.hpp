#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace korobov::numerics {

struct ZetaResult {
  double value;
  double error_bound;
};

// Riemann zeta on (1, inf). Euler-Maclaurin with a certified remainder:
// error_bound covers both the truncation remainder and float rounding.
ZetaResult zeta_certified(double s);
double zeta(double s);

// Smallest prime >= m. Deterministic for all 64-bit inputs.
std::uint64_t next_prime(std::uint64_t m);
bool is_prime(std::uint64_t n);

struct LogLogFit {
  double slope;
  double intercept;
};

// Least-squares fit of ln y against ln x.
LogLogFit fit_loglog_slope(std::span<const std::pair<double, double>> points);

}  // namespace korobov::numerics
