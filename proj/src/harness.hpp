#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "complexity.hpp"
#include "spectrum.hpp"

namespace korobov::harness {

struct SpectrumLine {
  double value;
  std::uint64_t count;
};

// Exhaustive enumeration of the decay values over the signed box |h_j| <= box,
// grouped by distinct value, sorted in decreasing value order.
std::vector<SpectrumLine> brute_force_spectrum(const spectrum::ProblemSpec& spec, std::uint32_t box);

enum class CellStatus { Ok = 0, Domain = 1, Unsupported = 2, Overflow = 3, Failed = 4 };

struct CurveCell {
  std::uint32_t d = 0;
  double eps = 0.0;
  std::uint64_t n = 0;
  bool capped = false;
  double runtime_ms = 0.0;
  CellStatus status = CellStatus::Ok;
  std::string message;
};

struct ComplexityCurve {
  spectrum::ProblemSpec base;
  std::uint64_t cap = spectrum::kDefaultCap;
  std::vector<CurveCell> cells;  // dimension-major, then eps, in the given order
};

// Information complexity over a (dimension, eps) grid. Cell order and values are
// deterministic and independent of the thread count; threads = 0 picks one per core.
ComplexityCurve run_curve(const spectrum::ProblemSpec& base, std::span<const double> eps_grid,
                          std::span<const std::uint32_t> dims, std::uint64_t cap = spectrum::kDefaultCap,
                          unsigned threads = 1);

struct ExponentFit {
  double tau_hat;  // max over dimensions of the per-dimension slope
  std::vector<std::pair<std::uint32_t, double>> per_dimension;
};

// Slope of ln n against ln(1/eps) per dimension, from uncapped, error-free cells.
ExponentFit fit_spt_exponent(const ComplexityCurve& curve);

struct BoundsCell {
  std::uint32_t d = 0;
  double eps = 0.0;
  double lower = 0.0;           // (1 - eps^2) * total decay sum
  std::uint64_t n_norm = 0;     // sup-norm complexity, normalized criterion
  std::uint64_t n_abs = 0;      // sup-norm complexity, absolute criterion
  double spline_lambda = 0.0;
  double log_spline_m = 0.0;    // ln of the optimized sufficient sample bound
  std::uint64_t spline_n = 0;   // 0 when the bound exceeds integer range
  bool spline_overflowed = false;
  bool skipped = false;         // capped complexity; the cell proves nothing
  bool pass = false;
};

struct BoundsReport {
  std::vector<BoundsCell> cells;
  bool all_pass = true;  // over non-skipped cells
  std::uint32_t skipped = 0;
};

// Checks lower <= n_norm <= n_abs <= optimized spline count on the sup-norm problem.
// total_sum_scale rescales the lower bound; values != 1 deliberately break it
// so tests can prove the checker is alive.
BoundsReport verify_bounds(const spectrum::ProblemSpec& base, std::span<const double> eps_grid,
                           std::span<const std::uint32_t> dims,
                           std::uint64_t cap = spectrum::kDefaultCap, double total_sum_scale = 1.0);

}  // namespace korobov::harness
