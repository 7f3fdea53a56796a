#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>
#include <unordered_map>

#include "errors.hpp"
#include "numerics.hpp"

namespace korobov::harness {

namespace {

void enumerate_box(const std::vector<double>& gammas, double alpha, std::uint32_t box,
                   std::size_t j, double product, std::unordered_map<double, std::uint64_t>& lines) {
  if (j == gammas.size()) {
    ++lines[product];
    return;
  }
  enumerate_box(gammas, alpha, box, j + 1, product, lines);
  for (std::uint32_t m = 1; m <= box; ++m) {
    const double value = product * spectrum::coord_factor(gammas[j], m, alpha);
    enumerate_box(gammas, alpha, box, j + 1, value, lines);
    enumerate_box(gammas, alpha, box, j + 1, value, lines);
  }
}

}  // namespace

std::vector<SpectrumLine> brute_force_spectrum(const spectrum::ProblemSpec& spec, std::uint32_t box) {
  const std::vector<double> gammas = spectrum::materialize_gammas(spec);
  const double points = std::pow(2.0 * box + 1.0, static_cast<double>(gammas.size()));
  if (points > 1e8) {
    throw CapExceededError("brute-force box holds more than 1e8 points");
  }
  std::unordered_map<double, std::uint64_t> lines;
  enumerate_box(gammas, spec.alpha, box, 0, 1.0, lines);
  std::vector<SpectrumLine> out;
  out.reserve(lines.size());
  for (const auto& [value, count] : lines) out.push_back({value, count});
  std::sort(out.begin(), out.end(),
            [](const SpectrumLine& a, const SpectrumLine& b) { return a.value > b.value; });
  return out;
}

ComplexityCurve run_curve(const spectrum::ProblemSpec& base, std::span<const double> eps_grid,
                          std::span<const std::uint32_t> dims, std::uint64_t cap, unsigned threads) {
  if (eps_grid.empty() || dims.empty()) {
    throw DegenerateInputError("curve needs at least one eps and one dimension");
  }
  for (double eps : eps_grid) {
    if (!(eps > 0.0) || !(eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
  }
  for (std::uint32_t d : dims) {
    if (d == 0) throw DomainError("dimension must be at least 1");
  }

  ComplexityCurve curve{base, cap, {}};
  curve.cells.resize(dims.size() * eps_grid.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    for (std::size_t k = 0; k < eps_grid.size(); ++k) {
      CurveCell& cell = curve.cells[i * eps_grid.size() + k];
      cell.d = dims[i];
      cell.eps = eps_grid[k];
    }
  }

  const auto worker_body = [&](CurveCell& cell) {
    spectrum::ProblemSpec spec = base;
    spec.dimension = cell.d;
    const auto start = std::chrono::steady_clock::now();
    try {
      const complexity::ComplexityResult r = complexity::info_complexity(spec, cell.eps, cap);
      cell.n = r.n;
      cell.capped = r.capped;
    } catch (const DomainError& e) {
      cell.status = CellStatus::Domain;
      cell.message = e.what();
    } catch (const IndexError& e) {
      cell.status = CellStatus::Domain;
      cell.message = e.what();
    } catch (const UnsupportedClassError& e) {
      cell.status = CellStatus::Unsupported;
      cell.message = e.what();
    } catch (const OverflowError& e) {
      cell.status = CellStatus::Overflow;
      cell.message = e.what();
    } catch (const std::exception& e) {
      cell.status = CellStatus::Failed;
      cell.message = e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    cell.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  };

  unsigned pool = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  pool = static_cast<unsigned>(std::min<std::size_t>(pool, curve.cells.size()));
  if (pool <= 1) {
    for (CurveCell& cell : curve.cells) worker_body(cell);
    return curve;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(pool);
  for (unsigned w = 0; w < pool; ++w) {
    workers.emplace_back([&] {
      while (true) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= curve.cells.size()) return;
        worker_body(curve.cells[idx]);
      }
    });
  }
  for (std::thread& t : workers) t.join();
  return curve;
}

ExponentFit fit_spt_exponent(const ComplexityCurve& curve) {
  std::vector<std::uint32_t> dims;
  for (const CurveCell& cell : curve.cells) {
    if (dims.empty() || dims.back() != cell.d) dims.push_back(cell.d);
  }
  ExponentFit fit{-std::numeric_limits<double>::infinity(), {}};
  for (std::uint32_t d : dims) {
    std::vector<std::pair<double, double>> points;
    for (const CurveCell& cell : curve.cells) {
      if (cell.d != d || cell.status != CellStatus::Ok || cell.capped || cell.n == 0) continue;
      points.emplace_back(1.0 / cell.eps, static_cast<double>(cell.n));
    }
    if (points.size() < 3) {
      throw InsufficientDataError("need at least 3 uncapped cells per dimension for an exponent fit");
    }
    const double slope = numerics::fit_loglog_slope(points).slope;
    fit.per_dimension.emplace_back(d, slope);
    fit.tau_hat = std::fmax(fit.tau_hat, slope);
  }
  if (fit.per_dimension.empty()) throw InsufficientDataError("curve has no cells to fit");
  return fit;
}

BoundsReport verify_bounds(const spectrum::ProblemSpec& base, std::span<const double> eps_grid,
                           std::span<const std::uint32_t> dims, std::uint64_t cap,
                           double total_sum_scale) {
  if (!(total_sum_scale > 0.0)) throw DomainError("total_sum_scale must be positive");
  BoundsReport report;
  for (std::uint32_t d : dims) {
    for (double eps : eps_grid) {
      BoundsCell cell;
      cell.d = d;
      cell.eps = eps;

      spectrum::ProblemSpec spec = base;
      spec.dimension = d;
      spec.p = spectrum::PNorm::LInfinity;
      spec.info_class = spectrum::InfoClass::All;

      spec.criterion = spectrum::ErrorCriterion::Normalized;
      const complexity::ComplexityResult norm = complexity::info_complexity(spec, eps, cap);
      spec.criterion = spectrum::ErrorCriterion::Absolute;
      const complexity::ComplexityResult abs = complexity::info_complexity(spec, eps, cap);

      cell.lower = complexity::qpt_lower_bound(spec, eps) * total_sum_scale;
      cell.n_norm = norm.n;
      cell.n_abs = abs.n;

      if (norm.capped || abs.capped) {
        cell.skipped = true;
        ++report.skipped;
        report.cells.push_back(cell);
        continue;
      }

      const complexity::SplineChoice spline = complexity::optimize_spline_lambda(spec, eps);
      cell.spline_lambda = spline.lambda;
      cell.log_spline_m = spline.n.log_m;
      cell.spline_overflowed = spline.n.overflowed;
      cell.spline_n = spline.n.overflowed ? 0 : spline.n.n;

      const bool lower_ok = cell.lower <= static_cast<double>(cell.n_norm) * (1.0 + 1e-9);
      const bool mono_ok = cell.n_norm <= cell.n_abs;
      const bool spline_ok = spline.n.overflowed
                                 ? std::log(static_cast<double>(cell.n_abs)) <= spline.n.log_m + 1e-9
                                 : cell.n_abs <= spline.n.n;
      cell.pass = lower_ok && mono_ok && spline_ok;
      if (!cell.pass) report.all_pass = false;
      report.cells.push_back(cell);
    }
  }
  return report;
}

}  // namespace korobov::harness
