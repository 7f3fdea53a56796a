#include "complexity.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"
#include "numerics.hpp"

namespace korobov::complexity {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_eps(double eps) {
  if (!(eps > 0.0) || !(eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
}

void require_all_class(const spectrum::ProblemSpec& spec, const char* op) {
  if (spec.info_class != spectrum::InfoClass::All) {
    throw UnsupportedClassError(std::string(op) +
                                " is exact only for the class of all linear functionals; "
                                "standard information admits bounds only (see the bounds tools)");
  }
}

double spline_rate(double lambda) { return lambda * (2.0 * lambda - 1.0) / (4.0 * lambda - 1.0); }

void require_lambda(const spectrum::ProblemSpec& spec, double lambda) {
  if (!(lambda > 0.5) || !(lambda < spec.alpha / 2.0)) {
    throw DomainError("lambda must lie in (1/2, alpha/2)");
  }
}

// ln of prod_j (1 + 2^(2 alpha + 1) gamma_j^(1/(2 lambda)) zeta(alpha/(2 lambda)))^(2 lambda)
double log_spline_product(const spectrum::ProblemSpec& spec, double lambda) {
  const std::vector<double> gammas = spectrum::materialize_gammas(spec);
  const double z = numerics::zeta(spec.alpha / (2.0 * lambda));
  const double scale = std::pow(2.0, 2.0 * spec.alpha + 1.0);
  double acc = 0.0;
  for (double g : gammas) acc += std::log1p(scale * std::pow(g, 1.0 / (2.0 * lambda)) * z);
  return 2.0 * lambda * acc;
}

}  // namespace

double initial_error(const spectrum::ProblemSpec& spec) {
  return std::exp(log_initial_error(spec));
}

double log_initial_error(const spectrum::ProblemSpec& spec) {
  if (spec.p == spectrum::PNorm::L2) {
    spectrum::materialize_gammas(spec);
    return 0.0;
  }
  return 0.5 * spectrum::log_total_sum(spec);
}

double minimal_error_all(const spectrum::ProblemSpec& spec, std::uint64_t n, std::uint64_t cap) {
  require_all_class(spec, "minimal_error_all");
  spectrum::SpectrumCursor cursor(spec, cap);
  if (spec.p == spectrum::PNorm::L2) {
    std::uint64_t seen = 0;
    while (auto block = cursor.next()) {
      seen += block->multiplicity;
      if (seen >= n + 1) return std::sqrt(block->value);
    }
    throw CapExceededError("eigenvalue cap reached before index n + 1");
  }
  const double total = spectrum::total_sum(spec);
  std::uint64_t seen = 0;
  double head = 0.0, comp = 0.0;
  while (seen < n) {
    auto block = cursor.next();
    if (!block) throw CapExceededError("eigenvalue cap reached before index n");
    const std::uint64_t take = std::min<std::uint64_t>(block->multiplicity, n - seen);
    const double term = block->value * static_cast<double>(take) - comp;
    const double t = head + term;
    comp = (t - head) - term;
    head = t;
    seen += take;
  }
  return std::sqrt(std::fmax(total - head, 0.0));
}

ComplexityResult info_complexity(const spectrum::ProblemSpec& spec, double eps, std::uint64_t cap) {
  require_eps(eps);
  require_all_class(spec, "info_complexity");

  ComplexityResult out{0, false, kNaN, kNaN, kNaN, kNaN, kNaN};
  if (spec.p == spectrum::PNorm::L2) {
    // absolute and normalized criteria coincide: the initial error is exactly 1
    const spectrum::SurveyResult sr = spectrum::survey_above(spec, eps * eps, cap);
    out.n = sr.count;
    out.capped = sr.capped;
    if (!sr.capped) {
      out.lambda_n = sr.count > 0 ? sr.min_inside : kNaN;
      out.lambda_next = sr.max_outside;
      out.target = eps * eps;
    }
    return out;
  }

  const double total = spectrum::total_sum(spec);
  const double target =
      eps * eps * (spec.criterion == spectrum::ErrorCriterion::Normalized ? total : 1.0);
  out.target = target;
  spectrum::SpectrumCursor cursor(spec, cap);
  std::uint64_t n = 0;
  double head = 0.0, comp = 0.0;
  auto kahan = [&](double term) {
    const double y = term - comp;
    const double t = head + y;
    comp = (t - head) - y;
    head = t;
  };
  while (auto block = cursor.next()) {
    const double v = block->value;
    const double m = static_cast<double>(block->multiplicity);
    const double tail_before = total - head;
    if (total - (head + v * m) <= target) {
      const double c_real = v > 0.0 ? std::ceil((tail_before - target) / v) : 1.0;
      std::uint64_t c = c_real < 1.0 ? 1 : static_cast<std::uint64_t>(c_real);
      if (c > block->multiplicity) c = block->multiplicity;
      out.n = n + c;
      out.tail_n = tail_before - static_cast<double>(c) * v;
      out.tail_prev = tail_before - static_cast<double>(c - 1) * v;
      return out;
    }
    kahan(v * m);
    n += block->multiplicity;
  }
  out.n = n;  // streamed scalars: a certified lower bound on the complexity
  out.capped = true;
  out.tail_n = kNaN;
  return out;
}

double qpt_lower_bound(const spectrum::ProblemSpec& spec, double eps) {
  require_eps(eps);
  return (1.0 - eps * eps) * spectrum::total_sum(spec);
}

double spline_error_bound(const spectrum::ProblemSpec& spec, double lambda, std::uint64_t n) {
  require_lambda(spec, lambda);
  if (n == 0) throw DomainError("spline bound needs n >= 1");
  const double log_bound = 0.5 * std::log(2.0) - spline_rate(lambda) * std::log(static_cast<double>(n)) +
                           log_spline_product(spec, lambda);
  return std::exp(log_bound);
}

double log_spline_m_sufficient(const spectrum::ProblemSpec& spec, double eps, double lambda) {
  require_eps(eps);
  require_lambda(spec, lambda);
  const double q = (4.0 * lambda - 1.0) / (lambda * (2.0 * lambda - 1.0));
  return q * (0.5 * std::log(2.0) - std::log(eps) + log_spline_product(spec, lambda));
}

SplineN spline_n_sufficient(const spectrum::ProblemSpec& spec, double eps, double lambda) {
  const double log_m = log_spline_m_sufficient(spec, eps, lambda);
  // headroom so that the next prime (< 2m by Bertrand) still fits uint64
  if (log_m >= std::log(9.0e18)) {
    return {true, 0, 0, log_m};
  }
  const double m_real = std::ceil(std::exp(log_m));
  std::uint64_t m = m_real < 1.0 ? 1 : static_cast<std::uint64_t>(m_real);
  return {false, m, numerics::next_prime(m), log_m};
}

SplineChoice optimize_spline_lambda(const spectrum::ProblemSpec& spec, double eps) {
  require_eps(eps);
  const double lo = 0.5 + 1e-3;
  const double hi = spec.alpha / 2.0 - 1e-3;
  if (!(lo < hi)) throw DomainError("alpha too close to 1: no admissible lambda after the margin");
  const auto objective = [&](double lambda) { return log_spline_m_sufficient(spec, eps, lambda); };

  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = objective(x1), f2 = objective(x2);
  for (int i = 0; i < 80; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = objective(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = objective(x2);
    }
  }
  double best_lambda = f1 <= f2 ? x1 : x2;
  double best_f = std::fmin(f1, f2);
  // guard against non-unimodal surprises: never worse than a uniform grid
  for (int i = 0; i <= 32; ++i) {
    const double lambda = lo + (hi - lo) * static_cast<double>(i) / 32.0;
    const double f = objective(lambda);
    if (f < best_f) {
      best_f = f;
      best_lambda = lambda;
    }
  }
  return {best_lambda, spline_n_sufficient(spec, eps, best_lambda)};
}

}  // namespace korobov::complexity
