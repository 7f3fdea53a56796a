#pragma once

#include <cstdint>

#include "spectrum.hpp"

namespace korobov::complexity {

// Worst-case error of the zero algorithm. 1 for L2, sqrt(total decay sum) for Linf.
double initial_error(const spectrum::ProblemSpec& spec);
double log_initial_error(const spectrum::ProblemSpec& spec);

// n-th minimal worst-case error over the class of all linear functionals.
// sqrt of the (n+1)-th eigenvalue for L2; sqrt of the eigenvalue tail for Linf.
double minimal_error_all(const spectrum::ProblemSpec& spec, std::uint64_t n,
                         std::uint64_t cap = spectrum::kDefaultCap);

struct ComplexityResult {
  std::uint64_t n = 0;
  bool capped = false;
  // L2 witnesses: the n-th eigenvalue (inside) and the (n+1)-th (outside); NaN otherwise.
  double lambda_n;
  double lambda_next;
  // Linf witnesses: tail sums at n and n-1 against the squared error target; NaN otherwise.
  double tail_n;
  double tail_prev;
  double target;
};

// Smallest n with e(n) <= eps * CRI, CRI = 1 (absolute) or the initial error (normalized).
ComplexityResult info_complexity(const spectrum::ProblemSpec& spec, double eps,
                                 std::uint64_t cap = spectrum::kDefaultCap);

// (1 - eps^2) * total decay sum: a lower bound for the normalized Linf complexity.
double qpt_lower_bound(const spectrum::ProblemSpec& spec, double eps);

// Worst-case Linf error bound of the n-point kernel spline algorithm at rate parameter lambda.
double spline_error_bound(const spectrum::ProblemSpec& spec, double lambda, std::uint64_t n);

struct SplineN {
  bool overflowed;  // M does not fit an integer; log_m is the only usable field
  std::uint64_t m;  // ceiling of the sufficient sample bound
  std::uint64_t n;  // smallest prime >= m
  double log_m;     // ln of the real-valued bound before the ceiling
};

// Sample count sufficient for the spline algorithm to reach absolute error eps.
SplineN spline_n_sufficient(const spectrum::ProblemSpec& spec, double eps, double lambda);
double log_spline_m_sufficient(const spectrum::ProblemSpec& spec, double eps, double lambda);

struct SplineChoice {
  double lambda;
  SplineN n;
};

// Minimizes the sufficient sample bound over lambda in (1/2, alpha/2).
SplineChoice optimize_spline_lambda(const spectrum::ProblemSpec& spec, double eps);

}  // namespace korobov::complexity
