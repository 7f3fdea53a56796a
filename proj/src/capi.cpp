#include "korobov.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "complexity.hpp"
#include "errors.hpp"
#include "harness.hpp"
#include "numerics.hpp"
#include "spectrum.hpp"
#include "tractability.hpp"
#include "weights.hpp"

using korobov::spectrum::ErrorCriterion;
using korobov::spectrum::InfoClass;
using korobov::spectrum::PNorm;
using korobov::spectrum::ProblemSpec;

struct kor_weights {
  korobov::weights::WeightFamily impl;
};
struct kor_problem {
  ProblemSpec impl;
};
struct kor_cursor {
  korobov::spectrum::SpectrumCursor impl;
};
struct kor_report {
  korobov::tractability::TractabilityReport impl;
};
struct kor_curve {
  korobov::harness::ComplexityCurve impl;
};
struct kor_bounds {
  korobov::harness::BoundsReport impl;
};
struct kor_oracle {
  std::vector<korobov::harness::SpectrumLine> impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* message) { g_last_error = message; }

template <typename Fn>
kor_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const korobov::ParseError& e) {
    set_error(e.what());
    return KOR_ERROR_PARSE;
  } catch (const korobov::DomainError& e) {
    set_error(e.what());
    return KOR_ERROR_DOMAIN;
  } catch (const korobov::DegenerateInputError& e) {
    set_error(e.what());
    return KOR_ERROR_DEGENERATE_INPUT;
  } catch (const korobov::IndexError& e) {
    set_error(e.what());
    return KOR_ERROR_INDEX;
  } catch (const korobov::UnsupportedFamilyError& e) {
    set_error(e.what());
    return KOR_ERROR_UNSUPPORTED_FAMILY;
  } catch (const korobov::UnsupportedClassError& e) {
    set_error(e.what());
    return KOR_ERROR_UNSUPPORTED_CLASS;
  } catch (const korobov::UnsupportedCriterionError& e) {
    set_error(e.what());
    return KOR_ERROR_UNSUPPORTED_CRITERION;
  } catch (const korobov::OverflowError& e) {
    set_error(e.what());
    return KOR_ERROR_OVERFLOW;
  } catch (const korobov::CapExceededError& e) {
    set_error(e.what());
    return KOR_ERROR_CAP_EXCEEDED;
  } catch (const korobov::InsufficientDataError& e) {
    set_error(e.what());
    return KOR_ERROR_INSUFFICIENT_DATA;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return KOR_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return KOR_ERROR_INTERNAL;
  } catch (...) {
    set_error("unknown failure");
    return KOR_ERROR_INTERNAL;
  }
}

kor_status invalid(const char* message) {
  set_error(message);
  return KOR_ERROR_INVALID_ARGUMENT;
}

bool all_present(std::initializer_list<const void*> ptrs) {
  for (const void* p : ptrs) {
    if (p == nullptr) return false;
  }
  return true;
}

kor_status exponent_out(const korobov::weights::ExponentValue& e, int* is_infinite, double* value) {
  *is_infinite = e.is_infinite ? 1 : 0;
  *value = e.is_infinite ? 0.0 : e.value;
  return KOR_OK;
}

void spline_out(const korobov::complexity::SplineN& s, kor_spline_result* out) {
  out->overflowed = s.overflowed ? 1 : 0;
  out->m = s.m;
  out->n = s.n;
  out->log_m = s.log_m;
}

void verdict_out(const korobov::tractability::Verdict& v, int* kind, int* nec, int* suff) {
  switch (v.kind) {
    case korobov::tractability::VerdictKind::Holds:
      *kind = KOR_VERDICT_HOLDS;
      break;
    case korobov::tractability::VerdictKind::Fails:
      *kind = KOR_VERDICT_FAILS;
      break;
    default:
      *kind = KOR_VERDICT_OPEN_GAP;
  }
  *nec = v.nec ? 1 : 0;
  *suff = v.suff ? 1 : 0;
}

}  // namespace

extern "C" {

const char* kor_version(void) { return "1.0.0"; }

const char* kor_last_error(void) { return g_last_error.c_str(); }

kor_status kor_zeta(double s, double* value, double* error_bound) {
  if (!all_present({value, error_bound})) return invalid("kor_zeta: null output");
  return guarded([&] {
    const auto r = korobov::numerics::zeta_certified(s);
    *value = r.value;
    *error_bound = r.error_bound;
    return KOR_OK;
  });
}

kor_status kor_next_prime(uint64_t m, uint64_t* out) {
  if (!out) return invalid("kor_next_prime: null output");
  return guarded([&] {
    *out = korobov::numerics::next_prime(m);
    return KOR_OK;
  });
}

kor_status kor_fit_loglog(const double* x, const double* y, size_t count, double* slope,
                          double* intercept) {
  if (!all_present({x, y, slope, intercept})) return invalid("kor_fit_loglog: null argument");
  return guarded([&] {
    std::vector<std::pair<double, double>> pts(count);
    for (size_t i = 0; i < count; ++i) pts[i] = {x[i], y[i]};
    const auto fit = korobov::numerics::fit_loglog_slope(pts);
    *slope = fit.slope;
    *intercept = fit.intercept;
    return KOR_OK;
  });
}

kor_status kor_weights_parse(const char* text, kor_weights** out) {
  if (!all_present({text, out})) return invalid("kor_weights_parse: null argument");
  return guarded([&] {
    *out = new kor_weights{korobov::weights::WeightFamily::parse(text)};
    return KOR_OK;
  });
}

kor_status kor_weights_create_polynomial(double c, double beta, kor_weights** out) {
  if (!out) return invalid("kor_weights_create_polynomial: null output");
  return guarded([&] {
    *out = new kor_weights{korobov::weights::WeightFamily::polynomial(c, beta)};
    return KOR_OK;
  });
}

kor_status kor_weights_create_geometric(double c, double q, kor_weights** out) {
  if (!out) return invalid("kor_weights_create_geometric: null output");
  return guarded([&] {
    *out = new kor_weights{korobov::weights::WeightFamily::geometric(c, q)};
    return KOR_OK;
  });
}

kor_status kor_weights_create_constant(double g, kor_weights** out) {
  if (!out) return invalid("kor_weights_create_constant: null output");
  return guarded([&] {
    *out = new kor_weights{korobov::weights::WeightFamily::constant(g)};
    return KOR_OK;
  });
}

kor_status kor_weights_create_explicit(const double* values, size_t count, int repeat_last,
                                       kor_weights** out) {
  if (!all_present({values, out})) return invalid("kor_weights_create_explicit: null argument");
  return guarded([&] {
    *out = new kor_weights{korobov::weights::WeightFamily::explicit_list(
        std::vector<double>(values, values + count),
        repeat_last ? korobov::weights::TailRule::RepeatLast
                    : korobov::weights::TailRule::UndefinedBeyondLength)};
    return KOR_OK;
  });
}

void kor_weights_free(kor_weights* w) { delete w; }

kor_status kor_weights_describe(const kor_weights* w, char* buffer, size_t size) {
  if (!all_present({w, buffer})) return invalid("kor_weights_describe: null argument");
  return guarded([&] {
    const std::string text = w->impl.describe();
    if (text.size() + 1 > size) return invalid("kor_weights_describe: buffer too small");
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    return KOR_OK;
  });
}

kor_status kor_weights_gamma(const kor_weights* w, uint64_t j, double* out) {
  if (!all_present({w, out})) return invalid("kor_weights_gamma: null argument");
  return guarded([&] {
    *out = w->impl.gamma(j);
    return KOR_OK;
  });
}

kor_status kor_weights_infimum(const kor_weights* w, double* value, int* truncated) {
  if (!all_present({w, value, truncated})) return invalid("kor_weights_infimum: null argument");
  return guarded([&] {
    const auto gi = w->impl.gamma_inf();
    *value = gi.value;
    *truncated = gi.truncated ? 1 : 0;
    return KOR_OK;
  });
}

kor_status kor_weights_sum_exponent(const kor_weights* w, int* is_infinite, double* value) {
  if (!all_present({w, is_infinite, value})) return invalid("kor_weights_sum_exponent: null argument");
  return guarded([&] { return exponent_out(w->impl.sum_exponent(), is_infinite, value); });
}

kor_status kor_weights_t_exponent(const kor_weights* w, int* is_infinite, double* value) {
  if (!all_present({w, is_infinite, value})) return invalid("kor_weights_t_exponent: null argument");
  return guarded([&] { return exponent_out(w->impl.t_exponent(), is_infinite, value); });
}

kor_status kor_weights_u_exponent(const kor_weights* w, double sigma, int* is_infinite,
                                  double* value) {
  if (!all_present({w, is_infinite, value})) return invalid("kor_weights_u_exponent: null argument");
  return guarded([&] { return exponent_out(w->impl.u_exponent(sigma), is_infinite, value); });
}

kor_status kor_problem_create(uint32_t dimension, double alpha, const kor_weights* w,
                              kor_norm norm, kor_info_class info_class, kor_criterion criterion,
                              kor_problem** out) {
  if (!all_present({w, out})) return invalid("kor_problem_create: null argument");
  if (norm != KOR_NORM_L2 && norm != KOR_NORM_SUP) return invalid("kor_problem_create: bad norm");
  if (info_class != KOR_CLASS_ALL && info_class != KOR_CLASS_STANDARD) {
    return invalid("kor_problem_create: bad information class");
  }
  if (criterion != KOR_CRITERION_ABSOLUTE && criterion != KOR_CRITERION_NORMALIZED) {
    return invalid("kor_problem_create: bad criterion");
  }
  return guarded([&] {
    ProblemSpec spec{dimension,
                     alpha,
                     w->impl,
                     norm == KOR_NORM_L2 ? PNorm::L2 : PNorm::LInfinity,
                     info_class == KOR_CLASS_ALL ? InfoClass::All : InfoClass::Standard,
                     criterion == KOR_CRITERION_ABSOLUTE ? ErrorCriterion::Absolute
                                                         : ErrorCriterion::Normalized};
    spec.validate();
    *out = new kor_problem{std::move(spec)};
    return KOR_OK;
  });
}

void kor_problem_free(kor_problem* p) { delete p; }

kor_status kor_decay_value(const kor_problem* p, const int64_t* h, size_t length, double* out) {
  if (!all_present({p, h, out})) return invalid("kor_decay_value: null argument");
  return guarded([&] {
    *out = korobov::spectrum::decay_value(p->impl, {h, length});
    return KOR_OK;
  });
}

kor_status kor_total_sum(const kor_problem* p, double* out) {
  if (!all_present({p, out})) return invalid("kor_total_sum: null argument");
  return guarded([&] {
    *out = korobov::spectrum::total_sum(p->impl);
    return KOR_OK;
  });
}

kor_status kor_log_total_sum(const kor_problem* p, double* out) {
  if (!all_present({p, out})) return invalid("kor_log_total_sum: null argument");
  return guarded([&] {
    *out = korobov::spectrum::log_total_sum(p->impl);
    return KOR_OK;
  });
}

kor_status kor_count_above(const kor_problem* p, double threshold, uint64_t cap, uint64_t* count,
                           int* capped) {
  if (!all_present({p, count, capped})) return invalid("kor_count_above: null argument");
  return guarded([&] {
    const auto r = korobov::spectrum::count_above(p->impl, threshold, cap);
    *count = r.count;
    *capped = r.capped ? 1 : 0;
    return KOR_OK;
  });
}

kor_status kor_sum_above(const kor_problem* p, double threshold, uint64_t cap, double* sum,
                         int* capped) {
  if (!all_present({p, sum, capped})) return invalid("kor_sum_above: null argument");
  return guarded([&] {
    const auto r = korobov::spectrum::sum_above(p->impl, threshold, cap);
    *sum = r.sum;
    *capped = r.capped ? 1 : 0;
    return KOR_OK;
  });
}

kor_status kor_cursor_create(const kor_problem* p, uint64_t cap, kor_cursor** out) {
  if (!all_present({p, out})) return invalid("kor_cursor_create: null argument");
  return guarded([&] {
    *out = new kor_cursor{korobov::spectrum::SpectrumCursor(p->impl, cap)};
    return KOR_OK;
  });
}

kor_status kor_cursor_next(kor_cursor* c, double* value, uint64_t* multiplicity) {
  if (!all_present({c, value, multiplicity})) return invalid("kor_cursor_next: null argument");
  return guarded([&] {
    const auto block = c->impl.next();
    if (!block) {
      set_error("eigenvalue cap reached");
      return KOR_ERROR_CAP_EXCEEDED;
    }
    *value = block->value;
    *multiplicity = block->multiplicity;
    return KOR_OK;
  });
}

void kor_cursor_free(kor_cursor* c) { delete c; }

kor_status kor_initial_error(const kor_problem* p, double* out) {
  if (!all_present({p, out})) return invalid("kor_initial_error: null argument");
  return guarded([&] {
    *out = korobov::complexity::initial_error(p->impl);
    return KOR_OK;
  });
}

kor_status kor_minimal_error(const kor_problem* p, uint64_t n, uint64_t cap, double* out) {
  if (!all_present({p, out})) return invalid("kor_minimal_error: null argument");
  return guarded([&] {
    *out = korobov::complexity::minimal_error_all(p->impl, n, cap);
    return KOR_OK;
  });
}

kor_status kor_info_complexity(const kor_problem* p, double eps, uint64_t cap,
                               kor_complexity_result* out) {
  if (!all_present({p, out})) return invalid("kor_info_complexity: null argument");
  return guarded([&] {
    const auto r = korobov::complexity::info_complexity(p->impl, eps, cap);
    out->n = r.n;
    out->capped = r.capped ? 1 : 0;
    out->lambda_n = r.lambda_n;
    out->lambda_next = r.lambda_next;
    out->tail_n = r.tail_n;
    out->tail_prev = r.tail_prev;
    out->target = r.target;
    return KOR_OK;
  });
}

kor_status kor_qpt_lower_bound(const kor_problem* p, double eps, double* out) {
  if (!all_present({p, out})) return invalid("kor_qpt_lower_bound: null argument");
  return guarded([&] {
    *out = korobov::complexity::qpt_lower_bound(p->impl, eps);
    return KOR_OK;
  });
}

kor_status kor_spline_error_bound(const kor_problem* p, double lambda, uint64_t n, double* out) {
  if (!all_present({p, out})) return invalid("kor_spline_error_bound: null argument");
  return guarded([&] {
    *out = korobov::complexity::spline_error_bound(p->impl, lambda, n);
    return KOR_OK;
  });
}

kor_status kor_spline_n_sufficient(const kor_problem* p, double eps, double lambda,
                                   kor_spline_result* out) {
  if (!all_present({p, out})) return invalid("kor_spline_n_sufficient: null argument");
  return guarded([&] {
    spline_out(korobov::complexity::spline_n_sufficient(p->impl, eps, lambda), out);
    return KOR_OK;
  });
}

kor_status kor_optimize_spline_lambda(const kor_problem* p, double eps, double* lambda,
                                      kor_spline_result* out) {
  if (!all_present({p, lambda, out})) return invalid("kor_optimize_spline_lambda: null argument");
  return guarded([&] {
    const auto choice = korobov::complexity::optimize_spline_lambda(p->impl, eps);
    *lambda = choice.lambda;
    spline_out(choice.n, out);
    return KOR_OK;
  });
}

kor_status kor_classify(const kor_weights* w, double alpha, double p, kor_info_class info_class,
                        kor_criterion criterion, const double* sigmas, size_t sigma_count,
                        kor_report** out) {
  if (!all_present({w, out})) return invalid("kor_classify: null argument");
  if (sigma_count > 0 && sigmas == nullptr) return invalid("kor_classify: null sigma array");
  if (info_class != KOR_CLASS_ALL && info_class != KOR_CLASS_STANDARD) {
    return invalid("kor_classify: bad information class");
  }
  if (criterion != KOR_CRITERION_ABSOLUTE && criterion != KOR_CRITERION_NORMALIZED) {
    return invalid("kor_classify: bad criterion");
  }
  return guarded([&] {
    const auto report = korobov::tractability::classify(
        w->impl, alpha, p,
        info_class == KOR_CLASS_ALL ? InfoClass::All : InfoClass::Standard,
        criterion == KOR_CRITERION_ABSOLUTE ? ErrorCriterion::Absolute
                                            : ErrorCriterion::Normalized,
        {sigmas, sigma_count});
    *out = new kor_report{report};
    return KOR_OK;
  });
}

void kor_report_free(kor_report* r) { delete r; }

kor_status kor_report_verdict(const kor_report* r, kor_notion notion, int* kind, int* nec,
                              int* suff) {
  if (!all_present({r, kind, nec, suff})) return invalid("kor_report_verdict: null argument");
  const korobov::tractability::Verdict* v = nullptr;
  switch (notion) {
    case KOR_NOTION_SPT:
      v = &r->impl.spt;
      break;
    case KOR_NOTION_PT:
      v = &r->impl.pt;
      break;
    case KOR_NOTION_QPT:
      v = &r->impl.qpt;
      break;
    case KOR_NOTION_UWT:
      v = &r->impl.uwt;
      break;
    case KOR_NOTION_WT:
      v = &r->impl.wt;
      break;
  }
  if (!v) return invalid("kor_report_verdict: unknown notion");
  verdict_out(*v, kind, nec, suff);
  return KOR_OK;
}

kor_status kor_report_sigma_count(const kor_report* r, size_t* out) {
  if (!all_present({r, out})) return invalid("kor_report_sigma_count: null argument");
  *out = r->impl.sigma_wt.size();
  return KOR_OK;
}

kor_status kor_report_sigma_verdict(const kor_report* r, size_t index, double* sigma, int* kind,
                                    int* nec, int* suff) {
  if (!all_present({r, sigma, kind, nec, suff})) {
    return invalid("kor_report_sigma_verdict: null argument");
  }
  if (index >= r->impl.sigma_wt.size()) {
    set_error("sigma index out of range");
    return KOR_ERROR_INDEX;
  }
  *sigma = r->impl.sigma_wt[index].first;
  verdict_out(r->impl.sigma_wt[index].second, kind, nec, suff);
  return KOR_OK;
}

kor_status kor_report_tau_star(const kor_report* r, int* present, double* value) {
  if (!all_present({r, present, value})) return invalid("kor_report_tau_star: null argument");
  *present = r->impl.tau_star.has_value() ? 1 : 0;
  *value = r->impl.tau_star.value_or(0.0);
  return KOR_OK;
}

kor_status kor_report_t_star(const kor_report* r, int* present, double* value) {
  if (!all_present({r, present, value})) return invalid("kor_report_t_star: null argument");
  *present = r->impl.t_star.has_value() ? 1 : 0;
  *value = r->impl.t_star.value_or(0.0);
  return KOR_OK;
}

kor_status kor_report_note_count(const kor_report* r, size_t* out) {
  if (!all_present({r, out})) return invalid("kor_report_note_count: null argument");
  *out = r->impl.notes.size();
  return KOR_OK;
}

const char* kor_report_note(const kor_report* r, size_t index) {
  if (!r || index >= r->impl.notes.size()) return nullptr;
  return r->impl.notes[index].c_str();
}

kor_status kor_spt_exponent(const kor_weights* w, double alpha, double p,
                            kor_info_class info_class, int* present, double* value) {
  if (!all_present({w, present, value})) return invalid("kor_spt_exponent: null argument");
  return guarded([&] {
    const auto v = korobov::tractability::spt_exponent_value(
        w->impl, alpha, p, info_class == KOR_CLASS_ALL ? InfoClass::All : InfoClass::Standard);
    *present = v.has_value() ? 1 : 0;
    *value = v.value_or(0.0);
    return KOR_OK;
  });
}

kor_status kor_qpt_exponent(const kor_weights* w, double alpha, int* present, double* value) {
  if (!all_present({w, present, value})) return invalid("kor_qpt_exponent: null argument");
  return guarded([&] {
    const auto v = korobov::tractability::qpt_exponent_value(w->impl, alpha);
    *present = v.has_value() ? 1 : 0;
    *value = v.value_or(0.0);
    return KOR_OK;
  });
}

kor_status kor_brute_force_spectrum(const kor_problem* p, uint32_t box, kor_oracle** out) {
  if (!all_present({p, out})) return invalid("kor_brute_force_spectrum: null argument");
  return guarded([&] {
    *out = new kor_oracle{korobov::harness::brute_force_spectrum(p->impl, box)};
    return KOR_OK;
  });
}

kor_status kor_oracle_count(const kor_oracle* o, size_t* out) {
  if (!all_present({o, out})) return invalid("kor_oracle_count: null argument");
  *out = o->impl.size();
  return KOR_OK;
}

kor_status kor_oracle_line(const kor_oracle* o, size_t index, double* value, uint64_t* count) {
  if (!all_present({o, value, count})) return invalid("kor_oracle_line: null argument");
  if (index >= o->impl.size()) {
    set_error("oracle index out of range");
    return KOR_ERROR_INDEX;
  }
  *value = o->impl[index].value;
  *count = o->impl[index].count;
  return KOR_OK;
}

void kor_oracle_free(kor_oracle* o) { delete o; }

kor_status kor_run_curve(const kor_problem* p, const double* eps, size_t eps_count,
                         const uint32_t* dims, size_t dim_count, uint64_t cap, unsigned threads,
                         kor_curve** out) {
  if (!all_present({p, eps, dims, out})) return invalid("kor_run_curve: null argument");
  return guarded([&] {
    *out = new kor_curve{
        korobov::harness::run_curve(p->impl, {eps, eps_count}, {dims, dim_count}, cap, threads)};
    return KOR_OK;
  });
}

kor_status kor_curve_cell_count(const kor_curve* c, size_t* out) {
  if (!all_present({c, out})) return invalid("kor_curve_cell_count: null argument");
  *out = c->impl.cells.size();
  return KOR_OK;
}

kor_status kor_curve_get_cell(const kor_curve* c, size_t index, kor_curve_cell* out) {
  if (!all_present({c, out})) return invalid("kor_curve_get_cell: null argument");
  if (index >= c->impl.cells.size()) {
    set_error("curve cell index out of range");
    return KOR_ERROR_INDEX;
  }
  const auto& cell = c->impl.cells[index];
  out->d = cell.d;
  out->eps = cell.eps;
  out->n = cell.n;
  out->capped = cell.capped ? 1 : 0;
  out->runtime_ms = cell.runtime_ms;
  out->status = static_cast<int>(cell.status);
  return KOR_OK;
}

kor_status kor_curve_fit(const kor_curve* c, double* tau_hat) {
  if (!all_present({c, tau_hat})) return invalid("kor_curve_fit: null argument");
  return guarded([&] {
    *tau_hat = korobov::harness::fit_spt_exponent(c->impl).tau_hat;
    return KOR_OK;
  });
}

kor_status kor_curve_fit_slope(const kor_curve* c, size_t index, uint32_t* d, double* slope,
                               size_t* dimension_count) {
  if (!all_present({c, d, slope, dimension_count})) {
    return invalid("kor_curve_fit_slope: null argument");
  }
  return guarded([&] {
    const auto fit = korobov::harness::fit_spt_exponent(c->impl);
    *dimension_count = fit.per_dimension.size();
    if (index >= fit.per_dimension.size()) {
      set_error("dimension index out of range");
      return KOR_ERROR_INDEX;
    }
    *d = fit.per_dimension[index].first;
    *slope = fit.per_dimension[index].second;
    return KOR_OK;
  });
}

void kor_curve_free(kor_curve* c) { delete c; }

kor_status kor_verify_bounds(const kor_problem* p, const double* eps, size_t eps_count,
                             const uint32_t* dims, size_t dim_count, uint64_t cap,
                             kor_bounds** out) {
  if (!all_present({p, eps, dims, out})) return invalid("kor_verify_bounds: null argument");
  return guarded([&] {
    *out = new kor_bounds{
        korobov::harness::verify_bounds(p->impl, {eps, eps_count}, {dims, dim_count}, cap)};
    return KOR_OK;
  });
}

kor_status kor_bounds_cell_count(const kor_bounds* b, size_t* out) {
  if (!all_present({b, out})) return invalid("kor_bounds_cell_count: null argument");
  *out = b->impl.cells.size();
  return KOR_OK;
}

kor_status kor_bounds_get_cell(const kor_bounds* b, size_t index, kor_bounds_cell* out) {
  if (!all_present({b, out})) return invalid("kor_bounds_get_cell: null argument");
  if (index >= b->impl.cells.size()) {
    set_error("bounds cell index out of range");
    return KOR_ERROR_INDEX;
  }
  const auto& cell = b->impl.cells[index];
  out->d = cell.d;
  out->eps = cell.eps;
  out->lower = cell.lower;
  out->n_norm = cell.n_norm;
  out->n_abs = cell.n_abs;
  out->spline_lambda = cell.spline_lambda;
  out->log_spline_m = cell.log_spline_m;
  out->spline_n = cell.spline_n;
  out->spline_overflowed = cell.spline_overflowed ? 1 : 0;
  out->skipped = cell.skipped ? 1 : 0;
  out->pass = cell.pass ? 1 : 0;
  return KOR_OK;
}

kor_status kor_bounds_summary(const kor_bounds* b, int* all_pass, uint32_t* skipped) {
  if (!all_present({b, all_pass, skipped})) return invalid("kor_bounds_summary: null argument");
  *all_pass = b->impl.all_pass ? 1 : 0;
  *skipped = b->impl.skipped;
  return KOR_OK;
}

void kor_bounds_free(kor_bounds* b) { delete b; }

}  // extern "C"
