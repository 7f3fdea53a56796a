#include "tractability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "errors.hpp"

namespace korobov::tractability {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Conditions {
  bool s_below_one;
  bool s_finite;
  bool t_below_one;
  bool gamma_inf_below_one;
  bool sum_finite;
  bool log_sum_bounded;
  bool vanishes_all;
  bool u_all_below_one;
};

// raw verdicts before hierarchy closure
struct Raw {
  Verdict spt, pt, qpt, uwt;
  std::vector<std::pair<double, Verdict>> sigma;  // ascending, always contains sigma = 1
};

Verdict sigma_verdict_l2(const weights::WeightFamily& family, spectrum::InfoClass cls,
                         const Conditions& c, double sigma) {
  if (sigma > 1.0) return Verdict::iff(true);
  if (cls == spectrum::InfoClass::All) return Verdict::iff(c.gamma_inf_below_one);
  return Verdict::iff(family.power_normalized_sum_vanishes(sigma));
}

Verdict sigma_verdict_linf(const weights::WeightFamily& family, const Conditions&, double sigma) {
  if (sigma > 1.0) return Verdict::iff(true);
  const bool nec = family.power_normalized_sum_vanishes(sigma);
  const auto u = family.u_exponent(sigma);
  const bool suff = !u.is_infinite && u.value < 1.0;
  return Verdict::gap(nec, suff);
}

Verdict sigma_verdict_mid(const weights::WeightFamily& family, spectrum::InfoClass cls,
                          const Conditions& c, double sigma) {
  if (sigma > 1.0) return Verdict::iff(true);
  const bool nec = cls == spectrum::InfoClass::All ? c.gamma_inf_below_one
                                                   : family.power_normalized_sum_vanishes(sigma);
  const auto u = family.u_exponent(sigma);
  const bool suff = !u.is_infinite && u.value < 1.0;
  return Verdict::gap(nec, suff);
}

void propagate(Raw& raw) {
  // node 0..3 = SPT, PT, QPT, UWT; 4.. = sigma nodes ascending
  std::vector<Verdict*> nodes{&raw.spt, &raw.pt, &raw.qpt, &raw.uwt};
  for (auto& [sigma, v] : raw.sigma) nodes.push_back(&v);

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.emplace_back(0, 1);
  edges.emplace_back(1, 2);
  edges.emplace_back(2, 3);
  for (std::size_t i = 0; i < raw.sigma.size(); ++i) {
    if (raw.sigma[i].first <= 1.0) edges.emplace_back(3, 4 + i);
    if (i + 1 < raw.sigma.size()) edges.emplace_back(4 + i, 4 + i + 1);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [u, v] : edges) {
      if (nodes[u]->kind == VerdictKind::Holds && nodes[v]->kind != VerdictKind::Holds) {
        if (nodes[v]->kind == VerdictKind::Fails) {
          throw std::logic_error("tractability hierarchy produced contradictory verdicts");
        }
        *nodes[v] = {VerdictKind::Holds, true, true};
        changed = true;
      }
      if (nodes[v]->kind == VerdictKind::Fails && nodes[u]->kind != VerdictKind::Fails) {
        if (nodes[u]->kind == VerdictKind::Holds) {
          throw std::logic_error("tractability hierarchy produced contradictory verdicts");
        }
        *nodes[u] = {VerdictKind::Fails, false, false};
        changed = true;
      }
    }
  }
}

}  // namespace

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Holds:
      return "Holds";
    case VerdictKind::Fails:
      return "Fails";
    default:
      return "OpenGap";
  }
}

TractabilityReport classify(const weights::WeightFamily& family, double alpha, double p,
                            spectrum::InfoClass info_class, spectrum::ErrorCriterion criterion,
                            std::span<const double> sigmas) {
  if (!(alpha > 1.0)) throw DomainError("alpha must exceed 1");
  if (!(p == 2.0 || p > 2.0)) throw DomainError("p must be 2, infinite, or lie in (2, inf)");
  if (!family.has_infinite_tail()) {
    throw UnsupportedFamilyError(
        "classification needs weights defined for every dimension; "
        "explicit weights with an undefined tail are not classifiable");
  }
  const bool mid_p = p > 2.0 && !std::isinf(p);
  if (mid_p && criterion == spectrum::ErrorCriterion::Normalized) {
    throw UnsupportedCriterionError(
        "for p strictly between 2 and infinity only the absolute criterion is supported");
  }

  std::vector<double> grid(sigmas.begin(), sigmas.end());
  for (double s : grid) {
    if (!(s > 0.0)) throw DomainError("sigma values must be positive");
  }
  grid.push_back(1.0);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const auto s = family.sum_exponent();
  const auto t = family.t_exponent();
  const auto gamma_inf = family.gamma_inf();

  Conditions c{};
  c.s_finite = !s.is_infinite;
  c.s_below_one = !s.is_infinite && s.value < 1.0;
  c.t_below_one = !t.is_infinite && t.value < 1.0;
  c.gamma_inf_below_one = gamma_inf.value < 1.0;
  c.sum_finite = family.weight_sum_finite();
  c.log_sum_bounded = family.log_normalized_sum_bounded();
  c.vanishes_all = family.power_normalized_sum_vanishes_all();
  c.u_all_below_one = family.u_exponent_below_one_for_all_sigma();

  TractabilityReport report;
  report.family = family.describe();
  report.alpha = alpha;
  report.p = p;
  report.info_class = info_class;
  report.criterion = criterion;

  Raw raw;
  if (p == 2.0) {
    if (info_class == spectrum::InfoClass::All) {
      raw.spt = Verdict::iff(c.s_finite);
      raw.pt = Verdict::iff(c.s_finite);
      raw.qpt = Verdict::iff(c.gamma_inf_below_one);
      raw.uwt = Verdict::iff(c.gamma_inf_below_one);
    } else {
      raw.spt = Verdict::iff(c.sum_finite);
      raw.pt = Verdict::iff(c.log_sum_bounded);
      raw.qpt = Verdict::iff(c.log_sum_bounded);
      raw.uwt = Verdict::iff(c.vanishes_all);
    }
    for (double sigma : grid) {
      raw.sigma.emplace_back(sigma, sigma_verdict_l2(family, info_class, c, sigma));
    }
    report.notes.push_back(
        "for the L2 norm the initial error is exactly 1, so the absolute and "
        "normalized criteria agree");
  } else if (std::isinf(p)) {
    raw.spt = Verdict::iff(c.s_below_one);
    raw.pt = Verdict::iff(c.t_below_one);
    raw.qpt = Verdict::gap(c.log_sum_bounded, false);
    raw.uwt = Verdict::gap(c.vanishes_all, c.u_all_below_one);
    for (double sigma : grid) {
      raw.sigma.emplace_back(sigma, sigma_verdict_linf(family, c, sigma));
    }
    report.notes.push_back(
        "for the sup norm no sufficient condition matching the quasi-polynomial "
        "necessary condition is known; gaps are reported as OpenGap");
  } else {
    const bool nec_spt =
        info_class == spectrum::InfoClass::All ? c.s_finite : c.sum_finite;
    const bool nec_pt =
        info_class == spectrum::InfoClass::All ? c.s_finite : c.log_sum_bounded;
    const bool nec_qpt =
        info_class == spectrum::InfoClass::All ? c.gamma_inf_below_one : c.log_sum_bounded;
    const bool nec_uwt =
        info_class == spectrum::InfoClass::All ? c.gamma_inf_below_one : c.vanishes_all;
    raw.spt = Verdict::gap(nec_spt, c.s_below_one);
    raw.pt = Verdict::gap(nec_pt, c.t_below_one);
    raw.qpt = Verdict::gap(nec_qpt, false);
    raw.uwt = Verdict::gap(nec_uwt, c.u_all_below_one);
    for (double sigma : grid) {
      raw.sigma.emplace_back(sigma, sigma_verdict_mid(family, info_class, c, sigma));
    }
    report.notes.push_back(
        "for p between 2 and infinity the complexity is sandwiched between the L2 and "
        "sup-norm problems: necessity follows from L2, sufficiency from the sup norm");
  }

  propagate(raw);

  report.spt = raw.spt;
  report.pt = raw.pt;
  report.qpt = raw.qpt;
  report.uwt = raw.uwt;
  for (const auto& [sigma, v] : raw.sigma) {
    if (sigma == 1.0) report.wt = v;
  }
  for (const auto& [sigma, v] : raw.sigma) report.sigma_wt.emplace_back(sigma, v);

  report.tau_star = spt_exponent_value(family, alpha, p, info_class);
  report.t_star = std::isinf(p) || mid_p ? std::nullopt : qpt_exponent_value(family, alpha);
  if (info_class != spectrum::InfoClass::All) report.t_star.reset();

  if (s.is_infinite) {
    report.notes.push_back("sum exponent: infinite");
  } else {
    report.notes.push_back("sum exponent: " + fmt(s.value));
  }
  if (t.is_infinite) {
    report.notes.push_back("t exponent: infinite");
  } else {
    report.notes.push_back("t exponent: " + fmt(t.value));
  }
  report.notes.push_back("weight infimum: " + fmt(gamma_inf.value));
  report.notes.push_back(
      "the (sigma, tau)-weak verdicts do not depend on tau; any tau > 0 gives the same answer");

  return report;
}

std::optional<double> spt_exponent_value(const weights::WeightFamily& family, double alpha, double p,
                                         spectrum::InfoClass info_class) {
  if (!(alpha > 1.0)) throw DomainError("alpha must exceed 1");
  if (p != 2.0) return std::nullopt;
  const auto s = family.sum_exponent();
  const bool holds = info_class == spectrum::InfoClass::All ? !s.is_infinite
                                                            : family.weight_sum_finite();
  if (!holds) return std::nullopt;
  return 2.0 * std::fmax(s.value, 1.0 / alpha);
}

std::optional<double> qpt_exponent_value(const weights::WeightFamily& family, double alpha) {
  if (!(alpha > 1.0)) throw DomainError("alpha must exceed 1");
  const auto gi = family.gamma_inf();
  if (gi.truncated) {
    throw UnsupportedFamilyError("the quasi-polynomial exponent needs weights for every dimension");
  }
  if (!(gi.value < 1.0)) return std::nullopt;
  if (gi.value == 0.0) return 2.0 / alpha;
  return 2.0 * std::fmax(1.0 / alpha, 1.0 / std::log(1.0 / gi.value));
}

}  // namespace korobov::tractability
