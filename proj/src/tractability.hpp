#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spectrum.hpp"
#include "weights.hpp"

namespace korobov::tractability {

enum class VerdictKind { Holds, Fails, OpenGap };

struct Verdict {
  VerdictKind kind;
  bool nec;   // the necessary condition held
  bool suff;  // the sufficient condition held

  static Verdict iff(bool cond) { return {cond ? VerdictKind::Holds : VerdictKind::Fails, cond, cond}; }
  static Verdict gap(bool nec, bool suff) {
    if (suff) return {VerdictKind::Holds, true, true};
    if (!nec) return {VerdictKind::Fails, false, false};
    return {VerdictKind::OpenGap, true, false};
  }
};

struct TractabilityReport {
  std::string family;
  double alpha = 0.0;
  double p = 2.0;  // 2, a value in (2, inf), or +infinity
  spectrum::InfoClass info_class = spectrum::InfoClass::All;
  spectrum::ErrorCriterion criterion = spectrum::ErrorCriterion::Absolute;

  Verdict spt, pt, qpt, uwt, wt;
  std::vector<std::pair<double, Verdict>> sigma_wt;  // ascending sigma

  std::optional<double> tau_star;  // strong polynomial tractability exponent
  std::optional<double> t_star;    // quasi-polynomial tractability exponent

  std::vector<std::string> notes;
};

// Verdicts for every notion at the given norm, information class and criterion.
// sigma values outside (0, 1] are tractable regardless of the weights.
TractabilityReport classify(const weights::WeightFamily& family, double alpha, double p,
                            spectrum::InfoClass info_class, spectrum::ErrorCriterion criterion,
                            std::span<const double> sigmas);

std::optional<double> spt_exponent_value(const weights::WeightFamily& family, double alpha, double p,
                                         spectrum::InfoClass info_class);
std::optional<double> qpt_exponent_value(const weights::WeightFamily& family, double alpha);

const char* to_string(VerdictKind kind);

}  // namespace korobov::tractability
