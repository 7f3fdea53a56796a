#include "spectrum.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"
#include "numerics.hpp"

namespace korobov::spectrum {

namespace {

void validate_cap(std::uint64_t cap) {
  if (cap == 0 || cap > kMaxCap) {
    throw DomainError("cap must lie in [1, 1e18]");
  }
}

void kahan_add(double& sum, double& comp, double term) {
  const double y = term - comp;
  const double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

}  // namespace

void ProblemSpec::validate() const {
  if (dimension == 0) throw DomainError("dimension must be at least 1");
  if (!(alpha > 1.0)) throw DomainError("alpha must exceed 1");
  materialize_gammas(*this);
}

std::vector<double> materialize_gammas(const ProblemSpec& spec) {
  if (spec.dimension == 0) throw DomainError("dimension must be at least 1");
  if (!(spec.alpha > 1.0)) throw DomainError("alpha must exceed 1");
  std::vector<double> g(spec.dimension);
  for (std::uint32_t j = 0; j < spec.dimension; ++j) {
    g[j] = spec.weights.gamma(j + 1);
  }
  return g;
}

double coord_factor(double gamma, std::uint64_t m, double alpha) {
  if (m == 0) return 1.0;
  return gamma * std::pow(static_cast<double>(m), -alpha);
}

double decay_value(const ProblemSpec& spec, std::span<const std::int64_t> h) {
  const std::vector<double> gammas = materialize_gammas(spec);
  if (h.size() != gammas.size()) {
    throw DomainError("frequency vector length must equal the dimension");
  }
  double value = 1.0;
  for (std::size_t j = 0; j < gammas.size(); ++j) {
    const std::uint64_t m = h[j] < 0 ? static_cast<std::uint64_t>(-(h[j] + 1)) + 1
                                     : static_cast<std::uint64_t>(h[j]);
    if (m != 0) value *= coord_factor(gammas[j], m, spec.alpha);
  }
  return value;
}

double total_sum(const ProblemSpec& spec) {
  const std::vector<double> gammas = materialize_gammas(spec);
  const double z = numerics::zeta(spec.alpha);
  double prod = 1.0;
  for (double g : gammas) prod *= 1.0 + 2.0 * z * g;
  if (std::isinf(prod)) {
    throw OverflowError("total decay sum exceeds double range; use log_total_sum");
  }
  return prod;
}

double log_total_sum(const ProblemSpec& spec) {
  const std::vector<double> gammas = materialize_gammas(spec);
  const double z = numerics::zeta(spec.alpha);
  double acc = 0.0;
  for (double g : gammas) acc += std::log1p(2.0 * z * g);
  return acc;
}

SpectrumCursor::SpectrumCursor(const ProblemSpec& spec, std::uint64_t cap)
    : gammas_(materialize_gammas(spec)), alpha_(spec.alpha), cap_(cap) {
  validate_cap(cap);
  heap_.push(Node{1.0, 0, std::vector<std::uint32_t>(gammas_.size(), 0)});
}

double SpectrumCursor::profile_value(const std::vector<std::uint32_t>& ranks) const {
  double value = 1.0;
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    if (ranks[j] != 0) value *= coord_factor(gammas_[j], ranks[j], alpha_);
  }
  return value;
}

std::optional<EigenBlock> SpectrumCursor::next() {
  if (capped_ || heap_.empty()) return std::nullopt;
  Node top = heap_.top();
  heap_.pop();

  for (std::uint32_t j = top.frontier; j < gammas_.size(); ++j) {
    Node child{0.0, j, top.ranks};
    child.ranks[j] += 1;
    child.value = profile_value(child.ranks);
    heap_.push(std::move(child));
  }

  int nonzero = 0;
  for (std::uint32_t r : top.ranks) nonzero += r != 0;
  if (nonzero >= 60) {
    capped_ = true;
    return std::nullopt;
  }
  const std::uint64_t mult = 1ULL << nonzero;
  if (emitted_count_ + mult > cap_) {
    capped_ = true;
    return std::nullopt;
  }
  emitted_count_ += mult;
  kahan_add(sum_, sum_comp_, top.value * static_cast<double>(mult));
  return EigenBlock{top.value, mult};
}

namespace {

class Survey {
 public:
  Survey(const std::vector<double>& gammas, double alpha, double threshold, std::uint64_t cap)
      : gammas_(gammas), alpha_(alpha), threshold_(threshold), cap_(cap) {}

  SurveyResult run() {
    if (1.0 > threshold_) {
      record(1.0, 0);
      descend(0, 1.0, 0);
    } else {
      result_.max_outside = 1.0;
    }
    result_.sum += sum_comp_;
    if (result_.capped) {
      // count and sum are certified lower bounds; boundary witnesses are unknown
      result_.count = cap_;
      result_.min_inside = 0.0;
      result_.max_outside = 0.0;
    }
    return result_;
  }

 private:
  void record(double value, int nonzero) {
    if (nonzero >= 60) {
      result_.capped = true;
      return;
    }
    const std::uint64_t mult = 1ULL << nonzero;
    result_.count += mult;
    if (result_.count >= cap_) {
      result_.capped = true;
      result_.count = cap_;
      return;
    }
    kahan_add(result_.sum, sum_comp_, value * static_cast<double>(mult));
    if (result_.min_inside == 0.0 || value < result_.min_inside) result_.min_inside = value;
  }

  void descend(std::uint32_t from, double product, int nonzero) {
    for (std::uint32_t j = from; j < gammas_.size() && !result_.capped; ++j) {
      const double first = product * coord_factor(gammas_[j], 1, alpha_);
      if (!(first > threshold_)) {
        // every deeper value through any coordinate >= j is at most `first`
        if (first > result_.max_outside) result_.max_outside = first;
        break;
      }
      for (std::uint64_t m = 1; !result_.capped; ++m) {
        const double value = product * coord_factor(gammas_[j], m, alpha_);
        if (!(value > threshold_)) {
          if (value > result_.max_outside) result_.max_outside = value;
          break;
        }
        record(value, nonzero + 1);
        if (!result_.capped) descend(j + 1, value, nonzero + 1);
      }
    }
  }

  const std::vector<double>& gammas_;
  double alpha_;
  double threshold_;
  std::uint64_t cap_;
  SurveyResult result_;
  double sum_comp_ = 0.0;
};

}  // namespace

SurveyResult survey_above(const ProblemSpec& spec, double threshold, std::uint64_t cap) {
  if (!(threshold > 0.0)) throw DomainError("threshold must be positive");
  validate_cap(cap);
  const std::vector<double> gammas = materialize_gammas(spec);
  return Survey(gammas, spec.alpha, threshold, cap).run();
}

CountResult count_above(const ProblemSpec& spec, double threshold, std::uint64_t cap) {
  const SurveyResult r = survey_above(spec, threshold, cap);
  return {r.count, r.capped};
}

SumResult sum_above(const ProblemSpec& spec, double threshold, std::uint64_t cap) {
  const SurveyResult r = survey_above(spec, threshold, cap);
  return {r.sum, r.capped};
}

}  // namespace korobov::spectrum
