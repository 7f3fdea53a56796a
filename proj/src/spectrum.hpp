#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <vector>

#include "weights.hpp"

namespace korobov::spectrum {

enum class PNorm { L2, LInfinity };
enum class InfoClass { All, Standard };
enum class ErrorCriterion { Absolute, Normalized };

inline constexpr std::uint64_t kDefaultCap = 100'000'000;
inline constexpr std::uint64_t kMaxCap = 1'000'000'000'000'000'000ULL;

struct ProblemSpec {
  std::uint32_t dimension = 1;
  double alpha = 2.0;
  weights::WeightFamily weights;
  PNorm p = PNorm::L2;
  InfoClass info_class = InfoClass::All;
  ErrorCriterion criterion = ErrorCriterion::Absolute;

  void validate() const;
};

// gamma_1 .. gamma_d, validating availability for truncated explicit families.
std::vector<double> materialize_gammas(const ProblemSpec& spec);

// One coordinate's contribution to the decay function; m = |h_j|.
double coord_factor(double gamma, std::uint64_t m, double alpha);

// r_{d,alpha,gamma}(h): 1 at h = 0, coordinatewise gamma_j |h_j|^-alpha otherwise.
double decay_value(const ProblemSpec& spec, std::span<const std::int64_t> h);

// sum over all integer vectors h of the decay function = prod_j (1 + 2 zeta(alpha) gamma_j)
double total_sum(const ProblemSpec& spec);
double log_total_sum(const ProblemSpec& spec);

struct EigenBlock {
  double value;
  std::uint64_t multiplicity;
};

// Streams eigenvalue blocks in non-increasing value order. One block per
// non-negative frequency profile; multiplicity 2^(#nonzero coordinates).
class SpectrumCursor {
 public:
  explicit SpectrumCursor(const ProblemSpec& spec, std::uint64_t cap = kDefaultCap);

  // nullopt once emitting the next block would push the count past the cap.
  std::optional<EigenBlock> next();

  bool capped() const { return capped_; }
  std::uint64_t emitted_count() const { return emitted_count_; }
  double emitted_sum() const { return sum_ + sum_comp_; }

 private:
  struct Node {
    double value;
    std::uint32_t frontier;
    std::vector<std::uint32_t> ranks;
  };
  struct ValueLess {
    bool operator()(const Node& a, const Node& b) const { return a.value < b.value; }
  };

  double profile_value(const std::vector<std::uint32_t>& ranks) const;

  std::vector<double> gammas_;
  double alpha_;
  std::uint64_t cap_;
  std::uint64_t emitted_count_ = 0;
  double sum_ = 0.0, sum_comp_ = 0.0;
  bool capped_ = false;
  std::priority_queue<Node, std::vector<Node>, ValueLess> heap_;
};

struct SurveyResult {
  std::uint64_t count = 0;
  bool capped = false;
  double sum = 0.0;
  double min_inside = 0.0;   // smallest eigenvalue strictly above the threshold (0 if none)
  double max_outside = 0.0;  // largest eigenvalue at or below the threshold
};

// count, sum and boundary witnesses of {h : r(h) > threshold} in one pass.
SurveyResult survey_above(const ProblemSpec& spec, double threshold, std::uint64_t cap = kDefaultCap);

struct CountResult {
  std::uint64_t count;
  bool capped;
};
CountResult count_above(const ProblemSpec& spec, double threshold, std::uint64_t cap = kDefaultCap);

struct SumResult {
  double sum;
  bool capped;
};
SumResult sum_above(const ProblemSpec& spec, double threshold, std::uint64_t cap = kDefaultCap);

}  // namespace korobov::spectrum
