#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace korobov::weights {

enum class TailRule { RepeatLast, UndefinedBeyondLength };

struct ExponentValue {
  bool is_infinite;
  double value;  // meaningful only when !is_infinite

  static ExponentValue finite(double v) { return {false, v}; }
  static ExponentValue infinite() { return {true, 0.0}; }
};

struct GammaInfimum {
  double value;
  bool truncated;  // true when only a finite prefix is defined
};

// Coordinate weight sequence gamma_1 >= gamma_2 >= ... with values in (0, 1].
class WeightFamily {
 public:
  static WeightFamily polynomial(double c, double beta);
  static WeightFamily geometric(double c, double q);
  static WeightFamily constant(double g);
  static WeightFamily explicit_list(std::vector<double> values, TailRule tail);

  // Text forms: "poly:c=1,beta=2", "geo:c=1,q=0.5", "const:g=0.5",
  // "explicit:1,0.5,0.25;repeat-last" (case-insensitive).
  static WeightFamily parse(std::string_view text);
  std::string describe() const;

  double gamma(std::uint64_t j) const;  // 1-based
  GammaInfimum gamma_inf() const;
  bool has_infinite_tail() const;

  // Decay exponents; inf {} = infinity convention.
  ExponentValue sum_exponent() const;
  ExponentValue t_exponent() const;
  ExponentValue u_exponent(double sigma) const;

  // Closed-form sequence conditions used by the tractability rules.
  bool weight_sum_finite() const;                           // sum_j gamma_j < inf
  bool log_normalized_sum_bounded() const;                  // limsup_d sum_{j<=d} gamma_j / ln(d+1) < inf
  bool power_normalized_sum_vanishes(double sigma) const;   // lim_d d^-sigma sum_{j<=d} gamma_j = 0
  bool power_normalized_sum_vanishes_all() const;           // the above for every sigma in (0, 1]
  bool u_exponent_below_one_for_all_sigma() const;          // u_exponent(sigma) < 1 for every sigma in (0, 1]

 private:
  struct Explicit {
    std::vector<double> values;
    TailRule tail;
  };
  struct Polynomial {
    double c, beta;
  };
  struct Geometric {
    double c, q;
  };
  struct Constant {
    double g;
  };

  using Variant = std::variant<Explicit, Polynomial, Geometric, Constant>;
  explicit WeightFamily(Variant v) : v_(std::move(v)) {}

  void require_infinite_tail(const char* op) const;

  Variant v_;
};

}  // namespace korobov::weights
