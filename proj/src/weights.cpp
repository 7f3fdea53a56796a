#include "weights.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "errors.hpp"

namespace korobov::weights {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(pos, expected, std::string(text));
  }

  void expect(char c) {
    if (eof() || text[pos] != c) fail(std::string("'") + c + "'");
    ++pos;
  }

  // Case-insensitive literal match.
  bool try_keyword(std::string_view kw) {
    if (text.size() - pos < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(text[pos + i])) != kw[i]) return false;
    }
    pos += kw.size();
    return true;
  }

  void keyword(std::string_view kw) {
    if (!try_keyword(kw)) fail("\"" + std::string(kw) + "\"");
  }

  double number() {
    double v = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr == begin) fail("a number");
    pos += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  void done() {
    if (!eof()) fail("end of input");
  }
};

}  // namespace

WeightFamily WeightFamily::polynomial(double c, double beta) {
  if (!(c > 0.0) || !(c <= 1.0)) throw DomainError("polynomial weights need c in (0, 1]");
  if (!(beta > 0.0)) throw DomainError("polynomial weights need beta > 0");
  return WeightFamily(Polynomial{c, beta});
}

WeightFamily WeightFamily::geometric(double c, double q) {
  if (!(c > 0.0) || !(c <= 1.0)) throw DomainError("geometric weights need c in (0, 1]");
  if (!(q > 0.0) || !(q < 1.0)) throw DomainError("geometric weights need q in (0, 1)");
  return WeightFamily(Geometric{c, q});
}

WeightFamily WeightFamily::constant(double g) {
  if (!(g > 0.0) || !(g <= 1.0)) throw DomainError("constant weights need g in (0, 1]");
  return WeightFamily(Constant{g});
}

WeightFamily WeightFamily::explicit_list(std::vector<double> values, TailRule tail) {
  if (values.empty()) throw DomainError("explicit weights need at least one value");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !(values[i] <= 1.0)) {
      throw DomainError("explicit weight " + std::to_string(i + 1) + " must lie in (0, 1]");
    }
    if (i > 0 && values[i] > values[i - 1]) {
      throw DomainError("explicit weights must be non-increasing");
    }
  }
  return WeightFamily(Explicit{std::move(values), tail});
}

WeightFamily WeightFamily::parse(std::string_view text) {
  Scanner sc{text};
  if (sc.try_keyword("poly")) {
    sc.expect(':');
    sc.keyword("c");
    sc.expect('=');
    const double c = sc.number();
    sc.expect(',');
    sc.keyword("beta");
    sc.expect('=');
    const double beta = sc.number();
    sc.done();
    return polynomial(c, beta);
  }
  if (sc.try_keyword("geo")) {
    sc.expect(':');
    sc.keyword("c");
    sc.expect('=');
    const double c = sc.number();
    sc.expect(',');
    sc.keyword("q");
    sc.expect('=');
    const double q = sc.number();
    sc.done();
    return geometric(c, q);
  }
  if (sc.try_keyword("const")) {
    sc.expect(':');
    sc.keyword("g");
    sc.expect('=');
    const double g = sc.number();
    sc.done();
    return constant(g);
  }
  if (sc.try_keyword("explicit")) {
    sc.expect(':');
    std::vector<double> values;
    values.push_back(sc.number());
    while (sc.peek() == ',') {
      sc.expect(',');
      values.push_back(sc.number());
    }
    sc.expect(';');
    TailRule tail;
    if (sc.try_keyword("repeat-last")) {
      tail = TailRule::RepeatLast;
    } else if (sc.try_keyword("undefined-beyond-length")) {
      tail = TailRule::UndefinedBeyondLength;
    } else {
      sc.fail("\"repeat-last\" or \"undefined-beyond-length\"");
    }
    sc.done();
    return explicit_list(std::move(values), tail);
  }
  sc.fail("a family kind: poly, geo, const or explicit");
}

std::string WeightFamily::describe() const {
  if (const auto* p = std::get_if<Polynomial>(&v_)) {
    return "poly:c=" + fmt(p->c) + ",beta=" + fmt(p->beta);
  }
  if (const auto* g = std::get_if<Geometric>(&v_)) {
    return "geo:c=" + fmt(g->c) + ",q=" + fmt(g->q);
  }
  if (const auto* c = std::get_if<Constant>(&v_)) {
    return "const:g=" + fmt(c->g);
  }
  const auto& e = std::get<Explicit>(v_);
  std::string out = "explicit:";
  for (std::size_t i = 0; i < e.values.size(); ++i) {
    if (i) out += ',';
    out += fmt(e.values[i]);
  }
  out += e.tail == TailRule::RepeatLast ? ";repeat-last" : ";undefined-beyond-length";
  return out;
}

double WeightFamily::gamma(std::uint64_t j) const {
  if (j == 0) throw IndexError("weight index is 1-based");
  if (const auto* p = std::get_if<Polynomial>(&v_)) {
    return p->c * std::pow(static_cast<double>(j), -p->beta);
  }
  if (const auto* g = std::get_if<Geometric>(&v_)) {
    return g->c * std::pow(g->q, static_cast<double>(j - 1));
  }
  if (const auto* c = std::get_if<Constant>(&v_)) {
    return c->g;
  }
  const auto& e = std::get<Explicit>(v_);
  if (j <= e.values.size()) return e.values[j - 1];
  if (e.tail == TailRule::RepeatLast) return e.values.back();
  throw IndexError("weight index " + std::to_string(j) + " is beyond the defined length " +
                   std::to_string(e.values.size()));
}

GammaInfimum WeightFamily::gamma_inf() const {
  if (std::holds_alternative<Polynomial>(v_) || std::holds_alternative<Geometric>(v_)) {
    return {0.0, false};
  }
  if (const auto* c = std::get_if<Constant>(&v_)) {
    return {c->g, false};
  }
  const auto& e = std::get<Explicit>(v_);
  return {e.values.back(), e.tail == TailRule::UndefinedBeyondLength};
}

bool WeightFamily::has_infinite_tail() const {
  const auto* e = std::get_if<Explicit>(&v_);
  return !(e && e->tail == TailRule::UndefinedBeyondLength);
}

void WeightFamily::require_infinite_tail(const char* op) const {
  if (!has_infinite_tail()) {
    throw UnsupportedFamilyError(std::string(op) +
                                 " is undefined for explicit weights with an undefined tail");
  }
}

ExponentValue WeightFamily::sum_exponent() const {
  require_infinite_tail("sum_exponent");
  if (const auto* p = std::get_if<Polynomial>(&v_)) {
    return ExponentValue::finite(1.0 / p->beta);
  }
  if (std::holds_alternative<Geometric>(v_)) return ExponentValue::finite(0.0);
  return ExponentValue::infinite();  // constant tail
}

ExponentValue WeightFamily::t_exponent() const {
  require_infinite_tail("t_exponent");
  if (const auto* p = std::get_if<Polynomial>(&v_)) {
    return ExponentValue::finite(1.0 / p->beta);
  }
  if (std::holds_alternative<Geometric>(v_)) return ExponentValue::finite(0.0);
  return ExponentValue::infinite();
}

ExponentValue WeightFamily::u_exponent(double sigma) const {
  require_infinite_tail("u_exponent");
  if (!(sigma > 0.0)) throw DomainError("u_exponent needs sigma > 0");
  if (const auto* p = std::get_if<Polynomial>(&v_)) {
    return ExponentValue::finite(std::fmax(0.0, (1.0 - sigma) / p->beta));
  }
  if (std::holds_alternative<Geometric>(v_)) return ExponentValue::finite(0.0);
  // constant tail: partial sums grow like d, so d^-sigma kills them only for sigma > 1
  if (sigma > 1.0) return ExponentValue::finite(0.0);
  return ExponentValue::infinite();
}

bool WeightFamily::weight_sum_finite() const {
  require_infinite_tail("weight_sum_finite");
  if (const auto* p = std::get_if<Polynomial>(&v_)) return p->beta > 1.0;
  return std::holds_alternative<Geometric>(v_);
}

bool WeightFamily::log_normalized_sum_bounded() const {
  require_infinite_tail("log_normalized_sum_bounded");
  if (const auto* p = std::get_if<Polynomial>(&v_)) return p->beta >= 1.0;
  return std::holds_alternative<Geometric>(v_);
}

bool WeightFamily::power_normalized_sum_vanishes(double sigma) const {
  require_infinite_tail("power_normalized_sum_vanishes");
  if (!(sigma > 0.0)) throw DomainError("power_normalized_sum_vanishes needs sigma > 0");
  if (const auto* p = std::get_if<Polynomial>(&v_)) {
    // partial sums grow like d^(1-beta) for beta < 1, ln d at beta = 1, O(1) beyond
    return p->beta >= 1.0 || sigma > 1.0 - p->beta;
  }
  if (std::holds_alternative<Geometric>(v_)) return true;
  return sigma > 1.0;  // constant tail: partial sums grow like d
}

bool WeightFamily::power_normalized_sum_vanishes_all() const {
  require_infinite_tail("power_normalized_sum_vanishes_all");
  if (const auto* p = std::get_if<Polynomial>(&v_)) return p->beta >= 1.0;
  return std::holds_alternative<Geometric>(v_);
}

bool WeightFamily::u_exponent_below_one_for_all_sigma() const {
  require_infinite_tail("u_exponent_below_one_for_all_sigma");
  if (const auto* p = std::get_if<Polynomial>(&v_)) return p->beta >= 1.0;
  return std::holds_alternative<Geometric>(v_);
}

}  // namespace korobov::weights
