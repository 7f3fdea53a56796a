#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "korobov.h"

namespace {

struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_for(kor_status status) {
  switch (status) {
    case KOR_OK:
      return 0;
    case KOR_ERROR_PARSE:
    case KOR_ERROR_DOMAIN:
    case KOR_ERROR_INDEX:
    case KOR_ERROR_DEGENERATE_INPUT:
    case KOR_ERROR_INSUFFICIENT_DATA:
    case KOR_ERROR_INVALID_ARGUMENT:
      return 2;
    case KOR_ERROR_CAP_EXCEEDED:
      return 3;
    case KOR_ERROR_UNSUPPORTED_FAMILY:
    case KOR_ERROR_UNSUPPORTED_CLASS:
    case KOR_ERROR_UNSUPPORTED_CRITERION:
      return 4;
    default:
      return 1;
  }
}

void check(kor_status status) {
  if (status != KOR_OK) throw CliError{exit_code_for(status), kor_last_error()};
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

// Minimal JSON emitter with stable key order and %.17g doubles.
class JsonOut {
 public:
  void open_object(const char* key = nullptr) {
    prefix(key);
    text_ += '{';
    fresh_.push_back(true);
  }
  void close_object() {
    text_ += '}';
    fresh_.pop_back();
  }
  void open_array(const char* key = nullptr) {
    prefix(key);
    text_ += '[';
    fresh_.push_back(true);
  }
  void close_array() {
    text_ += ']';
    fresh_.pop_back();
  }
  void field(const char* key, const std::string& value) {
    prefix(key);
    text_ += json_escape(value);
  }
  void field(const char* key, const char* value) { field(key, std::string(value)); }
  void field(const char* key, double value) {
    prefix(key);
    if (std::isnan(value)) {
      text_ += "null";
    } else if (std::isinf(value)) {
      text_ += json_escape(value > 0 ? "inf" : "-inf");
    } else {
      text_ += fmt17(value);
    }
  }
  void field(const char* key, std::uint64_t value) {
    prefix(key);
    text_ += std::to_string(value);
  }
  void field(const char* key, std::uint32_t value) { field(key, static_cast<std::uint64_t>(value)); }
  void field(const char* key, int value) {
    prefix(key);
    text_ += std::to_string(value);
  }
  void field(const char* key, bool value) {
    prefix(key);
    text_ += value ? "true" : "false";
  }
  void null_field(const char* key) {
    prefix(key);
    text_ += "null";
  }
  const std::string& str() const { return text_; }

 private:
  void prefix(const char* key) {
    if (!fresh_.empty()) {
      if (!fresh_.back()) text_ += ',';
      fresh_.back() = false;
    }
    if (key != nullptr) {
      text_ += json_escape(key);
      text_ += ':';
    }
  }
  std::string text_;
  std::vector<bool> fresh_;
};

struct WeightsHandle {
  kor_weights* ptr = nullptr;
  ~WeightsHandle() { kor_weights_free(ptr); }
};

struct ProblemHandle {
  kor_problem* ptr = nullptr;
  ~ProblemHandle() { kor_problem_free(ptr); }
};

std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

kor_norm parse_norm(const std::string& p) {
  const std::string low = lowercase(p);
  if (low == "2") return KOR_NORM_L2;
  if (low == "inf" || low == "infinity") return KOR_NORM_SUP;
  throw CliError{2, "p must be 2 or inf for this subcommand"};
}

double parse_p_value(const std::string& p) {
  const std::string low = lowercase(p);
  if (low == "inf" || low == "infinity") return HUGE_VAL;
  try {
    std::size_t used = 0;
    const double v = std::stod(low, &used);
    if (used != low.size()) throw std::invalid_argument(low);
    return v;
  } catch (const std::exception&) {
    throw CliError{2, "p must be 2, a number above 2, or inf"};
  }
}

kor_info_class parse_class(const std::string& text) {
  const std::string low = lowercase(text);
  if (low == "all") return KOR_CLASS_ALL;
  if (low == "std" || low == "standard") return KOR_CLASS_STANDARD;
  throw CliError{2, "class must be all or std"};
}

kor_criterion parse_criterion(const std::string& text) {
  const std::string low = lowercase(text);
  if (low == "abs" || low == "absolute") return KOR_CRITERION_ABSOLUTE;
  if (low == "norm" || low == "normalized") return KOR_CRITERION_NORMALIZED;
  throw CliError{2, "criterion must be abs or norm"};
}

struct SpecArgs {
  std::string weights_text;
  double alpha = 2.0;
  std::string p = "2";
  std::string info_class = "all";
  std::string criterion = "abs";
  std::uint64_t cap = 100000000;
};

void add_spec_options(CLI::App* cmd, SpecArgs& args, bool with_norm = true) {
  cmd->add_option("--weights", args.weights_text, "weight family, e.g. poly:c=1,beta=2")->required();
  cmd->add_option("--alpha", args.alpha, "smoothness exponent, must exceed 1")->required();
  if (with_norm) {
    cmd->add_option("--p", args.p, "norm of the approximation error: 2 or inf");
    cmd->add_option("--class", args.info_class, "information class: all or std");
    cmd->add_option("--criterion", args.criterion, "error criterion: abs or norm");
  }
  cmd->add_option("--cap", args.cap, "eigenvalue enumeration budget");
}

WeightsHandle make_weights(const SpecArgs& args) {
  WeightsHandle w;
  check(kor_weights_parse(args.weights_text.c_str(), &w.ptr));
  return w;
}

ProblemHandle make_problem(const SpecArgs& args, const WeightsHandle& w, std::uint32_t d) {
  ProblemHandle p;
  check(kor_problem_create(d, args.alpha, w.ptr, parse_norm(args.p), parse_class(args.info_class),
                           parse_criterion(args.criterion), &p.ptr));
  return p;
}

void write_spec_json(JsonOut& json, const SpecArgs& args, const WeightsHandle& w,
                     std::uint32_t dimension, bool with_dimension = true) {
  char canonical[512];
  check(kor_weights_describe(w.ptr, canonical, sizeof canonical));
  json.open_object("spec");
  if (with_dimension) json.field("dimension", dimension);
  json.field("alpha", args.alpha);
  json.field("weights", canonical);
  json.field("p", lowercase(args.p) == "infinity" ? "inf" : lowercase(args.p));
  json.field("class", lowercase(args.info_class) == "standard" ? "std" : lowercase(args.info_class));
  json.field("criterion", lowercase(args.criterion) == "absolute"
                              ? "abs"
                              : (lowercase(args.criterion) == "normalized" ? "norm"
                                                                           : lowercase(args.criterion)));
  json.close_object();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw CliError{2, "cannot open output file " + out_path};
  out << text;
}

const char* verdict_name(int kind) {
  switch (kind) {
    case KOR_VERDICT_HOLDS:
      return "Holds";
    case KOR_VERDICT_FAILS:
      return "Fails";
    default:
      return "OpenGap";
  }
}

// ---- complexity ----

struct ComplexityArgs {
  SpecArgs spec;
  std::uint32_t d = 1;
  std::vector<double> eps;
  std::string format = "table";
  std::string out;
};

int run_complexity(const ComplexityArgs& args) {
  WeightsHandle w = make_weights(args.spec);
  ProblemHandle problem = make_problem(args.spec, w, args.d);

  std::vector<kor_complexity_result> results;
  for (double eps : args.eps) {
    kor_complexity_result r;
    check(kor_info_complexity(problem.ptr, eps, args.spec.cap, &r));
    results.push_back(r);
  }

  std::string text;
  if (args.format == "json") {
    JsonOut json;
    json.open_object();
    write_spec_json(json, args.spec, w, args.d);
    json.field("cap", args.spec.cap);
    json.open_array("results");
    for (std::size_t i = 0; i < results.size(); ++i) {
      const kor_complexity_result& r = results[i];
      json.open_object();
      json.field("eps", args.eps[i]);
      json.field("n", r.n);
      json.field("capped", r.capped != 0);
      json.open_object("witness");
      json.field("lambda_n", r.lambda_n);
      json.field("lambda_next", r.lambda_next);
      json.field("tail_n", r.tail_n);
      json.field("tail_prev", r.tail_prev);
      json.field("target", r.target);
      json.close_object();
      json.close_object();
    }
    json.close_array();
    json.close_object();
    text = json.str() + "\n";
  } else if (args.format == "csv") {
    text = "eps,n,capped\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      text += fmt17(args.eps[i]) + "," + std::to_string(results[i].n) + "," +
              (results[i].capped ? "1" : "0") + "\n";
    }
  } else {
    for (std::size_t i = 0; i < results.size(); ++i) {
      text += "eps=" + fmt17(args.eps[i]) + " n=" + std::to_string(results[i].n) +
              " capped=" + (results[i].capped ? "1" : "0") + "\n";
    }
  }
  emit(text, args.out);

  for (const auto& r : results) {
    if (r.capped) return 3;
  }
  return 0;
}

// ---- error ----

struct ErrorArgs {
  SpecArgs spec;
  std::uint32_t d = 1;
  std::vector<std::uint64_t> n;
  std::string format = "table";
  std::string out;
};

int run_error(const ErrorArgs& args) {
  WeightsHandle w = make_weights(args.spec);
  ProblemHandle problem = make_problem(args.spec, w, args.d);

  std::vector<double> errors;
  for (std::uint64_t n : args.n) {
    double e = 0;
    check(kor_minimal_error(problem.ptr, n, args.spec.cap, &e));
    errors.push_back(e);
  }

  std::string text;
  if (args.format == "json") {
    JsonOut json;
    json.open_object();
    write_spec_json(json, args.spec, w, args.d);
    json.field("cap", args.spec.cap);
    json.open_array("results");
    for (std::size_t i = 0; i < errors.size(); ++i) {
      json.open_object();
      json.field("n", args.n[i]);
      json.field("error", errors[i]);
      json.close_object();
    }
    json.close_array();
    json.close_object();
    text = json.str() + "\n";
  } else if (args.format == "csv") {
    text = "n,error\n";
    for (std::size_t i = 0; i < errors.size(); ++i) {
      text += std::to_string(args.n[i]) + "," + fmt17(errors[i]) + "\n";
    }
  } else {
    for (std::size_t i = 0; i < errors.size(); ++i) {
      text += "n=" + std::to_string(args.n[i]) + " error=" + fmt17(errors[i]) + "\n";
    }
  }
  emit(text, args.out);
  return 0;
}

// ---- classify ----

struct ClassifyArgs {
  SpecArgs spec;
  std::vector<double> sigma{0.25, 0.5, 1.0};
  std::vector<double> tau;
  std::string format = "table";
  std::string out;
};

void classify_verdict_json(JsonOut& json, const char* key, int kind, int nec, int suff) {
  if (kind == KOR_VERDICT_OPEN_GAP) {
    json.open_object(key);
    json.open_object("open");
    json.field("nec", nec != 0);
    json.field("suff", suff != 0);
    json.close_object();
    json.close_object();
  } else {
    json.field(key, kind == KOR_VERDICT_HOLDS ? "holds" : "fails");
  }
}

int run_classify(const ClassifyArgs& args) {
  if (!args.tau.empty()) {
    std::cerr << "note: tau never changes a (sigma, tau)-weak verdict; results hold for every tau > 0\n";
  }
  WeightsHandle w = make_weights(args.spec);
  const double p = parse_p_value(args.spec.p);

  kor_report* report = nullptr;
  check(kor_classify(w.ptr, args.spec.alpha, p, parse_class(args.spec.info_class),
                     parse_criterion(args.spec.criterion), args.sigma.data(), args.sigma.size(),
                     &report));
  std::unique_ptr<kor_report, decltype(&kor_report_free)> guard(report, kor_report_free);

  struct Row {
    const char* name;
    kor_notion notion;
  };
  const Row rows[] = {{"SPT", KOR_NOTION_SPT},
                      {"PT", KOR_NOTION_PT},
                      {"QPT", KOR_NOTION_QPT},
                      {"UWT", KOR_NOTION_UWT},
                      {"WT", KOR_NOTION_WT}};

  std::size_t sigma_count = 0;
  check(kor_report_sigma_count(report, &sigma_count));
  int tau_present = 0, t_present = 0;
  double tau_value = 0, t_value = 0;
  check(kor_report_tau_star(report, &tau_present, &tau_value));
  check(kor_report_t_star(report, &t_present, &t_value));
  std::size_t note_count = 0;
  check(kor_report_note_count(report, &note_count));

  std::string text;
  if (args.format == "json") {
    JsonOut json;
    json.open_object();
    write_spec_json(json, args.spec, w, 0, false);
    json.open_object("verdicts");
    for (const Row& row : rows) {
      int kind = 0, nec = 0, suff = 0;
      check(kor_report_verdict(report, row.notion, &kind, &nec, &suff));
      classify_verdict_json(json, row.name, kind, nec, suff);
    }
    json.close_object();
    json.open_array("sigma_wt");
    for (std::size_t i = 0; i < sigma_count; ++i) {
      double sigma = 0;
      int kind = 0, nec = 0, suff = 0;
      check(kor_report_sigma_verdict(report, i, &sigma, &kind, &nec, &suff));
      json.open_object();
      json.field("sigma", sigma);
      classify_verdict_json(json, "verdict", kind, nec, suff);
      json.close_object();
    }
    json.close_array();
    if (tau_present) {
      json.field("tau_star", tau_value);
    } else {
      json.null_field("tau_star");
    }
    if (t_present) {
      json.field("t_star", t_value);
    } else {
      json.null_field("t_star");
    }
    json.open_array("notes");
    for (std::size_t i = 0; i < note_count; ++i) {
      json.field(nullptr, kor_report_note(report, i));
    }
    json.close_array();
    json.close_object();
    text = json.str() + "\n";
  } else if (args.format == "csv") {
    text = "notion,sigma,verdict,nec,suff\n";
    for (const Row& row : rows) {
      int kind = 0, nec = 0, suff = 0;
      check(kor_report_verdict(report, row.notion, &kind, &nec, &suff));
      text += std::string(row.name) + ",," + verdict_name(kind) + "," + std::to_string(nec) + "," +
              std::to_string(suff) + "\n";
    }
    for (std::size_t i = 0; i < sigma_count; ++i) {
      double sigma = 0;
      int kind = 0, nec = 0, suff = 0;
      check(kor_report_sigma_verdict(report, i, &sigma, &kind, &nec, &suff));
      text += "sigma_wt," + fmt17(sigma) + "," + verdict_name(kind) + "," + std::to_string(nec) +
              "," + std::to_string(suff) + "\n";
    }
  } else {
    char canonical[512];
    check(kor_weights_describe(w.ptr, canonical, sizeof canonical));
    text += "family: " + std::string(canonical) + "\n";
    text += "alpha: " + fmt17(args.spec.alpha) + "\n";
    text += "p: " + (std::isinf(p) ? std::string("inf") : fmt17(p)) + "\n";
    text += "class: " + std::string(parse_class(args.spec.info_class) == KOR_CLASS_ALL ? "all" : "std") + "\n";
    text += "criterion: " +
            std::string(parse_criterion(args.spec.criterion) == KOR_CRITERION_ABSOLUTE ? "abs" : "norm") +
            "\n";
    for (const Row& row : rows) {
      int kind = 0, nec = 0, suff = 0;
      check(kor_report_verdict(report, row.notion, &kind, &nec, &suff));
      text += std::string(row.name) + ": " + verdict_name(kind);
      if (kind == KOR_VERDICT_OPEN_GAP) {
        text += std::string(" (nec=") + (nec ? "1" : "0") + ", suff=" + (suff ? "1" : "0") + ")";
      }
      text += "\n";
    }
    for (std::size_t i = 0; i < sigma_count; ++i) {
      double sigma = 0;
      int kind = 0, nec = 0, suff = 0;
      check(kor_report_sigma_verdict(report, i, &sigma, &kind, &nec, &suff));
      text += "(" + fmt17(sigma) + ",tau)-WT: " + verdict_name(kind);
      if (kind == KOR_VERDICT_OPEN_GAP) {
        text += std::string(" (nec=") + (nec ? "1" : "0") + ", suff=" + (suff ? "1" : "0") + ")";
      }
      text += "\n";
    }
    text += "tau_star: " + (tau_present ? fmt17(tau_value) : std::string("absent")) + "\n";
    text += "t_star: " + (t_present ? fmt17(t_value) : std::string("absent")) + "\n";
    for (std::size_t i = 0; i < note_count; ++i) {
      text += "note: " + std::string(kor_report_note(report, i)) + "\n";
    }
  }
  emit(text, args.out);
  return 0;
}

// ---- curve ----

struct CurveArgs {
  SpecArgs spec;
  std::vector<std::uint32_t> dims;
  std::vector<double> eps;
  unsigned threads = 1;
  bool fit = false;
  std::string format = "table";
  std::string out;
};

int run_curve(const CurveArgs& args) {
  WeightsHandle w = make_weights(args.spec);
  ProblemHandle problem = make_problem(args.spec, w, args.dims.front());

  kor_curve* curve = nullptr;
  check(kor_run_curve(problem.ptr, args.eps.data(), args.eps.size(), args.dims.data(),
                      args.dims.size(), args.spec.cap, args.threads, &curve));
  std::unique_ptr<kor_curve, decltype(&kor_curve_free)> guard(curve, kor_curve_free);

  std::size_t cells = 0;
  check(kor_curve_cell_count(curve, &cells));

  double tau_hat = 0;
  std::vector<std::pair<std::uint32_t, double>> slopes;
  bool fit_ok = false;
  if (args.fit) {
    const kor_status fit_status = kor_curve_fit(curve, &tau_hat);
    if (fit_status == KOR_OK) {
      fit_ok = true;
      std::size_t dim_count = 0;
      std::uint32_t d = 0;
      double slope = 0;
      kor_status s = kor_curve_fit_slope(curve, 0, &d, &slope, &dim_count);
      for (std::size_t i = 0; s == KOR_OK && i < dim_count; ++i) {
        check(kor_curve_fit_slope(curve, i, &d, &slope, &dim_count));
        slopes.emplace_back(d, slope);
      }
    } else if (fit_status != KOR_ERROR_INSUFFICIENT_DATA) {
      check(fit_status);
    } else {
      std::cerr << "note: exponent fit skipped: " << kor_last_error() << "\n";
    }
  }

  bool any_capped = false;
  bool any_failed = false;
  std::string text;
  if (args.format == "json") {
    JsonOut json;
    json.open_object();
    write_spec_json(json, args.spec, w, args.dims.front(), false);
    json.field("cap", args.spec.cap);
    json.open_array("cells");
    for (std::size_t i = 0; i < cells; ++i) {
      kor_curve_cell cell;
      check(kor_curve_get_cell(curve, i, &cell));
      any_capped = any_capped || cell.capped;
      any_failed = any_failed || cell.status != 0;
      json.open_object();
      json.field("d", cell.d);
      json.field("eps", cell.eps);
      json.field("n", cell.n);
      json.field("capped", cell.capped != 0);
      json.field("runtime_ms", cell.runtime_ms);
      json.field("status", cell.status);
      json.close_object();
    }
    json.close_array();
    if (args.fit && fit_ok) {
      json.open_object("fit");
      json.field("tau_hat", tau_hat);
      json.open_array("per_dimension");
      for (const auto& [d, slope] : slopes) {
        json.open_object();
        json.field("d", d);
        json.field("slope", slope);
        json.close_object();
      }
      json.close_array();
      json.close_object();
    }
    json.close_object();
    text = json.str() + "\n";
  } else {
    // csv and table share the exact cell serialization
    const bool csv = args.format == "csv";
    text = csv ? "d,eps,n,capped,runtime_ms\n" : "";
    for (std::size_t i = 0; i < cells; ++i) {
      kor_curve_cell cell;
      check(kor_curve_get_cell(curve, i, &cell));
      any_capped = any_capped || cell.capped;
      any_failed = any_failed || cell.status != 0;
      if (cell.status != 0) {
        std::cerr << "cell d=" << cell.d << " eps=" << fmt17(cell.eps)
                  << " failed with status " << cell.status << "\n";
        if (csv) continue;
      }
      if (csv) {
        text += std::to_string(cell.d) + "," + fmt17(cell.eps) + "," + std::to_string(cell.n) +
                "," + (cell.capped ? "1" : "0") + "," + fmt17(cell.runtime_ms) + "\n";
      } else {
        text += "d=" + std::to_string(cell.d) + " eps=" + fmt17(cell.eps) +
                " n=" + std::to_string(cell.n) + " capped=" + (cell.capped ? "1" : "0") +
                " runtime_ms=" + fmt17(cell.runtime_ms) + "\n";
      }
    }
    if (args.fit && fit_ok && !csv) {
      text += "tau_hat=" + fmt17(tau_hat) + "\n";
      for (const auto& [d, slope] : slopes) {
        text += "slope d=" + std::to_string(d) + ": " + fmt17(slope) + "\n";
      }
    }
  }
  emit(text, args.out);
  if (any_failed) return 1;
  return any_capped ? 3 : 0;
}

// ---- bounds ----

struct BoundsArgs {
  SpecArgs spec;
  std::vector<std::uint32_t> dims;
  std::vector<double> eps;
  std::string format = "table";
  std::string out;
};

int run_bounds(const BoundsArgs& args) {
  WeightsHandle w = make_weights(args.spec);
  SpecArgs sup = args.spec;
  sup.p = "inf";
  sup.info_class = "all";
  sup.criterion = "abs";
  ProblemHandle problem = make_problem(sup, w, args.dims.front());

  kor_bounds* bounds = nullptr;
  check(kor_verify_bounds(problem.ptr, args.eps.data(), args.eps.size(), args.dims.data(),
                          args.dims.size(), args.spec.cap, &bounds));
  std::unique_ptr<kor_bounds, decltype(&kor_bounds_free)> guard(bounds, kor_bounds_free);

  std::size_t cells = 0;
  check(kor_bounds_cell_count(bounds, &cells));
  int all_pass = 0;
  std::uint32_t skipped = 0;
  check(kor_bounds_summary(bounds, &all_pass, &skipped));

  std::string text;
  if (args.format == "json") {
    JsonOut json;
    json.open_object();
    write_spec_json(json, sup, w, args.dims.front(), false);
    json.field("cap", args.spec.cap);
    json.open_array("cells");
    for (std::size_t i = 0; i < cells; ++i) {
      kor_bounds_cell cell;
      check(kor_bounds_get_cell(bounds, i, &cell));
      json.open_object();
      json.field("d", cell.d);
      json.field("eps", cell.eps);
      json.field("lower", cell.lower);
      json.field("n_norm", cell.n_norm);
      json.field("n_abs", cell.n_abs);
      json.field("spline_lambda", cell.spline_lambda);
      json.field("log_spline_m", cell.log_spline_m);
      json.field("spline_n", cell.spline_n);
      json.field("spline_overflowed", cell.spline_overflowed != 0);
      json.field("skipped", cell.skipped != 0);
      json.field("pass", cell.pass != 0);
      json.close_object();
    }
    json.close_array();
    json.field("all_pass", all_pass != 0);
    json.field("skipped", static_cast<std::uint64_t>(skipped));
    json.close_object();
    text = json.str() + "\n";
  } else if (args.format == "csv") {
    text = "d,eps,lower,n_norm,n_abs,spline_lambda,log_spline_m,spline_n,overflowed,skipped,pass\n";
    for (std::size_t i = 0; i < cells; ++i) {
      kor_bounds_cell cell;
      check(kor_bounds_get_cell(bounds, i, &cell));
      text += std::to_string(cell.d) + "," + fmt17(cell.eps) + "," + fmt17(cell.lower) + "," +
              std::to_string(cell.n_norm) + "," + std::to_string(cell.n_abs) + "," +
              fmt17(cell.spline_lambda) + "," + fmt17(cell.log_spline_m) + "," +
              std::to_string(cell.spline_n) + "," + (cell.spline_overflowed ? "1" : "0") + "," +
              (cell.skipped ? "1" : "0") + "," + (cell.pass ? "1" : "0") + "\n";
    }
  } else {
    for (std::size_t i = 0; i < cells; ++i) {
      kor_bounds_cell cell;
      check(kor_bounds_get_cell(bounds, i, &cell));
      text += "d=" + std::to_string(cell.d) + " eps=" + fmt17(cell.eps) +
              " lower=" + fmt17(cell.lower) + " n_norm=" + std::to_string(cell.n_norm) +
              " n_abs=" + std::to_string(cell.n_abs);
      if (cell.skipped) {
        text += " skipped=1\n";
        continue;
      }
      text += " spline_lambda=" + fmt17(cell.spline_lambda) +
              " log_spline_m=" + fmt17(cell.log_spline_m);
      if (!cell.spline_overflowed) text += " spline_n=" + std::to_string(cell.spline_n);
      text += std::string(" pass=") + (cell.pass ? "1" : "0") + "\n";
    }
    text += std::string("all_pass=") + (all_pass ? "1" : "0") +
            " skipped=" + std::to_string(skipped) + "\n";
  }
  emit(text, args.out);
  if (!all_pass) return 1;
  return skipped > 0 ? 3 : 0;
}

// ---- oracle ----

struct OracleArgs {
  SpecArgs spec;
  std::uint32_t d = 1;
  std::uint32_t box = 1;
  std::string format = "table";
  std::string out;
};

int run_oracle(const OracleArgs& args) {
  WeightsHandle w = make_weights(args.spec);
  ProblemHandle problem = make_problem(args.spec, w, args.d);

  kor_oracle* oracle = nullptr;
  check(kor_brute_force_spectrum(problem.ptr, args.box, &oracle));
  std::unique_ptr<kor_oracle, decltype(&kor_oracle_free)> guard(oracle, kor_oracle_free);

  std::size_t lines = 0;
  check(kor_oracle_count(oracle, &lines));

  std::string text;
  if (args.format == "json") {
    JsonOut json;
    json.open_object();
    write_spec_json(json, args.spec, w, args.d);
    json.field("box", args.box);
    json.open_array("lines");
    for (std::size_t i = 0; i < lines; ++i) {
      double value = 0;
      std::uint64_t count = 0;
      check(kor_oracle_line(oracle, i, &value, &count));
      json.open_object();
      json.field("value", value);
      json.field("count", count);
      json.close_object();
    }
    json.close_array();
    json.close_object();
    text = json.str() + "\n";
  } else if (args.format == "csv") {
    text = "value,count\n";
    for (std::size_t i = 0; i < lines; ++i) {
      double value = 0;
      std::uint64_t count = 0;
      check(kor_oracle_line(oracle, i, &value, &count));
      text += fmt17(value) + "," + std::to_string(count) + "\n";
    }
  } else {
    for (std::size_t i = 0; i < lines; ++i) {
      double value = 0;
      std::uint64_t count = 0;
      check(kor_oracle_line(oracle, i, &value, &count));
      text += "value=" + fmt17(value) + " count=" + std::to_string(count) + "\n";
    }
  }
  emit(text, args.out);
  return 0;
}

void add_format_options(CLI::App* cmd, std::string& format, std::string& out) {
  cmd->add_option("--format", format, "output format: table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_option("--out", out, "write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Korobov-space approximation complexity and tractability toolkit"};
  app.set_version_flag("--version", []() { return std::string(kor_version()); });
  app.require_subcommand(1);

  ComplexityArgs complexity_args;
  CLI::App* complexity_cmd =
      app.add_subcommand("complexity", "information complexity n(eps) for a single dimension");
  complexity_cmd->add_option("--d", complexity_args.d, "dimension")->required();
  add_spec_options(complexity_cmd, complexity_args.spec);
  complexity_cmd->add_option("--eps", complexity_args.eps, "error thresholds in (0, 1)")->required();
  add_format_options(complexity_cmd, complexity_args.format, complexity_args.out);

  ErrorArgs error_args;
  CLI::App* error_cmd =
      app.add_subcommand("error", "n-th minimal worst-case error over all linear functionals");
  error_cmd->add_option("--d", error_args.d, "dimension")->required();
  add_spec_options(error_cmd, error_args.spec);
  error_cmd->add_option("--n", error_args.n, "information counts")->required();
  add_format_options(error_cmd, error_args.format, error_args.out);

  ClassifyArgs classify_args;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "tractability verdicts for a weight family");
  add_spec_options(classify_cmd, classify_args.spec);
  classify_cmd->add_option("--sigma", classify_args.sigma,
                           "sigma values for the (sigma, tau)-weak notions");
  classify_cmd->add_option("--tau", classify_args.tau,
                           "accepted for symmetry; verdicts never depend on tau");
  add_format_options(classify_cmd, classify_args.format, classify_args.out);

  CurveArgs curve_args;
  CLI::App* curve_cmd =
      app.add_subcommand("curve", "information complexity over a (dimension, eps) grid");
  curve_cmd->add_option("--d", curve_args.dims, "dimensions")->required();
  add_spec_options(curve_cmd, curve_args.spec);
  curve_cmd->add_option("--eps", curve_args.eps, "error thresholds in (0, 1)")->required();
  curve_cmd->add_option("--threads", curve_args.threads, "worker threads; 0 = one per core");
  curve_cmd->add_flag("--fit", curve_args.fit, "fit the complexity exponent per dimension");
  add_format_options(curve_cmd, curve_args.format, curve_args.out);

  BoundsArgs bounds_args;
  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds", "lower bound <= n_norm <= n_abs <= spline count on the sup-norm problem");
  bounds_cmd->add_option("--d", bounds_args.dims, "dimensions")->required();
  add_spec_options(bounds_cmd, bounds_args.spec, false);
  bounds_cmd->add_option("--eps", bounds_args.eps, "error thresholds in (0, 1)")->required();
  add_format_options(bounds_cmd, bounds_args.format, bounds_args.out);

  OracleArgs oracle_args;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "brute-force spectrum over a signed frequency box");
  oracle_cmd->add_option("--d", oracle_args.d, "dimension")->required();
  add_spec_options(oracle_cmd, oracle_args.spec);
  oracle_cmd->add_option("--box", oracle_args.box, "half-width of the frequency box")->required();
  add_format_options(oracle_cmd, oracle_args.format, oracle_args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (complexity_cmd->parsed()) return run_complexity(complexity_args);
    if (error_cmd->parsed()) return run_error(error_args);
    if (classify_cmd->parsed()) return run_classify(classify_args);
    if (curve_cmd->parsed()) return run_curve(curve_args);
    if (bounds_cmd->parsed()) return run_bounds(bounds_args);
    if (oracle_cmd->parsed()) return run_oracle(oracle_args);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
