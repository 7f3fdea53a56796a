#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      std::string(KOROBOV_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string strip_last_column(const std::string& line) {
  const auto pos = line.rfind(',');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

TEST_CASE("version and help") {
  const auto version = run("--version");
  CHECK(version.code == 0);
  CHECK(!version.out.empty());
  const auto help = run("--help");
  CHECK(help.code == 0);
  CHECK(help.out.find("complexity") != std::string::npos);
}

TEST_CASE("complexity table output") {
  const auto r = run("complexity --d 1 --alpha 2 --weights const:g=1 --p 2 --eps 0.6");
  CHECK(r.code == 0);
  CHECK(r.out.find("n=3") != std::string::npos);
  CHECK(r.out.find("capped=0") != std::string::npos);
}

TEST_CASE("complexity csv output") {
  const auto r = run(
      "complexity --d 1 --alpha 2 --weights const:g=1 --p 2 --eps 0.6 --eps 0.2 --format csv");
  CHECK(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "eps,n,capped");
  CHECK(lines[1].find(",3,0") != std::string::npos);
  CHECK(lines[2].find(",9,0") != std::string::npos);
}

TEST_CASE("complexity json output") {
  const auto r = run(
      "complexity --d 1 --alpha 2 --weights const:g=1 --p 2 --eps 0.6 --format json");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["spec"]["dimension"] == 1);
  CHECK(doc["spec"]["weights"] == "const:g=1");
  CHECK(doc["spec"]["p"] == "2");
  CHECK(doc["spec"]["class"] == "all");
  CHECK(doc["spec"]["criterion"] == "abs");
  REQUIRE(doc["results"].size() == 1);
  const auto& cell = doc["results"][0];
  CHECK(cell["n"] == 3);
  CHECK(cell["capped"] == false);
  CHECK(cell["witness"]["lambda_n"] == 1.0);
  CHECK(cell["witness"]["lambda_next"] == 0.25);
  CHECK(cell["witness"]["tail_n"].is_null());  // NaN serializes as null
}

TEST_CASE("sup-norm complexity json carries tail witnesses") {
  const auto r = run(
      "complexity --d 1 --alpha 2 --weights const:g=1 --p inf --criterion norm --eps 0.9 "
      "--format json");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto& witness = doc["results"][0]["witness"];
  CHECK(witness["lambda_n"].is_null());
  CHECK(witness["tail_n"].is_number());
  CHECK(witness["tail_prev"].is_number());
  CHECK(witness["target"].is_number());
  CHECK(witness["tail_n"].get<double>() <= witness["target"].get<double>());
  CHECK(witness["tail_prev"].get<double>() > witness["target"].get<double>());
}

TEST_CASE("minimal error values") {
  const auto r = run("error --d 1 --alpha 2 --weights const:g=1 --p 2 --n 0 --n 3");
  CHECK(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "n=0 error=1");
  CHECK(lines[1] == "n=3 error=0.5");
}

TEST_CASE("classify table output") {
  const auto r = run("classify --alpha 2 --weights poly:c=1,beta=1 --p inf");
  CHECK(r.code == 0);
  CHECK(r.out.find("SPT: Fails") != std::string::npos);
  CHECK(r.out.find("PT: Fails") != std::string::npos);
  CHECK(r.out.find("QPT: OpenGap (nec=1, suff=0)") != std::string::npos);
  CHECK(r.out.find("UWT: Holds") != std::string::npos);
  CHECK(r.out.find("WT: Holds") != std::string::npos);
  CHECK(r.out.find("(0.25,tau)-WT: Holds") != std::string::npos);
  CHECK(r.out.find("tau_star: absent") != std::string::npos);
}

TEST_CASE("classify emits the tau note when tau is supplied") {
  const auto r = run("classify --alpha 2 --weights const:g=0.5 --p 2 --tau 0.7", true);
  CHECK(r.code == 0);
  CHECK(r.out.find("tau never changes") != std::string::npos);
}

TEST_CASE("classify json schema") {
  const auto r = run("classify --alpha 2 --weights poly:c=1,beta=1 --p inf --format json");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdicts"]["SPT"] == "fails");
  CHECK(doc["verdicts"]["UWT"] == "holds");
  REQUIRE(doc["verdicts"]["QPT"].is_object());
  CHECK(doc["verdicts"]["QPT"]["open"]["nec"] == true);
  CHECK(doc["verdicts"]["QPT"]["open"]["suff"] == false);
  CHECK(doc["tau_star"].is_null());
  CHECK(doc["t_star"].is_null());
  REQUIRE(doc["sigma_wt"].is_array());
  REQUIRE(doc["sigma_wt"].size() == 3);  // default sigma grid 0.25, 0.5, 1.0
  CHECK(doc["sigma_wt"][0]["sigma"] == 0.25);
  CHECK(doc["sigma_wt"][0]["verdict"] == "holds");
  CHECK(doc["notes"].is_array());

  const auto l2 = run("classify --alpha 2 --weights poly:c=1,beta=2 --p 2 --format json");
  const auto doc2 = nlohmann::json::parse(l2.out);
  CHECK(doc2["verdicts"]["SPT"] == "holds");
  CHECK(doc2["tau_star"] == 1.0);
  CHECK(doc2["t_star"] == 1.0);
}

TEST_CASE("curve csv header and determinism") {
  const std::string spec =
      "curve --alpha 2 --weights poly:c=1,beta=2 --p 2 --d 1 --d 2 --eps 0.5 --eps 0.1 "
      "--format csv";
  const auto a = run(spec + " --threads 1");
  const auto b = run(spec + " --threads 4");
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  const auto la = lines_of(a.out);
  const auto lb = lines_of(b.out);
  REQUIRE(la.size() == 5);
  REQUIRE(lb.size() == 5);
  CHECK(la[0] == "d,eps,n,capped,runtime_ms");
  for (std::size_t i = 1; i < la.size(); ++i) {
    CHECK(strip_last_column(la[i]) == strip_last_column(lb[i]));
  }
  CHECK(la[1].rfind("1,", 0) == 0);
  CHECK(la[3].rfind("2,", 0) == 0);
}

TEST_CASE("curve fit prints the exponent estimate") {
  const auto r = run(
      "curve --alpha 2 --weights const:g=1 --p 2 --d 1 --eps 0.2 --eps 0.1 --eps 0.05 "
      "--eps 0.02 --eps 0.01 --fit",
      true);
  CHECK(r.code == 0);
  CHECK(r.out.find("tau_hat") != std::string::npos);
}

TEST_CASE("bounds subcommand checks the sandwich") {
  const auto r = run(
      "bounds --alpha 3 --weights poly:c=1,beta=2 --d 1 --d 2 --eps 0.5 --eps 0.1 --format csv");
  CHECK(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "d,eps,lower,n_norm,n_abs,spline_lambda,log_spline_m,spline_n,overflowed,skipped,pass");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    CHECK(lines[i].back() == '1');  // pass column
  }
}

TEST_CASE("oracle lists the spectrum lines") {
  const auto r = run("oracle --d 1 --alpha 2 --weights const:g=1 --box 2");
  CHECK(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "value=1 count=3");
  CHECK(lines[1] == "value=0.25 count=2");
}

TEST_CASE("exit codes") {
  CHECK(run("complexity --d 1 --alpha 2 --weights poly:c=1,beta= --p 2 --eps 0.5").code == 2);
  CHECK(run("complexity --d 1 --alpha 2 --weights const:g=1 --p 2 --eps 1.5").code == 2);
  CHECK(run("complexity --d 1 --alpha 2 --weights const:g=1 --p 2 --eps 0.01 --cap 100").code ==
        3);
  CHECK(run("complexity --d 1 --alpha 2 --weights const:g=1 --p 2 --class std --eps 0.5").code ==
        4);
  CHECK(run("classify --alpha 2 --weights const:g=0.5 --p 3.5 --criterion norm").code == 4);
  CHECK(run("error --d 1 --alpha 2 --weights const:g=1 --p 7 --n 1").code == 2);
  CHECK(run("nonsense").code == 2);
}

TEST_CASE("parse errors carry the position") {
  const auto r = run("complexity --d 1 --alpha 2 --weights poly:c=1,beta= --p 2 --eps 0.5", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("position 14") != std::string::npos);
}

TEST_CASE("output file option") {
  const std::string path = "/tmp/korobov_cli_test_out.csv";
  std::remove(path.c_str());
  const auto r = run("complexity --d 1 --alpha 2 --weights const:g=1 --p 2 --eps 0.6 "
                     "--format csv --out " +
                     path);
  CHECK(r.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "eps,n,capped");
  std::remove(path.c_str());
}
