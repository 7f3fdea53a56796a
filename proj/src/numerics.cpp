#include "numerics.hpp"

#include <cfloat>
#include <cmath>
#include <cstring>
#include <mutex>
#include <unordered_map>

#include "errors.hpp"

namespace korobov::numerics {

namespace {

// Bernoulli numbers B2, B4, ..., B22 as fractions.
constexpr double kBernoulliNum[11] = {1, -1, 1, -1, 5, -691, 7, -3617, 43867, -174611, 854513};
constexpr double kBernoulliDen[11] = {6, 30, 42, 30, 66, 2730, 6, 510, 798, 330, 138};

constexpr int kHeadTerms = 24;
constexpr int kCorrectionTerms = 10;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

ZetaResult zeta_euler_maclaurin(double s) {
  const double m = kHeadTerms;
  double acc = 0.0;
  for (int k = kHeadTerms - 1; k >= 1; --k) acc += std::pow(double(k), -s);
  acc += std::pow(m, 1.0 - s) / (s - 1.0);
  acc += 0.5 * std::pow(m, -s);

  double rising = s;                       // s (s+1) ... accumulated
  double mpow = std::pow(m, -s - 1.0);
  for (int k = 1; k <= kCorrectionTerms; ++k) {
    acc += kBernoulliNum[k - 1] / kBernoulliDen[k - 1] / factorial(2 * k) * rising * mpow;
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    mpow /= m * m;
  }
  const double truncation =
      std::fabs(kBernoulliNum[kCorrectionTerms] / kBernoulliDen[kCorrectionTerms] /
                factorial(2 * kCorrectionTerms + 2) * rising * mpow);
  const double rounding = 64.0 * DBL_EPSILON * std::fmax(1.0, std::fabs(acc));
  return {acc, truncation + rounding};
}

std::mutex g_zeta_mutex;
std::unordered_map<std::uint64_t, ZetaResult>& zeta_cache() {
  static std::unordered_map<std::uint64_t, ZetaResult> cache;
  return cache;
}

std::uint64_t key_of(double s) {
  std::uint64_t k;
  std::memcpy(&k, &s, sizeof k);
  return k;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

constexpr std::uint64_t kLargestPrime64 = 18446744073709551557ULL;

}  // namespace

ZetaResult zeta_certified(double s) {
  if (!(s > 1.0)) throw DomainError("zeta requires s > 1");
  const std::uint64_t key = key_of(s);
  {
    std::lock_guard<std::mutex> lock(g_zeta_mutex);
    auto it = zeta_cache().find(key);
    if (it != zeta_cache().end()) return it->second;
  }
  const ZetaResult r = zeta_euler_maclaurin(s);
  {
    std::lock_guard<std::mutex> lock(g_zeta_mutex);
    zeta_cache().emplace(key, r);
  }
  return r;
}

double zeta(double s) { return zeta_certified(s).value; }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t m) {
  if (m > kLargestPrime64) throw OverflowError("no prime >= m fits in 64 bits");
  if (m <= 2) return 2;
  std::uint64_t c = m | 1;  // first odd candidate >= m
  while (!is_prime(c)) c += 2;
  return c;
}

LogLogFit fit_loglog_slope(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw DegenerateInputError("log-log fit needs at least 3 points");
  double sx = 0, sy = 0;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) throw DomainError("log-log fit needs positive coordinates");
    sx += std::log(x);
    sy += std::log(y);
  }
  const double n = static_cast<double>(points.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    const double dx = std::log(x) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y) - my);
  }
  if (sxx == 0.0) throw DegenerateInputError("log-log fit needs at least 2 distinct x values");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

}  // namespace korobov::numerics
