#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "taulab/bigint.hpp"

namespace taulab {

/// f(n) = ln n / (2 ln ln n). Throws std::domain_error for n < 16.
double f_dense(double n);
/// p n^2 / f(n), the dense-regime upper bound.
double upper_dense(double n, double p);

/// sum_{i=1}^{f} C(C(2i, 2), i): graphs with i < f+1 edges and no isolated
/// vertices, counted on labeled vertex sets of size 2i. Throws for f == 0.
BigInt alpha_small_bound(std::uint32_t f);

/// l(k) = floor((sqrt(8k - 7) + 1) / 2), exactly. Throws for k < 2.
std::uint32_t ell(std::uint64_t k);
/// -l^2 - l + 2k <= 0.
bool claim_check(std::uint64_t k);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
  [[nodiscard]] double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Exponents of n and p in the very sparse order of magnitude,
/// ((l+2)(l-1)/(2l), (l-1)/2), reduced.
struct ThetaExponents {
  Rational n_exp;
  Rational p_exp;
};
ThetaExponents theta_exponents(std::uint64_t k);

/// n^{(l+2)(l-1)/(2l)} p^{(l-1)/2} with l = ell(k).
double theta_verysparse(double n, double p, std::uint64_t k);

/// xi_i = c_i n^i p^{i-1} / theta - 1. Requires 2 <= i <= ell(k), c_i > 0.
double xi(std::uint32_t i, double n, double p, double c_i, std::uint64_t k);

/// (B + 2 sum_{i=1}^{l-2} r_i A_i + l^2 s^l (np)^{-(l-1)(l-2)/2}) / (2s),
/// r_i = (np)^{l-1-i}, s = n^{(l^2-l+2)/(2l)} p^{(l-1)/2}.
/// Requires k >= 4 and A.size() == l - 2; m is the index range of the
/// underlying program and must be positive, the bound does not use it.
double upper_F(std::span<const double> A, double B, double n, double p, std::uint64_t k, double m);

/// Thresholds on p for the dense regime, C ln n / n and C ln^2 n / n.
/// The two differ by a log factor; callers pick explicitly.
double dense_threshold_log(double n, double C);
double dense_threshold_log2(double n, double C);

struct ChernoffBounds {
  double upper = 1;  // P(X >= (1+d) mu) <= exp(-mu d^2 / 3)
  double lower = 1;  // P(X <= (1-d) mu) <= exp(-mu d^2 / 2)
};
/// Requires mu >= 0 and 0 < delta < 1.
ChernoffBounds chernoff(double mu, double delta);
/// P(X >= R) <= 2^{-R}, valid for R >= 2 e mu.
double chernoff_heavy(double R, double mu);

/// p range (n^{-k/(k-1)}, n^{-(k+1)/k}) where the very sparse analysis
/// with parameter k applies.
std::pair<double, double> verysparse_window(double n, std::uint64_t k);

struct RegimeParams {
  double n = 0;
  double p = 0;
  std::uint64_t k = 0;  // 0 when unset
  std::uint32_t ell = 0;
  double f = 0;
  double epsilon = 0;
  double C = 0;
  double c_path = 0;
  std::size_t tree_order = 0;

  static RegimeParams make(double n, double p, std::uint64_t k, double epsilon, double c_path);
};

/// max sum x_t over t = 0..m subject to sum t x_t <= A, sum x_t^2 <= B,
/// x >= 0 (continuous relaxation). The optimum has the shape
/// x_t = max(0, r - s t).
struct OptProblem {
  std::uint64_t m = 0;
  double A = 0;
  double B = 0;
  /// x[t] for t in the support; entries past x.size() are zero.
  std::vector<double> x;
  double objective = 0;
  double r = 0;
  double s = 0;
};

/// A may be +infinity. Throws std::invalid_argument on bad input and
/// std::runtime_error if the multiplier search does not converge.
OptProblem toy_lagrange_opt(double A, double B, std::uint64_t m, double tol = 1e-12);

}  // namespace taulab
