#include "taulab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace taulab {

double f_dense(double n) {
  if (!(n >= 16)) throw std::domain_error("f_dense: n must be at least 16");
  return std::log(n) / (2.0 * std::log(std::log(n)));
}

double upper_dense(double n, double p) { return p * n * n / f_dense(n); }

BigInt alpha_small_bound(std::uint32_t f) {
  if (f == 0) throw std::invalid_argument("alpha_small_bound: f must be positive");
  BigInt total = 0;
  for (std::uint64_t i = 1; i <= f; ++i) {
    const std::uint64_t pairs = (2 * i) * (2 * i - 1) / 2;
    total += binomial(pairs, i);
  }
  return total;
}

namespace {

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (static_cast<unsigned __int128>(r) * r > x) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

Rational reduced(std::int64_t num, std::int64_t den) {
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

}  // namespace

std::uint32_t ell(std::uint64_t k) {
  if (k < 2) throw std::invalid_argument("ell: k must be at least 2");
  // floor((sqrt(x) + 1) / 2) == floor((isqrt(x) + 1) / 2) for integer x.
  return static_cast<std::uint32_t>((isqrt(8 * k - 7) + 1) / 2);
}

bool claim_check(std::uint64_t k) {
  const auto l = static_cast<std::int64_t>(ell(k));
  return -l * l - l + 2 * static_cast<std::int64_t>(k) <= 0;
}

ThetaExponents theta_exponents(std::uint64_t k) {
  const auto l = static_cast<std::int64_t>(ell(k));
  return {reduced((l + 2) * (l - 1), 2 * l), reduced(l - 1, 2)};
}

double theta_verysparse(double n, double p, std::uint64_t k) {
  const auto e = theta_exponents(k);
  return std::pow(n, e.n_exp.value()) * std::pow(p, e.p_exp.value());
}

double xi(std::uint32_t i, double n, double p, double c_i, std::uint64_t k) {
  if (i < 2 || i > ell(k)) throw std::invalid_argument("xi: index outside [2, l(k)]");
  if (!(c_i > 0)) throw std::invalid_argument("xi: c_i must be positive");
  return c_i * std::pow(n, i) * std::pow(p, i - 1) / theta_verysparse(n, p, k) - 1.0;
}

double upper_F(std::span<const double> A, double B, double n, double p, std::uint64_t k, double m) {
  if (k < 4) throw std::invalid_argument("upper_F: k must be at least 4");
  if (!(m > 0)) throw std::invalid_argument("upper_F: m must be positive");
  const double l = ell(k);
  if (A.size() != static_cast<std::size_t>(l) - 2) {
    throw std::invalid_argument("upper_F: expected " + std::to_string(static_cast<int>(l) - 2) +
                                " linear budgets, got " + std::to_string(A.size()));
  }
  const double np = n * p;
  const double s = std::pow(n, (l * l - l + 2) / (2 * l)) * std::pow(p, (l - 1) / 2);
  double linear = 0;
  for (std::size_t i = 1; i <= A.size(); ++i) {
    linear += std::pow(np, l - 1 - static_cast<double>(i)) * A[i - 1];
  }
  const double tail = l * l * std::pow(s, l) * std::pow(np, -(l - 1) * (l - 2) / 2);
  return (B + 2 * linear + tail) / (2 * s);
}

double dense_threshold_log(double n, double C) { return C * std::log(n) / n; }

double dense_threshold_log2(double n, double C) {
  const double L = std::log(n);
  return C * L * L / n;
}

ChernoffBounds chernoff(double mu, double delta) {
  if (!(mu >= 0)) throw std::domain_error("chernoff: mu must be nonnegative");
  if (!(delta > 0 && delta < 1)) throw std::domain_error("chernoff: delta must lie in (0, 1)");
  return {std::exp(-mu * delta * delta / 3), std::exp(-mu * delta * delta / 2)};
}

double chernoff_heavy(double R, double mu) {
  if (!(mu >= 0) || !(R >= 2 * std::exp(1.0) * mu)) {
    throw std::domain_error("chernoff_heavy: requires R >= 2 e mu");
  }
  return std::exp2(-R);
}

std::pair<double, double> verysparse_window(double n, std::uint64_t k) {
  if (k < 2) throw std::invalid_argument("verysparse_window: k must be at least 2");
  const double kd = static_cast<double>(k);
  return {std::pow(n, -kd / (kd - 1)), std::pow(n, -(kd + 1) / kd)};
}

RegimeParams RegimeParams::make(double n, double p, std::uint64_t k, double epsilon, double c_path) {
  if (!(n >= 1)) throw std::invalid_argument("RegimeParams: n must be positive");
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("RegimeParams: p must lie in [0, 1]");
  RegimeParams r;
  r.n = n;
  r.p = p;
  r.k = k;
  r.ell = k >= 2 ? taulab::ell(k) : 0;
  r.f = n >= 16 ? f_dense(n) : 0;
  r.epsilon = epsilon;
  r.C = epsilon > 0 ? 4 / epsilon : 0;
  r.c_path = c_path;
  r.tree_order = n >= 2 ? static_cast<std::size_t>(std::floor(3 * std::log2(n))) : 0;
  return r;
}

namespace {

// Power sums over t = 0..T.
struct Sums {
  double count;  // T + 1
  double t1;     // sum t
  double t2;     // sum t^2
};

Sums sums(double T) { return {T + 1, T * (T + 1) / 2, T * (T + 1) * (2 * T + 1) / 6}; }

// Support end for ratio lam = s / r: largest t <= m with 1 - lam t > 0.
double support_end(double lam, double m) {
  if (lam <= 0) return m;
  double T = std::ceil(1 / lam) - 1;
  if (T < 0) T = 0;
  return std::min(m, T);
}

}  // namespace

OptProblem toy_lagrange_opt(double A, double B, std::uint64_t m, double tol) {
  if (!(A >= 0)) throw std::invalid_argument("toy_lagrange_opt: A must be nonnegative");
  if (!(B > 0) || std::isinf(B)) throw std::invalid_argument("toy_lagrange_opt: B must be positive and finite");
  if (m == 0) throw std::invalid_argument("toy_lagrange_opt: m must be positive");
  if (!(tol > 0)) throw std::invalid_argument("toy_lagrange_opt: tol must be positive");
  const double md = static_cast<double>(m);

  OptProblem out;
  out.m = m;
  out.A = A;
  out.B = B;

  // x_t = r (1 - lam t) on the support, with r fixed by sum x^2 = B.
  auto finish = [&](double lam) {
    const double T = support_end(lam, md);
    const Sums S = sums(T);
    const double sq = S.count - 2 * lam * S.t1 + lam * lam * S.t2;
    out.r = std::sqrt(B / sq);
    out.s = out.r * lam;
    const auto len = static_cast<std::size_t>(T) + 1;
    out.x.resize(len);
    for (std::size_t t = 0; t < len; ++t) out.x[t] = std::max(0.0, out.r - out.s * static_cast<double>(t));
    out.objective = out.r * (S.count - lam * S.t1);
  };
  // Linear budget used at ratio lam; decreasing from lam = 0 to lam = 1.
  auto used = [&](double lam) {
    const double T = support_end(lam, md);
    const Sums S = sums(T);
    const double lin = S.t1 - lam * S.t2;
    const double sq = S.count - 2 * lam * S.t1 + lam * lam * S.t2;
    return std::sqrt(B) * lin / std::sqrt(sq);
  };

  if (A == 0) {
    finish(1.0);
    return out;
  }
  if (used(0.0) <= A) {
    finish(0.0);
    return out;
  }
  double lo = 0;
  double hi = 1;
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double u = used(mid);
    if (std::abs(u - A) <= tol * std::max(1.0, A) || hi - lo <= std::numeric_limits<double>::epsilon() * hi) {
      finish(mid);
      return out;
    }
    (u > A ? lo : hi) = mid;
  }
  throw std::runtime_error("toy_lagrange_opt: multiplier search did not converge");
}

}  // namespace taulab
