#include <doctest.h>

#include <cmath>

#include "taulab/bounds.hpp"
#include "taulab/rng.hpp"

using namespace taulab;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("dense quantities") {
  const double n = std::exp(std::exp(2.0));
  CHECK(f_dense(n) == doctest::Approx(std::exp(2.0) / 4));
  CHECK(upper_dense(1000, 0) == 0);
  CHECK(upper_dense(1000, 0.2) == doctest::Approx(2 * upper_dense(1000, 0.1)));
  CHECK_THROWS_AS(f_dense(15), std::domain_error);
  CHECK(dense_threshold_log2(1000, 2) == doctest::Approx(dense_threshold_log(1000, 2) * std::log(1000.0)));
}

TEST_CASE("small-graph counting bound") {
  CHECK(alpha_small_bound(1) == 1);
  CHECK(alpha_small_bound(2) == 16);
  CHECK(alpha_small_bound(3) == 16 + 455);  // C(15, 3)
  for (std::uint32_t f = 1; f < 20; ++f) CHECK(alpha_small_bound(f + 1) > alpha_small_bound(f));
  CHECK_THROWS_AS(alpha_small_bound(0), std::invalid_argument);
}

TEST_CASE("ell and the claim") {
  CHECK(ell(2) == 2);
  CHECK(ell(3) == 2);
  CHECK(ell(4) == 3);
  CHECK(ell(7) == 4);
  CHECK(claim_check(7));
  CHECK_THROWS_AS(ell(1), std::invalid_argument);
  for (std::uint64_t k = 2; k <= 10000; ++k) {
    // smallest l with l^2 + l >= 2k
    std::uint32_t l = 1;
    while (std::uint64_t{l} * l + l < 2 * k) ++l;
    REQUIRE(ell(k) == l);
    if (k > 2) CHECK(ell(k) >= ell(k - 1));
  }
  for (std::uint64_t k = 2; k <= 1000000; ++k) REQUIRE(claim_check(k));
  CHECK(ell(std::uint64_t{1} << 40) == static_cast<std::uint32_t>((std::sqrt(8.0 * (1ULL << 40) - 7) + 1) / 2));
}

TEST_CASE("theta exponents and values") {
  CHECK(theta_exponents(2).n_exp == Rational{1, 1});
  CHECK(theta_exponents(2).p_exp == Rational{1, 2});
  CHECK(theta_exponents(3).n_exp == Rational{1, 1});
  CHECK(theta_exponents(4).n_exp == Rational{5, 3});
  CHECK(theta_exponents(4).p_exp == Rational{1, 1});
  CHECK(theta_exponents(7).n_exp == Rational{9, 4});  // l = 4: 6*3/8
  CHECK(theta_exponents(7).p_exp == Rational{3, 2});
  CounterRng rng(5);
  for (int i = 0; i < 10; ++i) {
    const double n = std::pow(10.0, 3 + 3 * rng.uniform01());
    const double p = std::pow(n, -1.1 - 0.5 * rng.uniform01());
    CHECK(rel(theta_verysparse(n, p, 2), n * std::sqrt(p)) < 1e-12);
    CHECK(rel(theta_verysparse(n, p, 3), n * std::sqrt(p)) < 1e-12);
    CHECK(rel(theta_verysparse(n, p, 4), std::cbrt(n * n * n * n * n) * p) < 1e-12);
  }
}

TEST_CASE("xi") {
  const double n = 1e5;
  const double p = std::pow(n, -1.3);
  const double theta = theta_verysparse(n, p, 4);
  // c_i chosen so that c_i n^i p^{i-1} = theta
  CHECK(xi(2, n, p, theta / (n * n * p), 4) == doctest::Approx(0.0).epsilon(1e-12));
  const double x2 = xi(2, n, p, 1.0, 4);
  const double x3 = xi(3, n, p, 1.0, 4);
  CHECK(x2 > 1);
  CHECK(x2 == doctest::Approx(n * n * p / theta - 1));
  CHECK(x3 == doctest::Approx(n * n * n * p * p / theta - 1));
  CHECK(x3 < 1);  // n^3 p^2 is only about 1.5 theta at this n
  CHECK_THROWS_AS(xi(4, n, p, 1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(xi(2, n, p, 0.0, 4), std::invalid_argument);

  CounterRng rng(6);
  for (int t = 0; t < 20; ++t) {
    const std::uint64_t k = 4 + rng.below(20);
    const double nn = std::pow(10.0, 3 + 2 * rng.uniform01());
    const double pp = std::pow(nn, -1.05 - 0.4 * rng.uniform01());
    double prod = 1;
    double c = 1;
    for (std::uint32_t i = 2; i <= ell(k); ++i) {
      const double ci = 0.1 + rng.uniform01();
      c *= ci;
      prod *= xi(i, nn, pp, ci, k) + 1;
    }
    // prod (xi_i + 1) = prod c_i * prod n^i p^{i-1} / theta^{l-1}
    double direct = c;
    for (std::uint32_t i = 2; i <= ell(k); ++i) direct *= std::pow(nn, i) * std::pow(pp, i - 1) / theta_verysparse(nn, pp, k);
    CHECK(rel(prod, direct) < 1e-9);
  }
}

TEST_CASE("upper_F") {
  const double n = 1e4;
  const double p = std::pow(n, -1.3);
  const double np = n * p;
  const std::vector<double> zero{0.0};
  const double s = std::pow(n, 4.0 / 3) * p;
  CHECK(upper_F(zero, 0, n, p, 4, 1) == doctest::Approx(9 * s * s * s / np / (2 * s)));
  const std::vector<double> none;
  CHECK_THROWS_AS(upper_F(none, 0, n, p, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(upper_F(zero, 0, n, p, 3, 1), std::invalid_argument);
  const std::vector<double> a{n * n * p};
  const double one = upper_F(a, n * n * n * p * p, n, p, 4, n * n * p);
  const double two = upper_F(a, 2 * n * n * n * p * p, n, p, 4, n * n * p);
  CHECK(two > one);
  CHECK(two < 2 * one);
  for (double nn : {1e3, 1e4, 1e5, 1e6}) {
    const double pp = std::pow(nn, -1.3);
    const std::vector<double> aa{nn * nn * pp};
    const double v = upper_F(aa, nn * nn * nn * pp * pp, nn, pp, 4, nn * nn * pp);
    CHECK(v / (std::pow(nn, 5.0 / 3) * pp) <= 10);
  }
}

TEST_CASE("chernoff helpers") {
  CHECK(chernoff(300, 0.1).upper == doctest::Approx(std::exp(-1.0)));
  CHECK(chernoff(300, 0.1).lower == doctest::Approx(std::exp(-1.5)));
  CHECK(chernoff(5, 1e-9).upper == doctest::Approx(1.0));
  CHECK(chernoff(5, 1e-9).lower == doctest::Approx(1.0));
  CHECK(chernoff_heavy(10, 1) == doctest::Approx(std::pow(2.0, -10)));
  CHECK_THROWS_AS(chernoff_heavy(5, 1), std::domain_error);
  CHECK_THROWS_AS(chernoff(1, 1.0), std::domain_error);
  CHECK_THROWS_AS(chernoff(1, 0.0), std::domain_error);
}

TEST_CASE("binomial tails stay under the chernoff bounds") {
  CounterRng rng(13);
  const int n = 1000;
  const int trials = 10000;
  for (double p : {0.05, 0.3}) {
    const double mu = n * p;
    std::vector<int> xs(trials);
    for (auto& x : xs) {
      x = 0;
      for (int i = 0; i < n; ++i) x += rng.bernoulli(p);
    }
    for (double d : {0.05, 0.1, 0.2, 0.3, 0.5}) {
      int up = 0, down = 0;
      for (int x : xs) {
        up += x >= (1 + d) * mu;
        down += x <= (1 - d) * mu;
      }
      const auto b = chernoff(mu, d);
      CHECK(static_cast<double>(up) / trials <= b.upper);
      CHECK(static_cast<double>(down) / trials <= b.lower);
    }
  }
}

TEST_CASE("regime parameters and window") {
  const auto r = RegimeParams::make(3000, 0.1, 4, 0.01, 0.05);
  CHECK(r.ell == 3);
  CHECK(r.tree_order == 34);
  CHECK(r.C == doctest::Approx(400));
  CHECK(r.f == doctest::Approx(f_dense(3000)));
  const auto [lo, hi] = verysparse_window(1e5, 4);
  CHECK(lo == doctest::Approx(std::pow(1e5, -4.0 / 3)));
  CHECK(hi == doctest::Approx(std::pow(1e5, -1.25)));
  CHECK(lo < std::pow(1e5, -1.3));
  CHECK(std::pow(1e5, -1.3) < hi);
}

TEST_CASE("toy optimizer analytic cases") {
  const auto free = toy_lagrange_opt(INFINITY, 4, 3);
  CHECK(free.objective == doctest::Approx(4).epsilon(1e-9));
  REQUIRE(free.x.size() == 4);
  for (double x : free.x) CHECK(x == doctest::Approx(1).epsilon(1e-9));

  const auto zero = toy_lagrange_opt(0, 9, 5);
  CHECK(zero.objective == doctest::Approx(3).epsilon(1e-9));
  CHECK(zero.x[0] == doctest::Approx(3));
  for (std::size_t t = 1; t < zero.x.size(); ++t) CHECK(zero.x[t] == 0);

  CHECK_THROWS_AS(toy_lagrange_opt(-1, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(toy_lagrange_opt(1, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(toy_lagrange_opt(1, 1, 0), std::invalid_argument);
}

TEST_CASE("toy optimizer solutions are feasible, KKT-shaped and unbeaten") {
  CounterRng rng(17);
  for (int inst = 0; inst < 20; ++inst) {
    const std::uint64_t m = 1 + rng.below(40);
    const double A = 0.1 + 50 * rng.uniform01();
    const double B = 0.1 + 20 * rng.uniform01();
    const auto s = toy_lagrange_opt(A, B, m);
    double lin = 0, sq = 0, sum = 0;
    for (std::size_t t = 0; t < s.x.size(); ++t) {
      CHECK(s.x[t] >= 0);
      lin += static_cast<double>(t) * s.x[t];
      sq += s.x[t] * s.x[t];
      sum += s.x[t];
      if (s.x[t] > 0) CHECK(std::abs(s.x[t] - (s.r - s.s * static_cast<double>(t))) <= 1e-6);
    }
    CHECK(lin <= A * (1 + 1e-9));
    CHECK(sq <= B * (1 + 1e-9));
    CHECK(sum == doctest::Approx(s.objective));
    for (int trial = 0; trial < 10000; ++trial) {
      std::vector<double> y(m + 1);
      double yl = 0, yq = 0, ys = 0;
      for (std::size_t t = 0; t <= m; ++t) {
        y[t] = rng.uniform01() * rng.uniform01();
        yl += static_cast<double>(t) * y[t];
        yq += y[t] * y[t];
      }
      const double scale = std::min(yl > 0 ? A / yl : INFINITY, std::sqrt(B / yq));
      for (double v : y) ys += v * scale;
      REQUIRE(ys <= s.objective * (1 + 1e-9));
    }
  }
}

TEST_CASE("toy optimizer against the cube-root magnitude and the general bound") {
  const double n = 1e4;
  const double p = std::pow(n, -1.3);
  const double A = n * n * p;
  const double B = n * n * n * p * p;
  const auto m = static_cast<std::uint64_t>(A);
  const auto s = toy_lagrange_opt(A, B, m);
  const double ref = std::cbrt(A * B);
  CHECK(s.objective <= 10 * ref);
  CHECK(s.objective >= ref / 10);
  const std::vector<double> a{A};
  CHECK(s.objective <= upper_F(a, B, n, p, 4, static_cast<double>(m)));
}
