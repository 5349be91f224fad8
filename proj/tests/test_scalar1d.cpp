#include "gaussint/scalar1d.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace gaussint;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double quad(const std::function<double(double)>& f, double lo, double hi) {
  const auto q = integrate_1d([&](double x) { return cplx(f(x)); }, lo, hi, OracleBudget{});
  REQUIRE(q.converged);
  return q.value.real();
}

}  // namespace

TEST_CASE("gauss_scaled") {
  CHECK_THAT(gauss_scaled(1.0), WithinRel(kSqrtPi, 1e-15));
  CHECK_THAT(gauss_scaled(4.0), WithinRel(kSqrtPi / 2.0, 1e-15));
  CHECK_THAT(gauss_scaled(0.37), WithinRel(quad([](double x) { return std::exp(-0.37 * x * x); }, -kInf, kInf), 1e-10));
  CHECK_THROWS_AS(gauss_scaled(0.0), DomainError);
}

TEST_CASE("gauss_complex_quadratic") {
  CHECK(std::abs(gauss_complex_quadratic(1.0, 0.0) - kSqrtPi) < 1e-15);
  CHECK(std::abs(gauss_complex_quadratic(1.0, 2.0) - std::exp(1.0) * kSqrtPi) < 1e-14);
  CHECK(std::abs(gauss_complex_quadratic(1.0, kI) - kSqrtPi * std::exp(-0.25)) < 1e-15);
}

TEST_CASE("gauss_complex_quadratic is analytic in eta") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const double h = 1e-5;
  for (int i = 0; i < 10; ++i) {
    const double a = 0.5 + std::abs(u(rng));
    const cplx eta(u(rng), u(rng));
    const cplx f = gauss_complex_quadratic(a, eta);
    const cplx dx = (gauss_complex_quadratic(a, eta + h) - gauss_complex_quadratic(a, eta - h)) / (2.0 * h);
    const cplx dy = (gauss_complex_quadratic(a, eta + kI * h) - gauss_complex_quadratic(a, eta - kI * h)) / (2.0 * h);
    CHECK(std::abs(dx + kI * dy) < 1e-6 * std::max(1.0, std::abs(f)));
  }
}

TEST_CASE("even moments") {
  CHECK_THAT(gauss_even_moment(0), WithinRel(kSqrtPi / 2.0, 1e-15));
  CHECK_THAT(gauss_even_moment(1), WithinRel(kSqrtPi / 4.0, 1e-15));
  CHECK_THAT(gauss_even_moment(2), WithinRel(3.0 * kSqrtPi / 8.0, 1e-15));
  CHECK_THAT(gauss_even_moment(1), WithinRel(quad([](double x) { return x * x * std::exp(-x * x); }, 0.0, kInf), 1e-12));
  CHECK_THAT(gauss_moment_scaled(2, 1.0), WithinRel(kSqrtPi / 2.0, 1e-14));
  CHECK_THAT(gauss_moment_scaled(4, 1.0), WithinRel(0.75 * kSqrtPi, 1e-14));
  CHECK_THAT(gauss_moment_scaled(2, 2.0), WithinRel(kSqrtPi / (2.0 * std::pow(2.0, 1.5)), 1e-14));
  CHECK_THROWS(gauss_moment_scaled(3, 1.0));
}

TEST_CASE("odd full-line moments vanish") {
  for (int k = 0; k < 4; ++k) {
    for (double a : {0.5, 1.0, 3.0}) {
      const auto q = integrate_1d([=](double x) { return cplx(std::pow(x, 2 * k + 1) * std::exp(-a * x * x)); }, -kInf,
                                  kInf, OracleBudget{});
      CHECK(std::abs(q.value) < 1e-12);
    }
  }
}

TEST_CASE("gauss_difference") {
  CHECK_THAT(gauss_difference(0.0, 1.0), WithinRel(kSqrtPi, 1e-15));
  CHECK_THAT(gauss_difference(1.0, 4.0), WithinRel(kSqrtPi, 1e-15));
  const double v = quad([](double x) { return -std::expm1(-1.0 * x * x) * std::exp(-2.0 * x * x) / (x * x); }, 0.0, kInf);
  CHECK_THAT(gauss_difference(2.0, 3.0), WithinRel(v, 1e-8));
  CHECK_THROWS(gauss_difference(2.0, 1.0));
}

TEST_CASE("hermite polynomials are monic with parity") {
  for (int m = 0; m <= 10; ++m) {
    const auto p = poly_pm(m, 1.7);
    REQUIRE(p.size() == static_cast<std::size_t>(m + 1));
    CHECK(p.back() == 1.0);
    for (int j = 0; j <= m; ++j) {
      if ((m - j) % 2 != 0) CHECK(p[j] == 0.0);
    }
  }
  const auto p1 = poly_pm(1, 1.0);
  CHECK(p1 == std::vector<double>{0.0, 1.0});
}

TEST_CASE("hermite_moment") {
  const double k = 2.0, xi = 0.4;
  const cplx m0 = hermite_moment(0, k, xi);
  CHECK(std::abs(m0 - std::sqrt(2.0 * kPi / k) * std::exp(-xi * xi / (2.0 * k))) < 1e-15);
  const cplx m1 = hermite_moment(1, 1.0, 0.7);
  CHECK(std::abs(m1 - std::sqrt(2.0 * kPi) * (-kI) * 0.7 * std::exp(-0.245)) < 1e-15);
  const auto q = integrate_1d(
      [](double x) { return x * x * x * std::exp(cplx(-0.5 * x * x, -0.7 * x)); }, -kInf, kInf, OracleBudget{});
  CHECK(std::abs(hermite_moment(3, 1.0, 0.7) - q.value) < 1e-11);
}

TEST_CASE("stretched exponential") {
  CHECK_THAT(stretched_exponential(2.0), WithinRel(kSqrtPi / 2.0, 1e-13));
  CHECK_THAT(stretched_exponential(3.0), WithinRel(gaussint::gamma(4.0 / 3.0), 1e-15));
  CHECK_THAT(stretched_exponential(5.0), WithinRel(quad([](double x) { return std::exp(-std::pow(x, 5)); }, 0.0, kInf), 1e-10));
  CHECK_THROWS_AS(stretched_exponential(0.5), DomainError);
}

TEST_CASE("nested exponential") {
  TruncationControl one;
  one.max_terms = 1;
  CHECK_THAT(nested_exponential(one).value, WithinRel(-kSqrtPi, 1e-15));
  const auto s = nested_exponential(TruncationControl{});
  CHECK(s.converged);
  const double v = quad([](double x) { return std::expm1(-std::exp(-x * x)); }, -kInf, kInf);
  CHECK_THAT(s.value, WithinRel(v, 1e-8));
}

TEST_CASE("rewrite integrands") {
  const auto ids = rewrite_integrands();
  REQUIRE(ids.size() == 3);
  for (const auto& r : ids) CHECK(r.claimed == cplx(kSqrtPi));
  const auto& self_power = ids[1];
  REQUIRE(self_power.id == "self_power");
  const auto q = integrate_1d(self_power.integrand, self_power.lower, self_power.upper, OracleBudget{});
  CHECK(std::abs(q.value - kSqrtPi) < 1e-9);
  const auto& gd = ids[2];
  const auto g = integrate_1d(gd.integrand, gd.lower, gd.upper, OracleBudget{});
  CHECK(g.converged);
  CHECK(std::abs(g.value - kSqrtPi) > 0.5);
}

TEST_CASE("mills ratio") {
  CHECK_THAT(mills_psi(1.0), WithinRel(std::exp(1.0) * 0.5 * kSqrtPi * gaussint::erfc(1.0), 1e-13));
  CHECK_THAT(mills_psi(30.0), WithinRel(1.0 / 60.0, 1e-3));
  CHECK_THAT(mills_psi(24.99), WithinRel(mills_psi(25.01), 1e-3));
}

TEST_CASE("convergent polynomials") {
  // P_n(x) = e^{-x^2} d^n/dx^n e^{x^2}
  const std::vector<IntPoly> expected = {{1}, {0, 2}, {2, 0, 4}, {0, 12, 0, 8}, {12, 0, 48, 0, 16},
                                         {0, 120, 0, 160, 0, 32}};
  for (int n = 0; n <= 5; ++n) CHECK(convergent_pair(n).p == expected[n]);
}

TEST_CASE("convergent determinant is exact") {
  for (int n = 0; n <= 8; ++n) {
    const auto d = cf_determinant(n);
    BigInt want = 1;
    for (int k = 1; k <= n; ++k) want *= -2 * k;
    REQUIRE(d.size() == 1);
    CHECK(d[0] == want);
    CHECK(eval_poly(d, 1.3) == want.convert_to<double>());
  }
}

TEST_CASE("convergents bracket the Mills ratio") {
  for (double a : {0.5, 1.0, 2.0}) {
    const double psi = mills_psi(a);
    for (int n = 1; n < 20; ++n) {
      const double e0 = cf_convergent(n, a) - psi;
      const double e1 = cf_convergent(n + 1, a) - psi;
      if (std::abs(e0) > 1e-14 && std::abs(e1) > 1e-14) CHECK(e0 * e1 < 0.0);
    }
  }
}

TEST_CASE("convergent 30 at a = 1 is not within 1e-10") {
  // Slow convergence at a = 1; recorded as an unmet target, the gap sits near 7.6e-7.
  const double err = std::abs(cf_convergent(30, 1.0) - mills_psi(1.0));
  CHECK(err > 1e-10);
  CHECK(err < 1e-5);
  CHECK(std::abs(cf_convergent(30, 4.0) - mills_psi(4.0)) < 1e-10);
}

TEST_CASE("plasma dispersion function") {
  CHECK(std::abs(plasma_d(cplx(0.0, 1e-12)) - kI * kSqrtPi) < 1e-10);
  for (const cplx x : {cplx(0.0, 1.0), cplx(0.5, 0.5), cplx(0.0, 2.0)}) {
    const cplx q = plasma_incomplete(-kInf, x);
    CHECK(std::abs(plasma_d(x) - q) < 1e-7);
  }
  CHECK(std::abs(plasma_ode_residual(0.3, cplx(0.2, 0.8))) < 1e-5);
  CHECK_THROWS_AS(plasma_d(cplx(1.0, -1.0)), DomainError);
}
