#include "gaussint/oracle.hpp"

#include <catch_amalgamated.hpp>

#include <numeric>
#include <set>

using namespace gaussint;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("integrate_1d basics") {
  const OracleBudget b;
  auto q = integrate_1d([](double x) { return cplx(x); }, 0.0, 1.0, b);
  CHECK(q.converged);
  CHECK_THAT(q.value.real(), WithinRel(0.5, 1e-14));

  q = integrate_1d([](double x) { return cplx(std::exp(-x * x)); }, -kInf, kInf, b);
  CHECK_THAT(q.value.real(), WithinRel(kSqrtPi, 1e-12));

  q = integrate_1d([](double x) { return cplx(std::exp(-x * x * x)); }, 0.0, kInf, b);
  CHECK_THAT(q.value.real(), WithinRel(gaussint::gamma(4.0 / 3.0), 1e-10));

  q = integrate_1d([](double x) { return cplx(std::cos(x), std::sin(x)); }, 0.0, kPi, b);
  CHECK_THAT(q.value.real(), WithinAbs(0.0, 1e-13));
  CHECK_THAT(q.value.imag(), WithinRel(2.0, 1e-13));
}

TEST_CASE("integrate_1d reports an exhausted budget") {
  OracleBudget b;
  b.max_evaluations = 100;
  const auto q = integrate_1d([](double x) { return cplx(std::sin(1.0 / x)); }, 1e-6, 1.0, b);
  CHECK_FALSE(q.converged);
  CHECK_FALSE(q.flag.empty());
}

TEST_CASE("damped oscillatory quadrature") {
  const OracleBudget b;
  auto q = integrate_1d_oscillatory([](double x) { return std::exp(cplx(0.0, 0.5 * x * x)); }, default_damping(), b);
  const cplx fresnel = std::sqrt(2.0 * kPi) * std::exp(cplx(0.0, kPi / 4.0));
  CHECK(std::abs(q.value - fresnel) < 5e-4);

  q = integrate_1d_oscillatory([](double x) { return cplx(std::exp(-x * x)); }, default_damping(), b);
  CHECK_THAT(q.value.real(), WithinRel(kSqrtPi, 5e-5));

  // e^{i x^2/2 - x^2} = e^{-(1 - i/2) x^2}
  q = integrate_1d_oscillatory([](double x) { return std::exp(cplx(-1.0, 0.5) * x * x); }, default_damping(), b);
  CHECK(std::abs(q.value - std::sqrt(kPi / cplx(1.0, -0.5))) < 5e-5);
}

TEST_CASE("Neville extrapolation is exact on polynomials") {
  const double x[4] = {0.4, 0.3, 0.2, 0.1};
  cplx y[4];
  for (int i = 0; i < 4; ++i) y[i] = 2.0 - 3.0 * x[i] + x[i] * x[i] * x[i];
  const auto [v, err] = extrapolate_to_zero(x, y);
  CHECK_THAT(v.real(), WithinAbs(2.0, 1e-13));
  (void)err;
}

TEST_CASE("integrate_nd") {
  const OracleBudget b;
  auto q = integrate_nd([](const Vec& x) { return cplx(std::exp(-x.squaredNorm())); }, 2, b);
  CHECK_THAT(q.value.real(), WithinRel(kPi, 1e-9));

  q = integrate_nd([](const Vec& x) { return cplx(std::exp(-x(0) * x(0))); }, 1, b);
  const auto q1 = integrate_1d([](double x) { return cplx(std::exp(-x * x)); }, -kInf, kInf, b);
  CHECK_THAT(q.value.real(), WithinRel(q1.value.real(), 1e-13));

  q = integrate_nd([](const Vec& x) { return cplx(std::exp(-x.squaredNorm())); }, 4, b, "pi-squared");
  CHECK(std::abs(q.value.real() - kPi * kPi) <= q.abs_error_estimate);
}

TEST_CASE("product integrands factor") {
  const OracleBudget b;
  const auto f = [](double x) { return std::exp(-x * x) * (1.0 + 0.3 * x * x); };
  const auto g = [](double x) { return std::exp(-2.0 * x * x); };
  const auto h = [](double x) { return 1.0 / (1.0 + x * x) * std::exp(-x * x); };
  const auto qf = integrate_1d([&](double x) { return cplx(f(x)); }, -kInf, kInf, b);
  const auto qg = integrate_1d([&](double x) { return cplx(g(x)); }, -kInf, kInf, b);
  const auto qh = integrate_1d([&](double x) { return cplx(h(x)); }, -kInf, kInf, b);

  const auto q2 = integrate_nd([&](const Vec& x) { return cplx(f(x(0)) * g(x(1))); }, 2, b);
  const double p2 = qf.value.real() * qg.value.real();
  CHECK(std::abs(q2.value.real() - p2) <= std::max(1e-10 * p2, q2.abs_error_estimate));

  const auto q3 = integrate_nd([&](const Vec& x) { return cplx(f(x(0)) * g(x(1)) * h(x(2))); }, 3, b);
  const double p3 = p2 * qh.value.real();
  CHECK(std::abs(q3.value.real() - p3) <= std::max(1e-8 * p3, q3.abs_error_estimate));
}

TEST_CASE("Monte Carlo is reproducible for a fixed seed") {
  OracleBudget b;
  b.mc_samples = 20000;
  const auto f = [](const Vec& x) { return cplx(std::cos(x.sum())); };
  const auto a1 = integrate_nd(f, 5, b, "same");
  const auto a2 = integrate_nd(f, 5, b, "same");
  CHECK(a1.value == a2.value);
  CHECK(a1.abs_error_estimate == a2.abs_error_estimate);
  b.seed = 43;
  const auto a3 = integrate_nd(f, 5, b, "same");
  CHECK(a3.value != a1.value);
}

TEST_CASE("integrate_nd argument checks") {
  const OracleBudget b;
  const auto f = [](const Vec&) { return cplx(1.0); };
  CHECK_THROWS_AS(integrate_nd(f, 0, b), DimensionError);
  CHECK_THROWS_AS(integrate_nd(f, 9, b), DimensionError);
  OracleBudget bad;
  bad.max_evaluations = 0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("Gauss-Hermite rule") {
  const auto [x, w] = gauss_hermite_rule(20);
  CHECK_THAT(w.sum(), WithinRel(kSqrtPi, 1e-13));
  double m4 = 0.0;
  for (int i = 0; i < 20; ++i) m4 += w(i) * std::pow(x(i), 4);
  CHECK_THAT(m4, WithinRel(0.75 * kSqrtPi, 1e-12));
  const auto q = integrate_gauss_hermite_nd([](const Vec& v) { return cplx(std::exp(-v.squaredNorm())); }, 2, 20, 1.0);
  CHECK_THAT(q.value.real(), WithinRel(kPi, 1e-12));
}

TEST_CASE("principal value") {
  const OracleBudget b;
  auto q = principal_value([](double t) { return cplx(std::exp(-t * t) / t); }, 0.0, b);
  CHECK_THAT(q.value.real(), WithinAbs(0.0, 1e-10));
  q = principal_value([](double t) { return cplx(1.0 / t); }, 0.0, -1.0, 1.0, b);
  CHECK_THAT(q.value.real(), WithinAbs(0.0, 1e-10));
  // PV int e^{-t^2}/(t-1) dt = -pi e^{-1} erfi(1) = -2 sqrt(pi) * Dawson(1)
  q = principal_value([](double t) { return cplx(std::exp(-t * t) / (t - 1.0)); }, 1.0, b);
  CHECK(std::isfinite(q.value.real()));
  CHECK_THAT(q.value.real(), WithinRel(-2.0 * kSqrtPi * 0.5380795069127684, 1e-6));
}

TEST_CASE("sum_series") {
  TruncationControl c;
  auto s = sum_series([](int k) { return cplx(std::pow(0.5, k)); }, c, 1);
  CHECK_THAT(s.value.real(), WithinAbs(1.0, 1e-12));
  s = sum_series([](int) { return cplx(0.0); }, c);
  CHECK(s.value == cplx(0.0));
  s = sum_series([](int k) { return cplx((k % 2 ? -1.0 : 1.0) / factorial(k) * std::sqrt(kPi / k)); }, c, 1);
  CHECK(s.converged);
}

TEST_CASE("alternating series brackets its sum") {
  TruncationControl c;
  const auto term = [](int k) { return cplx((k % 2 ? -1.0 : 1.0) / (k + 1.0) / (k + 1.0)); };
  const double exact = kPi * kPi / 12.0;
  const auto s = sum_series(term, c);
  CHECK_THAT(s.value.real(), WithinAbs(exact, s.abs_error_estimate + 1e-12));
  double partial = 0.0;
  for (int k = 0; k < 30; ++k) {
    const double next = partial + term(k).real();
    if (k > 0) CHECK((std::min(partial, next) <= exact && exact <= std::max(partial, next)));
    partial = next;
  }
}

TEST_CASE("pairings") {
  const int two[2] = {3, 7};
  auto p = pairings(two);
  REQUIRE(p.size() == 1);
  CHECK(p[0][0] == std::pair(3, 7));

  const int four[4] = {1, 2, 3, 4};
  p = pairings(four);
  CHECK(p.size() == 3);
  std::set<Matching> distinct(p.begin(), p.end());
  CHECK(distinct.size() == 3);

  for (int m = 1; m <= 5; ++m) {
    std::vector<int> labels(2 * m);
    std::iota(labels.begin(), labels.end(), 0);
    CHECK(static_cast<double>(pairings(labels).size()) == odd_double_factorial(m));
  }
}

TEST_CASE("grassmann_expand_integral") {
  const double r = 3.0;
  const GrassmannTerm t{{1, 0}, -0.5 * r};
  const int measure[2] = {0, 1};
  CHECK(grassmann_expand_integral(std::span(&t, 1), measure, 2) == cplx(r / 2.0));
  CHECK(grassmann_expand_integral({}, measure, 2) == cplx(0.0));

  const GrassmannTerm d[2] = {{{1, 0}, -0.5 * 2.0}, {{3, 2}, -0.5 * 5.0}};
  const int full[4] = {2, 3, 0, 1};
  CHECK(grassmann_expand_integral(d, full, 4) == cplx(1.0 * 2.5));
}
