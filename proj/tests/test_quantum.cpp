#include "gaussint/quantum.hpp"
#include "gaussint/oracle.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace gaussint;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

OracleBudget tight() {
  OracleBudget b;
  b.target_tol = 1e-11;
  return b;
}

LaplaceAmplitude constant_amplitude() {
  return {[](const Vec&) { return 1.0; }, [](const Vec& u) { return Vec(Vec::Zero(u.size())); },
          [](const Vec& u) { return Mat(Mat::Zero(u.size(), u.size())); }};
}

LaplaceAmplitude quadratic_amplitude() {
  return {[](const Vec& u) { return 1.0 + u.squaredNorm(); }, [](const Vec& u) { return Vec(2.0 * u); },
          [](const Vec& u) { return Mat(2.0 * Mat::Identity(u.size(), u.size())); }};
}

}  // namespace

TEST_CASE("g1 at w = 0 and against quadrature") {
  const QuantumParam h(0.7);
  CHECK(std::abs(g1_integral(Vec::Zero(2), h) - 2.0 * kPi * 0.7) < 1e-14);
  const Vec w = vec2(1.0, 0.0);
  const SymplecticSpace s(2);
  const cplx closed = g1_integral(w, QuantumParam(1.0));
  CHECK(std::abs(closed - 2.0 * kPi * std::exp(-0.5)) < 1e-14);
  const auto q = integrate_nd([&](const Vec& v) { return std::exp(-kI * g1_exponent(s, v, w)); }, 2, tight());
  CHECK(std::abs(closed - q.value) < 1e-9);
}

TEST_CASE("g1 modulus bound") {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> nd;
  for (double hb : {0.3, 1.0, 2.5}) {
    const QuantumParam h(hb);
    const double bound = std::pow(2.0 * kPi * hb, 1.0);
    CHECK_THAT(std::abs(g1_integral(Vec::Zero(2), h)), WithinRel(bound, 1e-14));
    for (int i = 0; i < 20; ++i) {
      const Vec w = vec2(nd(rng), nd(rng));
      CHECK(std::abs(g1_integral(w, h)) < bound);
    }
  }
}

TEST_CASE("g2 against quadrature") {
  const SymplecticSpace s(2);
  const Vec w = vec2(0.3, -0.5), u = vec2(0.1, 0.4);
  const QuantumParam h(0.8);
  const auto q = integrate_nd([&](const Vec& v) { return std::exp(-kI / h.hbar() * g2_exponent(s, v, w, u)); }, 2,
                             tight());
  CHECK(std::abs(g2_integral(w, u, h) - q.value) < 1e-9);
}

TEST_CASE("g3 composition structure") {
  const SymplecticSpace s(2);
  std::mt19937_64 rng(43);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 5; ++i) {
    const Vec v = vec2(nd(rng), nd(rng)), u = vec2(nd(rng), nd(rng));
    const QuantumParam h(0.5 + 0.3 * i);
    const cplx want = kPi * h.hbar() * std::exp(-kI / h.hbar() * g1_exponent(s, v, u));
    CHECK(std::abs(g3_integral(v, u, h) - want) < 1e-13 * std::abs(want));
    if (i < 2) {
      const auto q = integrate_nd([&](const Vec& w) { return std::exp(-kI / h.hbar() * g3_exponent(s, v, w, u)); }, 2,
                                 tight());
      CHECK(std::abs(g3_integral(v, u, h) - q.value) <= std::max(1e-9 * std::abs(want), q.abs_error_estimate));
    }
  }
}

TEST_CASE("g4 at theta = pi/2 is a product of Gaussians") {
  for (int n = 1; n <= 3; ++n) {
    const QuantumParam h(0.6);
    const cplx v = g4_integral(kPi / 2.0, n, h);
    CHECK_THAT(v.real(), WithinRel(std::pow(2.0, 0.5 * n) * std::pow(kPi * 0.6, n), 1e-13));
    CHECK_THAT(v.imag(), WithinAbs(0.0, 1e-13));
  }
}

TEST_CASE("g4 against 2-D quadrature, printed phase conjugated") {
  const double theta = kPi / 3.0;
  const auto q = integrate_nd(
      [&](const Vec& x) { return std::exp(-kI * g4_exponent(x.head(1), x.tail(1), theta)); }, 2, tight());
  const cplx v = g4_integral(theta, 1, QuantumParam(1.0));
  CHECK(std::abs(v - q.value) < 1e-6 * std::abs(v));
  CHECK(std::abs(g4_printed(theta, 1, QuantumParam(1.0)) - std::conj(v)) < 1e-13);
  CHECK_THROWS_AS(g4_integral(0.0, 1, QuantumParam(1.0)), DomainError);
}

TEST_CASE("g4 is continuous at theta = pi/2") {
  const QuantumParam h(1.0);
  for (int n = 1; n <= 2; ++n) {
    const cplx mid = g4_integral(kPi / 2.0, n, h);
    for (double d : {-1e-6, 1e-6}) CHECK(std::abs(g4_integral(kPi / 2.0 + d, n, h) - mid) < 1e-4 * std::abs(mid));
  }
}

TEST_CASE("g5") {
  Vec z(1);
  z << 0.4;
  const cplx fresnel = kSqrtPi * std::exp(kI * kPi / 4.0);
  CHECK(std::abs(g5_integral(z, z, QuantumParam(1.0)) - fresnel) < 1e-14);
  CHECK(std::abs(g5_printed(z, z, QuantumParam(1.0)) - std::sqrt(2.0 * kPi) * std::exp(kI * kPi / 4.0)) < 1e-14);

  Vec w(1), u(1);
  w << 2.0;
  u << 0.0;
  const auto q = integrate_1d_oscillatory(
      [&](double x) {
        Vec v(1);
        v << x;
        return std::exp(kI * g5_exponent(u, v, w));
      },
      default_damping(), OracleBudget{});
  CHECK(std::abs(g5_integral(w, u, QuantumParam(1.0)) - q.value) < 5e-4 * std::abs(q.value));
  CHECK(std::abs(g5_printed(w, u, QuantumParam(1.0)) - q.value) > 0.1);
}

TEST_CASE("laplace expansion of a constant amplitude") {
  for (int n = 1; n <= 3; ++n) {
    const auto e = laplace_expand(constant_amplitude(), n, QuantumParam(0.3), 2);
    REQUIRE(e.terms.size() == 3);
    CHECK_THAT(e.value(), WithinRel(std::pow(2.0 * kPi * 0.3, 0.5 * n), 1e-14));
    CHECK(e.terms[1].second == 0.0);
    CHECK(e.terms[2].second == 0.0);
    CHECK(e.terms[0].first == 0.5 * n);
  }
}

TEST_CASE("laplace expansion is exact for a quadratic amplitude") {
  for (double hb : {0.1, 0.05, 0.025}) {
    const auto e = laplace_expand(quadratic_amplitude(), 1, QuantumParam(hb), 2);
    const auto q = integrate_1d([&](double x) { return cplx((1.0 + x * x) * std::exp(-x * x / (2.0 * hb))); }, -kInf,
                                kInf, tight());
    CHECK_THAT(e.value(), WithinRel(q.value.real(), 1e-10));
    // The order-1 residual is the whole order-2 term, proportional to hbar^{3/2}.
    const double resid = q.value.real() - e.value(1);
    CHECK_THAT(resid, WithinRel(std::sqrt(2.0 * kPi) * std::pow(hb, 1.5), 1e-9));
  }
}

TEST_CASE("source derivative polynomials") {
  const auto h0 = source_derivative_poly(0, 2.0);
  CHECK(h0 == std::vector<double>{1.0});
  const auto h2 = source_derivative_poly(2, 2.0);
  // d^2/dJ^2 e^{J^2/4} = (1/2 + J^2/4) e^{J^2/4}
  REQUIRE(h2.size() == 3);
  CHECK_THAT(h2[0], WithinRel(0.5, 1e-15));
  CHECK(h2[1] == 0.0);
  CHECK_THAT(h2[2], WithinRel(0.25, 1e-15));
}

TEST_CASE("perturbed gauss") {
  const TruncationControl c;
  const auto zero = perturbed_gauss(1.3, 0.0, 2, 0.7, c);
  CHECK_THAT(zero.value, WithinRel(std::sqrt(2.0 * kPi / 1.3) * std::exp(0.49 / 2.6), 1e-14));

  const auto k2 = perturbed_gauss(1.0, -0.4, 2, 0.3, c);
  CHECK_THAT(k2.value, WithinRel(std::sqrt(2.0 * kPi / 1.4) * std::exp(0.09 / 2.8), 1e-8));

  const auto k4 = perturbed_gauss(1.0, -0.05, 4, 0.0, c);
  const auto q = integrate_1d([](double x) { return cplx(std::exp(-0.5 * x * x - 0.05 * std::pow(x, 4) / 24.0)); },
                              -kInf, kInf, OracleBudget{});
  CHECK_THAT(k4.value, WithinRel(q.value.real(), 1e-6));
  CHECK_FALSE(k4.formal);
  CHECK(perturbed_gauss(1.0, 0.05, 4, 0.0, c).formal);
}

TEST_CASE("k = 2 series equals the resummed Gaussian for |lambda| < a/2") {
  const TruncationControl c;
  for (double a : {0.8, 1.0, 2.5}) {
    for (double frac : {-0.45, -0.2, 0.1, 0.3, 0.45}) {
      for (double j : {0.0, 0.6}) {
        const double lambda = frac * a;
        const auto s = perturbed_gauss(a, lambda, 2, j, c);
        const double want = std::sqrt(2.0 * kPi / (a - lambda)) * std::exp(j * j / (2.0 * (a - lambda)));
        CHECK(s.converged);
        CHECK_THAT(s.value, WithinRel(want, 1e-8));
      }
    }
  }
}
