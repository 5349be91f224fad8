#include "gaussint/core.hpp"
#include "gaussint/oracle.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace gaussint;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("gamma at simple points") {
  CHECK_THAT(gaussint::gamma(1.0), WithinRel(1.0, 1e-14));
  CHECK_THAT(gaussint::gamma(0.5), WithinRel(kSqrtPi, 1e-13));
  CHECK_THAT(gaussint::gamma(5.0), WithinRel(24.0, 1e-13));
  const cplx z = gaussint::gamma(cplx(0.5, 0.0));
  CHECK_THAT(z.real(), WithinRel(kSqrtPi, 1e-13));
  CHECK_THAT(z.imag(), WithinAbs(0.0, 1e-15));
}

TEST_CASE("gamma(4/3) equals the cubic integral by quadrature") {
  const auto q = integrate_1d([](double x) { return cplx(std::exp(-x * x * x)); }, 0.0, kInf, OracleBudget{});
  REQUIRE(q.converged);
  CHECK_THAT(gaussint::gamma(4.0 / 3.0), WithinRel(q.value.real(), 1e-10));
}

TEST_CASE("gamma accuracy on [0.1, 50] against log_gamma and factorials") {
  for (int n = 1; n <= 20; ++n) CHECK_THAT(gaussint::gamma(double(n)), WithinRel(factorial(n - 1), 1e-12));
  for (double s : {0.1, 0.7, 3.3, 17.5, 49.0}) {
    CHECK_THAT(std::log(gaussint::gamma(s)), WithinRel(log_gamma(s), 1e-12));
  }
}

TEST_CASE("gamma recurrence") {
  for (double s : {0.3, 1.7, 4.25}) {
    CHECK_THAT(gaussint::gamma(s + 1.0), WithinRel(s * gaussint::gamma(s), 1e-11));
  }
  const cplx s(1.3, 2.1);
  CHECK(std::abs(gaussint::gamma(s + 1.0) - s * gaussint::gamma(s)) < 1e-11 * std::abs(gaussint::gamma(s + 1.0)));
}

TEST_CASE("gamma rejects the left half plane") {
  CHECK_THROWS_AS(gaussint::gamma(0.0), DomainError);
  CHECK_THROWS_AS(gaussint::gamma(cplx(-0.5, 1.0)), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.0), DomainError);
}

TEST_CASE("reflection formula") {
  const auto [half_prod, half_ref] = reflection_check(0.5);
  CHECK_THAT(half_prod, WithinRel(kPi, 1e-13));
  CHECK_THAT(half_ref, WithinRel(kPi, 1e-13));
  for (double s : {0.25, 1.0 / 3.0}) {
    const auto [p, r] = reflection_check(s);
    CHECK_THAT(p, WithinRel(r, 1e-10));
  }
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.001, 0.999);
  for (int i = 0; i < 20; ++i) {
    const double s = u(rng);
    const double v = gaussint::gamma(s) * gaussint::gamma(1.0 - s) * std::sin(kPi * s) / kPi;
    CHECK_THAT(v, WithinRel(1.0, 1e-10));
  }
  CHECK_THROWS_AS(reflection_check(1.0), DomainError);
}

TEST_CASE("erf values") {
  CHECK(gaussint::erf(0.0) == 0.0);
  CHECK_THAT(gaussint::erf(40.0), WithinAbs(1.0, 1e-16));
  const auto q = integrate_1d([](double t) { return cplx(2.0 / kSqrtPi * std::exp(-t * t)); }, 0.0, 1.0, OracleBudget{});
  CHECK_THAT(gaussint::erf(1.0), WithinRel(q.value.real(), 1e-13));
  CHECK_THAT(gaussint::erf(cplx(1.0, 0.0)).real(), WithinRel(q.value.real(), 1e-12));
}

TEST_CASE("erf is odd on the real axis") {
  for (double x = 0.0; x <= 5.0; x += 0.125) CHECK_THAT(gaussint::erf(-x) + gaussint::erf(x), WithinAbs(0.0, 1e-13));
}

TEST_CASE("complex erf against the straight-path integral") {
  for (const cplx z : {cplx(0.5, 0.5), cplx(1.0, -2.0), cplx(-0.3, 3.0), cplx(2.5, 0.1)}) {
    const auto q = integrate_1d([z](double t) { return 2.0 / kSqrtPi * z * std::exp(-z * z * t * t); }, 0.0, 1.0,
                                OracleBudget{});
    CHECK(std::abs(gaussint::erf(z) - q.value) < 1e-11 * std::max(1.0, std::abs(q.value)));
  }
}

TEST_CASE("erfc and erfcx in the tail") {
  CHECK_THAT(gaussint::erfc(1.0), WithinRel(1.0 - gaussint::erf(1.0), 1e-13));
  CHECK_THAT(gaussint::erfc(10.0), WithinRel(2.088487583762544757e-45, 1e-11));
  CHECK_THAT(erfcx(30.0) * 30.0 * kSqrtPi, WithinRel(1.0, 1e-3));
  CHECK_THAT(erfcx(cplx(2.0, 0.0)).real(), WithinRel(erfcx(2.0), 1e-12));
}

TEST_CASE("agm") {
  CHECK(agm(3.0, 3.0) == 3.0);
  double a = std::sqrt(2.0), b = 1.0;
  for (int i = 0; i < 10; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  CHECK_THAT(agm(std::sqrt(2.0), 1.0), WithinRel(a, 1e-15));
  CHECK_THROWS_AS(agm(-1.0, 1.0), DomainError);
}

TEST_CASE("agm symmetry, monotonicity and homogeneity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int i = 0; i < 50; ++i) {
    const double a = u(rng), b = u(rng), t = u(rng);
    const double m = agm(a, b);
    CHECK_THAT(agm(b, a), WithinRel(m, 1e-15));
    CHECK(m >= std::min(a, b));
    CHECK(m <= std::max(a, b));
    CHECK(agm(a * 1.1, b) > m);
    CHECK(agm(a, b * 1.1) > m);
    CHECK_THAT(agm(t * a, t * b), WithinRel(t * m, 1e-13));
  }
}

TEST_CASE("symplectic relations") {
  const SymplecticSpace s2(2);
  Vec e(2);
  e << 1.0, 0.0;
  const auto [r1, r2, r3] = omega_relations(s2, e, e);
  CHECK(r1 == 0.0);
  CHECK(r2 == 0.0);
  CHECK(r3 == 0.0);

  const SymplecticSpace s(6);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 100; ++i) {
    Vec v(6), w(6);
    for (int k = 0; k < 6; ++k) {
      v(k) = nd(rng);
      w(k) = nd(rng);
    }
    const auto [a, b, c] = omega_relations(s, v, w);
    CHECK(std::abs(a) < 1e-12);
    CHECK(std::abs(b) < 1e-12);
    CHECK(std::abs(c) < 1e-12);
    CHECK_THAT(s.omega(v, w), WithinAbs(-s.omega(w, v), 1e-12));
    const cplx h = s.hermitian(v, w);
    CHECK_THAT(h.real(), WithinAbs(v.dot(w), 1e-12));
  }
  const auto [z1, z2, z3] = omega_relations(s, Vec::Zero(6), Vec::Ones(6));
  CHECK(z1 == 0.0);
  CHECK(z2 == 0.0);
  CHECK(z3 == 0.0);
  CHECK_THROWS_AS(SymplecticSpace(3), DomainError);
  CHECK_THROWS_AS(omega_relations(s, Vec::Zero(4), Vec::Zero(6)), DimensionError);
}

TEST_CASE("RealSpdMatrix validation") {
  Mat a(2, 2);
  a << 2.0, 1.0, 1.0, 2.0;
  const RealSpdMatrix m(a);
  CHECK_THAT(m.determinant(), WithinRel(3.0, 1e-14));
  CHECK((m.inverse() * a - Mat::Identity(2, 2)).norm() < 1e-14);
  Mat bad(2, 2);
  bad << 1.0, 2.0, 2.0, 1.0;
  CHECK_THROWS_AS(RealSpdMatrix(bad), DomainError);
  Mat asym(2, 2);
  asym << 1.0, 0.5, 0.0, 1.0;
  CHECK_THROWS_AS(RealSpdMatrix(asym), DomainError);
  const double d[2] = {1.0, 1e-13};
  CHECK_THROWS_AS(RealSpdMatrix::diagonal(d), DomainError);
  CHECK_THROWS_AS(RealSpdMatrix(Mat(2, 3)), DimensionError);
}

TEST_CASE("ComplexSymMatrix classification") {
  const ComplexSymMatrix a(CMat::Identity(2, 2) * cplx(1.0, -1.0));
  CHECK(a.real_part_psd());
  CHECK_FALSE(a.purely_imaginary());
  Mat a0(2, 2);
  a0 << 1.0, 0.0, 0.0, -2.0;
  const auto b = ComplexSymMatrix::from_imaginary(a0);
  CHECK(b.purely_imaginary());
  CHECK((b.a0() - a0).norm() < 1e-15);
  CHECK_THROWS_AS(ComplexSymMatrix(-CMat::Identity(1, 1)), DomainError);
  CHECK_THROWS_AS(ComplexSymMatrix(CMat::Zero(2, 2)), DomainError);
}

TEST_CASE("QuantumParam and TruncationControl") {
  const QuantumParam h(0.25);
  CHECK(h.k() == 4.0);
  CHECK(QuantumParam::from_k(2.0).hbar() == 0.5);
  CHECK_THROWS_AS(QuantumParam(0.0), DomainError);
  CHECK_THROWS_AS(QuantumParam(-1.0), DomainError);
  TruncationControl c;
  c.max_terms = 0;
  CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1.0);
  CHECK(factorial(10) == 3628800.0);
  CHECK(odd_double_factorial(0) == 1.0);
  CHECK(odd_double_factorial(5) == 945.0);
}
