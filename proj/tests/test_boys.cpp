#include "gaussint/boys.hpp"
#include "gaussint/oracle.hpp"

#include <catch_amalgamated.hpp>

using namespace gaussint;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

struct Geometry {
  GaussianPrimitive g1;
  GaussianPrimitive g2;
  Vec3 c;
};

const Geometry kGeometries[] = {
    {{Vec3(0.0, 0.0, 0.0), 1.0}, {Vec3(1.0, 0.0, 0.0), 2.0}, Vec3(0.5, 0.5, 0.0)},
    {{Vec3(0.2, -0.3, 0.1), 0.8}, {Vec3(-0.4, 0.5, 0.6), 1.3}, Vec3(1.0, 0.0, -0.5)},
    {{Vec3(0.0, 0.0, 0.5), 2.0}, {Vec3(0.3, 0.0, -0.5), 0.5}, Vec3(0.0, 0.2, 0.0)},
};

OracleBudget space_budget() {
  OracleBudget b;
  b.target_tol = 1e-9;
  return b;
}

Vec3 to3(const Vec& x) { return Vec3(x(0), x(1), x(2)); }

double boys_quad(int n, double x) {
  OracleBudget b;
  b.target_tol = 1e-14;
  return integrate_1d([=](double t) { return cplx(std::exp(-x * t * t) * std::pow(t, 2 * n)); }, 0.0, 1.0, b)
      .value.real();
}

}  // namespace

TEST_CASE("Boys function values") {
  CHECK(boys_f(0, 0.0) == 1.0);
  for (int n = 0; n <= 20; ++n) CHECK_THAT(boys_f(n, 0.0), WithinRel(1.0 / (2 * n + 1), 1e-15));
  CHECK_THAT(boys_f(0, 1.0), WithinRel(0.5 * kSqrtPi * gaussint::erf(1.0), 1e-15));
  CHECK_THAT(boys_f(3, 2.5), WithinRel(boys_quad(3, 2.5), 1e-12));
  for (int n : {0, 1, 4, 9, 20}) {
    for (double x : {1e-8, 0.3, 7.0, 33.0, 80.0}) CHECK_THAT(boys_f(n, x), WithinRel(boys_quad(n, x), 1e-12));
  }
  CHECK(std::isfinite(boys_f(100, 500.0)));
  CHECK_THROWS_AS(boys_f(0, -1.0), DomainError);
  CHECK_THROWS_AS(boys_f(101, 1.0), DomainError);
}

TEST_CASE("Boys recursion consistency") {
  for (int n = 0; n <= 8; ++n) {
    for (double x : {0.1, 1.0, 10.0}) {
      const double up = (2.0 * x * boys_f(n + 1, x) + std::exp(-x)) / (2 * n + 1);
      CHECK_THAT(boys_f(n, x), WithinAbs(up, 1e-12));
    }
  }
}

TEST_CASE("Boys function is decreasing and bounded") {
  for (int n = 0; n <= 30; ++n) {
    double prev = kInf;
    for (double x = 0.0; x <= 60.0; x += 0.37) {
      const double f = boys_f(n, x);
      CHECK(f > 0.0);
      CHECK(f <= 1.0 / (2 * n + 1));
      CHECK(f < prev);
      CHECK(boys_f(n + 1, x) < f);
      prev = f;
    }
  }
}

TEST_CASE("Gaussian product rule") {
  const GaussianPrimitive a(Vec3(0.4, -1.0, 2.0), 1.7);
  const auto same = gaussian_product(a, a);
  CHECK(same.prefactor == 1.0);
  CHECK((same.center - a.center).norm() < 1e-15);

  const auto pg = gaussian_product({Vec3(0.0, 0.0, 0.0), 1.0}, {Vec3(2.0, 0.0, 0.0), 1.0});
  CHECK_THAT(pg.center.x(), WithinAbs(1.0, 1e-15));
  CHECK_THAT(pg.mu, WithinRel(0.5, 1e-15));
  CHECK_THAT(pg.prefactor, WithinRel(std::exp(-2.0), 1e-15));
  CHECK(pg.p == 2.0);

  const GaussianPrimitive g1(Vec3(0.1, 0.2, -0.3), 0.9), g2(Vec3(-0.5, 0.7, 0.4), 1.6);
  const auto p = gaussian_product(g1, g2);
  for (const Vec3& r : {Vec3(0.0, 0.0, 0.0), Vec3(1.0, -0.5, 0.25), Vec3(-2.0, 1.0, 0.5)}) {
    CHECK_THAT(g1(r) * g2(r), WithinRel(p.prefactor * std::exp(-p.p * (r - p.center).squaredNorm()), 1e-13));
  }
  CHECK_THROWS(GaussianPrimitive(Vec3::Zero(), 0.0));
}

TEST_CASE("closed forms at coincident centers") {
  const GaussianPrimitive g(Vec3::Zero(), 1.0);
  CHECK_THAT(overlap(g, g), WithinRel(std::pow(kPi / 2.0, 1.5), 1e-15));
  CHECK_THAT(kinetic(g, g), WithinRel(std::pow(kPi / 2.0, 1.5) * 1.5, 1e-15));
  CHECK_THAT(nuclear_attraction(g, g, Vec3::Zero()), WithinRel(kPi, 1e-15));
  CHECK_THAT(nuclear_attraction(g, g, Vec3(1.0, 0.0, 0.0)), WithinRel(kPi * boys_f(0, 2.0), 1e-15));
}

TEST_CASE("overlap, kinetic and nuclear attraction against 3-D quadrature") {
  for (const auto& geo : kGeometries) {
    const auto& [g1, g2, c] = geo;
    const auto s = integrate_nd([&](const Vec& x) { return cplx(g1(to3(x)) * g2(to3(x))); }, 3, space_budget());
    CHECK_THAT(overlap(g1, g2), WithinRel(s.value.real(), 1e-6));
    CHECK(overlap(g1, g2) == overlap(g2, g1));

    const double b = g2.exponent;
    const auto t = integrate_nd(
        [&](const Vec& x) {
          const Vec3 r = to3(x);
          return cplx(g1(r) * (3.0 * b - 2.0 * b * b * (r - g2.center).squaredNorm()) * g2(r));
        },
        3, space_budget());
    CHECK_THAT(kinetic(g1, g2), WithinRel(t.value.real(), 1e-6));

    const double lo[3] = {0.0, 0.0, 0.0};
    const double hi[3] = {kInf, kPi, 2.0 * kPi};
    const auto v = integrate_nd(
        [&](const Vec& sph) {
          const double st = std::sin(sph(1));
          const Vec3 r = c + sph(0) * Vec3(st * std::cos(sph(2)), st * std::sin(sph(2)), std::cos(sph(1)));
          return cplx(g1(r) * g2(r) * sph(0) * st);
        },
        lo, hi, space_budget());
    CHECK_THAT(nuclear_attraction(g1, g2, c), WithinRel(v.value.real(), 1e-6));
    CHECK(std::abs(nuclear_attraction_printed(g1, g2, c) - v.value.real()) > 1e-3 * v.value.real());
  }
}

TEST_CASE("translational invariance") {
  const Vec3 shift(1.7, -3.2, 0.45);
  for (const auto& [g1, g2, c] : kGeometries) {
    const GaussianPrimitive h1(g1.center + shift, g1.exponent), h2(g2.center + shift, g2.exponent);
    CHECK_THAT(overlap(h1, h2), WithinAbs(overlap(g1, g2), 1e-12));
    CHECK_THAT(kinetic(h1, h2), WithinAbs(kinetic(g1, g2), 1e-12));
    CHECK_THAT(nuclear_attraction(h1, h2, c + shift), WithinAbs(nuclear_attraction(g1, g2, c), 1e-12));
  }
}

TEST_CASE("dilation scaling") {
  const double lam = 2.0;
  for (const auto& [g1, g2, c] : kGeometries) {
    const GaussianPrimitive h1(lam * g1.center, g1.exponent / (lam * lam));
    const GaussianPrimitive h2(lam * g2.center, g2.exponent / (lam * lam));
    CHECK_THAT(overlap(h1, h2), WithinRel(lam * lam * lam * overlap(g1, g2), 1e-13));
    CHECK_THAT(kinetic(h1, h2), WithinRel(lam * kinetic(g1, g2), 1e-13));
    CHECK_THAT(nuclear_attraction(h1, h2, lam * c), WithinRel(lam * lam * nuclear_attraction(g1, g2, c), 1e-13));
  }
}
