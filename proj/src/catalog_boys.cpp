#include "catalog_detail.hpp"

#include "gaussint/boys.hpp"

#include <array>

namespace gaussint::detail {

namespace {

struct Geometry {
  GaussianPrimitive g1;
  GaussianPrimitive g2;
  Vec3 c;
};

const std::array<Geometry, 4>& geometries() {
  static const std::array<Geometry, 4> g = {
      Geometry{{Vec3(0.0, 0.0, 0.0), 1.0}, {Vec3(1.0, 0.0, 0.0), 2.0}, Vec3(0.5, 0.5, 0.0)},
      Geometry{{Vec3(0.2, -0.3, 0.1), 0.8}, {Vec3(-0.4, 0.5, 0.6), 1.3}, Vec3(1.0, 0.0, -0.5)},
      Geometry{{Vec3(0.0, 0.0, 0.5), 2.0}, {Vec3(0.3, 0.0, -0.5), 0.5}, Vec3(0.0, 0.2, 0.0)},
      Geometry{{Vec3(0.0, 0.0, 0.0), 1.0}, {Vec3(0.0, 0.0, 0.0), 1.0}, Vec3(1.0, 0.0, 0.0)},
  };
  return g;
}

const Geometry& geometry(const Params& p) { return geometries().at(get_int(p, "geometry")); }

Vec3 to3(const Vec& x) { return Vec3(x(0), x(1), x(2)); }

OracleBudget space_budget(const OracleBudget& b) { return with_tol(b, 1e-9); }

IdentityRecord boys_function_record() {
  IdentityRecord r;
  r.id = "boys/boys_function";
  r.summary = "F_n(x) = int_0^1 e^{-x t^2} t^{2n} dt";
  r.anchor = "Boys function; erf for F_0, downward recursion for higher orders";
  r.params = {int_param("n", 0, 100), real_param("x", 0.0, kInf, 0.0, 60.0)};
  r.grid = {{{"n", 0}, {"x", 1.0}}, {{"n", 3}, {"x", 2.5}}, {{"n", 5}, {"x", 10.0}}, {{"n", 1}, {"x", 0.1}},
            {{"n", 2}, {"x", 80.0}}};
  r.tol = 1e-12;
  r.covers = {"boys_f"};
  r.closed_form = [](const Params& p) { return cplx(boys_f(get_int(p, "n"), get(p, "x"))); };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const int n = get_int(p, "n");
    const double x = get(p, "x");
    return integrate_1d([=](double t) { return cplx(std::exp(-x * t * t) * std::pow(t, 2 * n)); }, 0.0, 1.0, b);
  };
  return r;
}

IdentityRecord product_record() {
  IdentityRecord r;
  r.id = "boys/gaussian_product";
  r.summary = "e^{-a x_A^2} e^{-b x_B^2} = e^{-(ab/(a+b)) X_AB^2} e^{-p x_P^2}";
  r.anchor = "Gaussian product rule with the reduced exponent";
  r.params = {positive_param("a", 0.2, 3.0), positive_param("b", 0.2, 3.0), real_param("A", -kInf, kInf, -2.0, 2.0),
              real_param("B", -kInf, kInf, -2.0, 2.0), real_param("x", -kInf, kInf, -2.0, 2.0)};
  r.grid = {{{"a", 1.0}, {"b", 1.0}, {"A", 0.0}, {"B", 2.0}, {"x", 0.7}},
            {{"a", 0.5}, {"b", 2.0}, {"A", -1.0}, {"B", 0.5}, {"x", 0.0}},
            {{"a", 3.0}, {"b", 0.3}, {"A", 0.4}, {"B", 0.4}, {"x", -1.2}}};
  r.tol = 1e-13;
  r.covers = {"gaussian_product"};
  r.closed_form = [](const Params& p) {
    const GaussianPrimitive g1(Vec3(get(p, "A"), 0.0, 0.0), get(p, "a"));
    const GaussianPrimitive g2(Vec3(get(p, "B"), 0.0, 0.0), get(p, "b"));
    const auto pg = gaussian_product(g1, g2);
    const double d = get(p, "x") - pg.center.x();
    return cplx(pg.prefactor * std::exp(-pg.p * d * d));
  };
  r.oracle = [](const Params& p, const OracleBudget&) {
    const double x = get(p, "x");
    const double da = x - get(p, "A");
    const double db = x - get(p, "B");
    return exact(std::exp(-get(p, "a") * da * da) * std::exp(-get(p, "b") * db * db));
  };
  return r;
}

std::vector<Params> geometry_grid(bool with_coincident) {
  std::vector<Params> g = {{{"geometry", 0}}, {{"geometry", 1}}, {{"geometry", 2}}};
  if (with_coincident) g.push_back({{"geometry", 3}});
  return g;
}

IdentityRecord overlap_record() {
  IdentityRecord r;
  r.id = "boys/overlap";
  r.summary = "int e^{-a r_A^2} e^{-b r_B^2} dr = (pi/(a+b))^{3/2} e^{-ab S/(a+b)}";
  r.anchor = "overlap of two s-type Gaussians";
  r.params = {int_param("geometry", 0, 3)};
  r.grid = geometry_grid(true);
  r.tol = 1e-7;
  r.covers = {"overlap", "gaussian_product"};
  r.closed_form = [](const Params& p) {
    const auto& g = geometry(p);
    return cplx(overlap(g.g1, g.g2));
  };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const auto& g = geometry(p);
    return integrate_nd([&](const Vec& x) { return cplx(g.g1(to3(x)) * g.g2(to3(x))); }, 3, space_budget(b));
  };
  return r;
}

IdentityRecord kinetic_record() {
  IdentityRecord r;
  r.id = "boys/kinetic";
  r.summary = "int e^{-a r_A^2} (-Laplacian/2) e^{-b r_B^2} dr = (pi/p)^{3/2} (3ab/p - 2 S a^2 b^2/p^2) e^{-ab S/p}";
  r.anchor = "kinetic-energy integral of two s-type Gaussians";
  r.params = {int_param("geometry", 0, 3)};
  r.grid = geometry_grid(true);
  r.tol = 1e-7;
  r.covers = {"kinetic"};
  r.closed_form = [](const Params& p) {
    const auto& g = geometry(p);
    return cplx(kinetic(g.g1, g.g2));
  };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const auto& g = geometry(p);
    const double bb = g.g2.exponent;
    return integrate_nd(
        [&](const Vec& x) {
          const Vec3 r3 = to3(x);
          const double rb2 = (r3 - g.g2.center).squaredNorm();
          return cplx(g.g1(r3) * (3.0 * bb - 2.0 * bb * bb * rb2) * g.g2(r3));
        },
        3, space_budget(b));
  };
  return r;
}

// Spherical coordinates about the nucleus absorb the 1/r_C singularity.
QuadResult coulomb_oracle(const Geometry& g, const OracleBudget& b) {
  const double lower[3] = {0.0, 0.0, 0.0};
  const double upper[3] = {kInf, kPi, 2.0 * kPi};
  return integrate_nd(
      [&](const Vec& s) {
        const double r = s(0);
        const double st = std::sin(s(1));
        const Vec3 x = g.c + r * Vec3(st * std::cos(s(2)), st * std::sin(s(2)), std::cos(s(1)));
        return cplx(g.g1(x) * g.g2(x) * r * st);
      },
      lower, upper, space_budget(b));
}

IdentityRecord nuclear_record(bool printed) {
  IdentityRecord r;
  r.id = printed ? "boys/nuclear_attraction_printed" : "boys/nuclear_attraction";
  r.summary = printed ? "printed right-hand side (2 pi/p) F_0(p R_CP^2), without the factor e^{-mu S}"
                      : "int e^{-a r_A^2} e^{-b r_B^2} / r_C dr = (2 pi/p) F_0(p R_CP^2) e^{-ab S/p}";
  r.anchor = printed ? "Coulomb integral as printed; the product prefactor is dropped, exact only when A = B"
                     : "Coulomb integral through the Gaussian representation of 1/r";
  r.params = {int_param("geometry", 0, 3)};
  r.grid = geometry_grid(!printed);
  r.tol = 1e-7;
  r.expected = printed ? Expected::FailTolerated : Expected::Pass;
  r.covers = {"nuclear_attraction", "boys_f"};
  r.closed_form = [printed](const Params& p) {
    const auto& g = geometry(p);
    return cplx(printed ? nuclear_attraction_printed(g.g1, g.g2, g.c) : nuclear_attraction(g.g1, g.g2, g.c));
  };
  r.oracle = [](const Params& p, const OracleBudget& b) { return coulomb_oracle(geometry(p), b); };
  return r;
}

IdentityRecord coulomb_identity_record() {
  IdentityRecord r;
  r.id = "boys/inverse_r";
  r.summary = "(1/sqrt pi) int e^{-r^2 t^2} dt = 1/r";
  r.anchor = "Gaussian representation of the Coulomb potential";
  r.params = {positive_param("r", 0.1, 10.0)};
  r.grid = {{{"r", 0.5}}, {{"r", 2.0}}, {{"r", 5.0}}};
  r.covers = {"nuclear_attraction"};
  r.closed_form = [](const Params& p) { return cplx(1.0 / get(p, "r")); };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const double rr = get(p, "r");
    auto q = integrate_1d([rr](double t) { return cplx(std::exp(-rr * rr * t * t) / kSqrtPi); }, -kInf, kInf, b);
    return q;
  };
  return r;
}

}  // namespace

void register_boys(std::vector<IdentityRecord>& out) {
  out.push_back(boys_function_record());
  out.push_back(product_record());
  out.push_back(overlap_record());
  out.push_back(kinetic_record());
  out.push_back(nuclear_record(false));
  out.push_back(nuclear_record(true));
  out.push_back(coulomb_identity_record());
}

}  // namespace gaussint::detail
