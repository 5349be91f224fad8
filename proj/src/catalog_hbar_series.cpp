#include "catalog_detail.hpp"

#include "gaussint/hbar_series.hpp"

namespace gaussint::detail {

namespace {

std::vector<Params> hbar_grid() { return {{{"hbar", 0.5}}, {{"hbar", 1.0}}, {{"hbar", 2.0}}}; }

std::optional<std::string> hbar_floor(const Params& p) {
  if (get(p, "hbar") < 0.05) return "series converges too slowly for hbar < 0.05";
  return std::nullopt;
}

IdentityRecord quartic_record() {
  IdentityRecord r;
  r.id = "hbar-series/quartic";
  r.summary = "int e^{-x^4/4hbar + x^2/2hbar} dx = (hbar^{1/4}/sqrt 2) sum Gamma(n/2 + 1/4) / (hbar^{n/2} n!)";
  r.anchor = "hbar-series of the quartic double well";
  r.params = {positive_param("hbar", 0.05, 3.0)};
  r.grid = hbar_grid();
  r.tol = 1e-7;
  r.covers = {"quartic_series"};
  r.precondition = hbar_floor;
  r.closed_form = [](const Params& p) { return cplx(quartic_series(QuantumParam(get(p, "hbar")), {}).value); };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const double h = get(p, "hbar");
    return integrate_1d([h](double x) { return cplx(std::exp((-0.25 * x * x * x * x + 0.5 * x * x) / h)); }, -kInf,
                        kInf, b);
  };
  return r;
}

IdentityRecord cubic_record() {
  IdentityRecord r;
  r.id = "hbar-series/cubic";
  r.summary = "int_0^inf e^{-x^3/3hbar + x^2/2hbar} dx = sum 3^{2n/3-2/3} hbar^{2n/3+1/3} Gamma(2n/3+1/3) / ((2hbar)^n n!)";
  r.anchor = "hbar-series of the cubic exponent on the half line";
  r.params = {positive_param("hbar", 0.05, 3.0)};
  r.grid = hbar_grid();
  r.tol = 1e-7;
  r.covers = {"cubic_series"};
  r.precondition = hbar_floor;
  r.closed_form = [](const Params& p) { return cplx(cubic_series(QuantumParam(get(p, "hbar")), {}).value); };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const double h = get(p, "hbar");
    return integrate_1d([h](double x) { return cplx(std::exp((-x * x * x / 3.0 + 0.5 * x * x) / h)); }, 0.0, kInf, b);
  };
  return r;
}

// Gamma(1/m) = m int_0^inf e^{-x^m} dx
QuadResult gamma_inverse_oracle(int m, const OracleBudget& b) {
  auto q = integrate_1d([m](double x) { return cplx(std::exp(-std::pow(x, m))); }, 0.0, kInf, b);
  q.value *= m;
  q.abs_error_estimate *= m;
  return q;
}

IdentityRecord gamma_quarter_record() {
  IdentityRecord r;
  r.id = "hbar-series/gamma_quarter_agm";
  r.summary = "Gamma(1/4) = (2 pi)^{3/4} / agm(sqrt 2, 1)^{1/2}";
  r.anchor = "lemniscate relation between Gamma(1/4) and the arithmetic-geometric mean";
  r.grid = {{}};
  r.tol = 1e-10;
  r.covers = {"gamma_quarter_agm"};
  r.closed_form = [](const Params&) { return cplx(gamma_quarter_agm().second); };
  r.oracle = [](const Params&, const OracleBudget& b) { return gamma_inverse_oracle(4, b); };
  return r;
}

IdentityRecord gamma_third_record() {
  IdentityRecord r;
  r.id = "hbar-series/gamma_third_agm";
  r.summary = "Gamma(1/3) = pi^{1/3} 2^{-2/9} 3^{5/12} / agm(2, sqrt(2 + sqrt 3))^{1/3} as printed";
  r.anchor = "AGM expression for Gamma(1/3); the printed constants do not reproduce Gamma(1/3)";
  r.grid = {{}};
  r.tol = 1e-10;
  r.expected = Expected::FailTolerated;
  r.covers = {"gamma_third_agm"};
  r.closed_form = [](const Params&) { return cplx(gamma_third_agm().second); };
  r.oracle = [](const Params&, const OracleBudget& b) { return gamma_inverse_oracle(3, b); };
  return r;
}

// Gamma(z) = 2 int_0^inf s^{2z-1} e^{-s^2} ds, z >= 1/2
QuadResult gamma_oracle(double z, const OracleBudget& b) {
  return integrate_1d([z](double s) { return cplx(2.0 * std::pow(s, 2.0 * z - 1.0) * std::exp(-s * s)); }, 0.0, kInf,
                      b);
}

IdentityRecord product_record() {
  IdentityRecord r;
  r.id = "hbar-series/gamma_product_ratio";
  r.summary = "prod_{k<=K} k (x+k-1) / ((k-b)(x+k-1+b)) / Gamma(1-b) -> Gamma(x+b) / Gamma(x)";
  r.anchor = "infinite-product form of the Gamma values in the cubic series, truncated at K = 10^4";
  r.params = {positive_param("x", 0.5, 6.0), real_param("b", 0.0, 1.0, 0.1, 0.9, true, false),
              int_param("K", 1, 10'000'000)};
  r.grid = {{{"x", 2.0 / 3.0}, {"b", 1.0 / 3.0}, {"K", 10'000}},
            {{"x", 4.0 / 3.0}, {"b", 1.0 / 3.0}, {"K", 10'000}},
            {{"x", 2.0}, {"b", 1.0 / 3.0}, {"K", 10'000}}};
  r.tol = 1e-3;
  r.covers = {"gamma_product_ratio"};
  r.precondition = [](const Params& p) -> std::optional<std::string> {
    if (get(p, "x") < 0.5) return "quadrature oracle needs x >= 1/2";
    return std::nullopt;
  };
  r.closed_form = [](const Params& p) {
    return cplx(gamma_product_ratio(get(p, "x"), get(p, "b"), get_int(p, "K")));
  };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const double x = get(p, "x");
    const auto num = gamma_oracle(x + get(p, "b"), b);
    const auto den = gamma_oracle(x, b);
    QuadResult q = exact(num.value / den.value);
    q.abs_error_estimate = std::abs(q.value) * (num.abs_error_estimate / std::abs(num.value) +
                                                den.abs_error_estimate / std::abs(den.value));
    q.converged = num.converged && den.converged;
    return q;
  };
  return r;
}

IdentityRecord radial_record(bool printed) {
  IdentityRecord r;
  r.id = printed ? "hbar-series/radial_quartic_printed" : "hbar-series/radial_quartic";
  r.summary = printed ? "printed n-D series with the unit-ball volume and 2^{n-4}"
                      : "int_{R^n} e^{-|t|^4/4hbar + |t|^2/2hbar} dt = |S^{n-1}| sum 2^{n/2-2} hbar^{(n-2m)/4} "
                        "Gamma((n+2m)/4) / m!";
  r.anchor = printed ? "radial quartic proposition as printed; the angular factor should be the sphere area"
                     : "radial quartic integral in polar coordinates";
  r.params = {int_param("n", 1, 3), positive_param("hbar", 0.05, 3.0)};
  r.grid = {{{"n", 1}, {"hbar", 1.0}}, {{"n", 2}, {"hbar", 1.0}}, {{"n", 3}, {"hbar", 0.5}}};
  r.tol = 1e-6;
  r.expected = printed ? Expected::FailTolerated : Expected::Pass;
  r.covers = {"radial_quartic_nd"};
  r.precondition = hbar_floor;
  r.closed_form = [printed](const Params& p) {
    const auto pr = radial_quartic_nd(get_int(p, "n"), QuantumParam(get(p, "hbar")), {});
    return cplx(printed ? pr.printed.value : pr.rederived.value);
  };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const int n = get_int(p, "n");
    const double h = get(p, "hbar");
    return integrate_nd(
        [h](const Vec& t) {
          const double s = t.squaredNorm();
          return cplx(std::exp((-0.25 * s * s + 0.5 * s) / h));
        },
        n, with_tol(b, n <= 2 ? 1e-10 : 1e-8));
  };
  return r;
}

}  // namespace

void register_hbar_series(std::vector<IdentityRecord>& out) {
  out.push_back(quartic_record());
  out.push_back(cubic_record());
  out.push_back(gamma_quarter_record());
  out.push_back(gamma_third_record());
  out.push_back(product_record());
  out.push_back(radial_record(false));
  out.push_back(radial_record(true));
}

}  // namespace gaussint::detail
