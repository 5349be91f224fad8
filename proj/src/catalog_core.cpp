#include "catalog_detail.hpp"

namespace gaussint::detail {

void register_core(std::vector<IdentityRecord>& out) {
  {
    IdentityRecord r;
    r.id = "core/gamma_complex";
    r.summary = "Gamma(s) = 2 int_0^inf x^{2s-1} e^{-x^2} dx";
    r.anchor = "Euler integral, used throughout for moment formulas";
    r.params = {real_param("s_re", 0.0, kInf, 0.5, 4.0, true), real_param("s_im", -kInf, kInf, -2.0, 2.0)};
    r.grid = {{{"s_re", 0.5}, {"s_im", 0.0}}, {{"s_re", 1.5}, {"s_im", 2.0}}, {{"s_re", 3.2}, {"s_im", -1.0}}};
    r.covers = {"gamma"};
    r.closed_form = [](const Params& p) { return gamma(cplx(get(p, "s_re"), get(p, "s_im"))); };
    r.oracle = [](const Params& p, const OracleBudget& b) {
      const cplx s(get(p, "s_re"), get(p, "s_im"));
      return integrate_1d(
          [s](double x) { return x > 0.0 ? 2.0 * std::exp((2.0 * s - 1.0) * std::log(x) - x * x) : cplx{}; }, 0.0,
          kInf, b);
    };
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "core/gamma_reflection";
    r.summary = "Gamma(s) Gamma(1-s) = pi / sin(pi s)";
    r.anchor = "reflection formula";
    r.params = {real_param("s", 0.0, 1.0, 0.01, 0.99, true, true)};
    r.grid = {{{"s", 0.1}}, {{"s", 0.37}}, {{"s", 0.5}}, {{"s", 0.83}}};
    r.covers = {"reflection_check"};
    r.closed_form = [](const Params& p) { return cplx(reflection_check(get(p, "s")).first); };
    r.oracle = [](const Params& p, const OracleBudget&) { return exact(kPi / std::sin(kPi * get(p, "s"))); };
    out.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "core/erf";
    r.summary = "erf(z) = (2/sqrt pi) int_0^1 z e^{-z^2 t^2} dt";
    r.anchor = "error function on the complex plane, straight path from 0";
    r.params = {real_param("z_re", -kInf, kInf, -3.0, 3.0), real_param("z_im", -26.0, 26.0, -3.0, 3.0)};
    r.grid = {{{"z_re", 0.5}, {"z_im", 0.0}},
              {{"z_re", 1.0}, {"z_im", 1.0}},
              {{"z_re", 2.0}, {"z_im", -0.5}},
              {{"z_re", 0.2}, {"z_im", 3.0}}};
    r.covers = {"erf"};
    r.closed_form = [](const Params& p) { return gaussint::erf(cplx(get(p, "z_re"), get(p, "z_im"))); };
    r.oracle = [](const Params& p, const OracleBudget& b) {
      const cplx z(get(p, "z_re"), get(p, "z_im"));
      return integrate_1d([z](double t) { return 2.0 / kSqrtPi * z * std::exp(-z * z * t * t); }, 0.0, 1.0, b);
    };
    out.push_back(std::move(r));
  }
}

}  // namespace gaussint::detail
