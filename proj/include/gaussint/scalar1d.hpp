#pragma once

// One-dimensional Gaussian identities and their rewrites.

#include "gaussint/core.hpp"
#include "gaussint/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace gaussint {

using BigInt = boost::multiprecision::cpp_int;
/// Polynomial with exact integer coefficients, lowest degree first.
using IntPoly = std::vector<BigInt>;

/// A checkable 1-D integral: integrand on [lower, upper] and its claimed value.
struct Identity1D {
  std::string id;
  Integrand1D integrand;
  double lower = 0.0;
  double upper = 0.0;
  cplx claimed;
  std::string anchor;
};

/// n-th pair of continued-fraction polynomials.
struct ConvergentPair {
  int n = 0;
  IntPoly p;
  IntPoly q;
};

/// int e^{-a x^2} dx over R.
double gauss_scaled(double a);
/// int e^{-a x^2 - eta x} dx over R.
cplx gauss_complex_quadratic(double a, cplx eta);
/// int_0^inf x^{2n} e^{-x^2} dx.
double gauss_even_moment(int n);
/// int x^n e^{-a x^2} dx over R for even n >= 2.
double gauss_moment_scaled(int n, double a);
/// int_0^inf (e^{-p x^2} - e^{-q x^2}) / x^2 dx.
double gauss_difference(double p, double q);

/// Monic polynomial P_m (lowest degree first) with
/// d^m/dxi^m e^{-xi^2/2k} = (-1)^m k^{-m} P_m(xi) e^{-xi^2/2k}.
std::vector<double> poly_pm(int m, double k);
/// int x^m e^{-i xi x - k x^2 / 2} dx over R.
cplx hermite_moment(int m, double k, double xi);

/// int_0^inf e^{-x^m} dx.
double stretched_exponential(double m);
/// sum_{k>=1} (-1)^k / k! sqrt(pi / k).
SeriesValue nested_exponential(const TruncationControl& ctrl);

/// The log-form, self-power and Gudermannian rewrites, each claiming sqrt(pi).
std::vector<Identity1D> rewrite_integrands();

/// e^{x^2} int_x^inf e^{-t^2} dt.
double mills_psi(double x);
/// P_n, Q_n from the three-term recurrences, exact integer coefficients.
ConvergentPair convergent_pair(int n);
/// Q_n(a) / P_n(a).
double cf_convergent(int n, double a);
/// Q_{n+1} P_n - P_{n+1} Q_n as an exact polynomial.
IntPoly cf_determinant(int n);
double eval_poly(const IntPoly& p, double x);

/// D(x) = i sqrt(pi) e^{-x^2} (1 + erf(ix)) for Im x > 0.
cplx plasma_d(cplx x);
/// (1/sqrt(pi)) int_nu^inf e^{-t^2} / (t - x) dt by quadrature, Im x > 0.
cplx plasma_incomplete(double nu, cplx x, const OracleBudget& budget = {});
/// d/dx D(nu,x) + 2x D(nu,x) - [(1/sqrt(pi)) e^{-nu^2}/(nu - x) - 1 + erf(nu)],
/// with the derivative from central differences of step h.
cplx plasma_ode_residual(double nu, cplx x, double h = 1e-4, const OracleBudget& budget = {});

}  // namespace gaussint
