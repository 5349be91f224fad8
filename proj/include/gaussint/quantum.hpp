#pragma once

// hbar-dependent integrals over R^n built on the symplectic form, the Laplace
// expansion of amplitude integrals, and the perturbative source-term series.

#include "gaussint/core.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gaussint {

/// Vectors v, w, u in R^n sharing one SymplecticSpace (n even).
struct PhasePoint {
  Vec v;
  Vec w;
  Vec u;

  int n() const { return static_cast<int>(w.size()); }
  SymplecticSpace space() const;
};

// Exponents as written, g(...) in e^{-(i/hbar) g}.
cplx g1_exponent(const SymplecticSpace& s, const Vec& v, const Vec& w);
cplx g2_exponent(const SymplecticSpace& s, const Vec& v, const Vec& w, const Vec& u);
cplx g3_exponent(const SymplecticSpace& s, const Vec& v, const Vec& w, const Vec& u);
/// omega(v, Jw) = <v, w> for the standard J, so any n is allowed.
cplx g4_exponent(const Vec& v, const Vec& w, double theta);
/// (|w - v|^2 + |v - u|^2) / 2, entering as e^{+(i/hbar) g5}.
double g5_exponent(const Vec& u, const Vec& v, const Vec& w);

/// int e^{-(i/hbar) g1(v,w)} dv = (2 pi hbar)^{n/2} e^{-|w|^2 / 2hbar}
cplx g1_integral(const Vec& w, const QuantumParam& hbar);
/// int e^{-(i/hbar) g2(v,w,u)} dv = (2 pi hbar)^{n/2} e^{-|w+u|^2 / 2hbar}
cplx g2_integral(const Vec& w, const Vec& u, const QuantumParam& hbar);
/// int e^{-(i/hbar) g3(v,w,u)} dw = (pi hbar)^{n/2} e^{-(i/hbar) g1(v,u)}
cplx g3_integral(const Vec& v, const Vec& u, const QuantumParam& hbar);
/// int int e^{-(i/hbar) g4(v,w)} dv dw over R^{2n}, 0 < theta < pi.
cplx g4_integral(double theta, int n, const QuantumParam& hbar);
/// The printed right-hand side, with phase e^{+i(pi/2 - theta) n/2}.
cplx g4_printed(double theta, int n, const QuantumParam& hbar);
/// int e^{(i/hbar) g5(u,v,w)} dv = (pi hbar)^{n/2} e^{i|w-u|^2 / 4hbar} e^{i pi n/4}
cplx g5_integral(const Vec& w, const Vec& u, const QuantumParam& hbar);
/// The printed right-hand side (2 pi hbar)^{n/2} e^{(i/2hbar)|(w-u)/2|^2} e^{i pi n/4}.
cplx g5_printed(const Vec& w, const Vec& u, const QuantumParam& hbar);

/// Amplitude A(u + w, w) as a function of the shift u, with derivatives at u.
struct LaplaceAmplitude {
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> gradient;
  std::function<Mat(const Vec&)> hessian;
};

struct LaplaceExpansion {
  /// (power of hbar, coefficient), powers n/2, (n+1)/2, (n+2)/2.
  std::vector<std::pair<double, double>> terms;
  int order = 0;
  double hbar = 1.0;

  /// Sum of the terms through `through_order` at the stored hbar.
  double value(int through_order) const;
  double value() const { return value(order); }
};

/// Expansion of int A(u + w, w) e^{-|u|^2 / 2hbar} du around u = 0. Term j
/// pairs the sphere-averaged j-th radial Taylor coefficient of A with the
/// radial moment int |u|^j e^{-|u|^2/2hbar} du.
LaplaceExpansion laplace_expand(const LaplaceAmplitude& amp, int n, const QuantumParam& hbar, int order);

struct PerturbedResult {
  double value = 0.0;
  int terms_used = 0;
  double tail_estimate = 0.0;
  bool converged = true;
  /// Set when the defining integral itself diverges (k odd or lambda > 0).
  bool formal = false;
  std::string flag;
};

/// Coefficients (lowest first) of H_m with (d/dJ)^m e^{J^2/2a} = H_m(J) e^{J^2/2a}.
std::vector<double> source_derivative_poly(int m, double a);
/// sum_n (1/n!) (lambda/k!)^n (d/dJ)^{kn} sqrt(2 pi/a) e^{J^2/2a}.
PerturbedResult perturbed_gauss(double a, double lambda, int k, double j, const TruncationControl& ctrl);

}  // namespace gaussint
