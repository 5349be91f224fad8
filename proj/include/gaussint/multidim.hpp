#pragma once

// n-dimensional Gaussian integrals: SPD forms, Fourier transforms of complex
// Gaussians, Wick moments, homogeneous exponents and the Hermitian ensemble.

#include "gaussint/core.hpp"

#include <span>
#include <vector>

namespace gaussint {

/// pi^{n/2}
double gauss_nd(int n);
/// Surface area of the unit sphere in R^n.
double sphere_area(int n);
/// int exp(-<Ax, x>) dx
double gauss_spd(const RealSpdMatrix& a);

/// Fourier transform of e^{-<Ax,x>/2}, i.e. int e^{-i<x,xi>} e^{-<Ax,x>/2} dx.
/// Purely imaginary A uses the signature formula; otherwise the general
/// formula with the square-root branch of det(A^{-1}) continued from A = I.
cplx hormander_ft(const ComplexSymMatrix& a, const Vec& xi);
/// General formula only (valid for every admissible A, imaginary included).
cplx hormander_general(const ComplexSymMatrix& a, const Vec& xi);
/// Signature formula only; requires a purely imaginary A.
cplx hormander_imaginary(const ComplexSymMatrix& a, const Vec& xi);
/// det(A^{-1})^{1/2} continued along A(t) = (1-t) I + t A, t in [0, 1].
cplx sqrt_det_inverse(const ComplexSymMatrix& a);
/// n_+ - n_- for a real symmetric nonsingular matrix.
int signature(const Mat& a0);

/// (2 pi)^{n/2} det(A)^{-1/2}
double z0(const RealSpdMatrix& a);
/// int exp(-x^T A x / 2 + x^T J) dx
double generating_z(const RealSpdMatrix& a, const Vec& j);
/// int x_{i1} ... x_{i2m} exp(-x^T A x / 2) dx, indices 1-based. Odd counts give 0.
double wick_moment(const RealSpdMatrix& a, std::span<const int> indices);

struct HomogeneousSpec {
  int n = 1;
  std::vector<double> weights;
  /// Lebesgue measure of {phi < 1}.
  double unit_ball_measure = 0.0;

  double weight() const;
  void validate() const;
};

/// int e^{-phi(x)} dx = Leb(B_phi) Gamma(p + 1).
double homog_integral(const HomogeneousSpec& spec);
/// int exp(-(c <Ax, x>)^p) dx
double homog_power_form(double c, double p, const RealSpdMatrix& a);

/// Coordinates of an N x N Hermitian matrix: diagonal, then x_ij (i<j) row
/// major, then y_ij (i<j) row major.
class HermitianPoint {
 public:
  HermitianPoint(int n, Vec coords);

  int size() const { return n_; }
  const Vec& coords() const { return h_; }
  CMat matrix() const;

 private:
  int n_;
  Vec h_;
};

/// Diagonal of B: N ones followed by N^2 - N twos.
Vec trace_form_weights(int n);
/// (Bh, h) = Tr(H^2)
double trace_form(const HermitianPoint& h);
/// int e^{-Tr(H^2)/2} dLeb(H)
double hermitian_ensemble_norm(int n);
/// Density of the normalized Gaussian measure with respect to dLeb(H).
double hermitian_measure_density(const HermitianPoint& h);

}  // namespace gaussint
