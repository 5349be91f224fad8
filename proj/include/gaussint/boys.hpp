#pragma once

// Boys functions and the s-type overlap, kinetic and nuclear-attraction
// integrals between two Gaussian primitives.

#include "gaussint/core.hpp"

#include <Eigen/Dense>

namespace gaussint {

using Vec3 = Eigen::Vector3d;

/// e^{-a |r - A|^2}
struct GaussianPrimitive {
  Vec3 center = Vec3::Zero();
  double exponent = 1.0;

  GaussianPrimitive() = default;
  GaussianPrimitive(const Vec3& c, double a);
  double operator()(const Vec3& r) const;
};

/// e^{-a r_A^2} e^{-b r_B^2} = prefactor * e^{-p r_P^2}
struct ProductGaussian {
  double p = 0.0;
  Vec3 center = Vec3::Zero();
  double mu = 0.0;
  /// e^{-mu S}
  double prefactor = 1.0;
  /// S = |A - B|^2
  double separation2 = 0.0;
};

/// F_n(x) = int_0^1 e^{-x t^2} t^{2n} dt, 0 <= n <= 100.
double boys_f(int n, double x);

ProductGaussian gaussian_product(const GaussianPrimitive& g1, const GaussianPrimitive& g2);

/// int e^{-a r_A^2} e^{-b r_B^2} dr
double overlap(const GaussianPrimitive& g1, const GaussianPrimitive& g2);
/// int e^{-a r_A^2} (-Laplacian / 2) e^{-b r_B^2} dr
double kinetic(const GaussianPrimitive& g1, const GaussianPrimitive& g2);
/// int e^{-a r_A^2} e^{-b r_B^2} / |r - C| dr = (2 pi / p) F_0(p R_CP^2) e^{-mu S}
double nuclear_attraction(const GaussianPrimitive& g1, const GaussianPrimitive& g2, const Vec3& c);
/// The printed right-hand side (2 pi / p) F_0(p R_CP^2), without e^{-mu S}.
double nuclear_attraction_printed(const GaussianPrimitive& g1, const GaussianPrimitive& g2, const Vec3& c);

}  // namespace gaussint
