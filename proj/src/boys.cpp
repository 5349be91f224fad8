#include "gaussint/boys.hpp"

#include <cmath>

namespace gaussint {

namespace {

constexpr int kMaxOrder = 100;
constexpr int kRecursionOffset = 12;

// e^{-x} sum_k (2x)^k / ((2m+1)(2m+3)...(2m+2k+1)); every term positive.
double boys_positive_series(int m, double x) {
  double term = 1.0 / (2.0 * m + 1.0);
  double sum = term;
  for (int k = 1; k < 5000; ++k) {
    term *= 2.0 * x / (2.0 * m + 2.0 * k + 1.0);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return std::exp(-x) * sum;
}

// Gamma(m+1/2) / (2 x^{m+1/2}); the neglected part is below e^{-x} x^{m-1/2} / 2.
double boys_asymptotic(int m, double x) {
  return 0.5 * std::exp(log_gamma(m + 0.5) - (m + 0.5) * std::log(x));
}

bool asymptotic_is_exact(int m, double x) {
  if (x <= 2.0 * m + 1.0) return false;
  const double log_neglected = -x + (m + 0.5) * std::log(x) - log_gamma(m + 0.5);
  return log_neglected < std::log(1e-17);
}

double boys_f0(double x) {
  if (x <= 1e-6) {
    double sum = 0.0;
    double pk = 1.0;  // (-x)^k / k!
    for (int k = 0; k < 6; ++k) {
      if (k > 0) pk *= -x / k;
      sum += pk / (2.0 * k + 1.0);
    }
    return sum;
  }
  const double s = std::sqrt(x);
  return 0.5 * kSqrtPi / s * gaussint::erf(s);
}

}  // namespace

GaussianPrimitive::GaussianPrimitive(const Vec3& c, double a) : center(c), exponent(a) {
  if (!(a > 0.0)) throw DomainError("GaussianPrimitive: exponent must be > 0");
}

double GaussianPrimitive::operator()(const Vec3& r) const { return std::exp(-exponent * (r - center).squaredNorm()); }

double boys_f(int n, double x) {
  if (n < 0 || n > kMaxOrder) throw DomainError("boys_f: n must lie in 0..100");
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("boys_f: x must be finite and >= 0");
  if (n == 0) return boys_f0(x);
  if (x == 0.0) return 1.0 / (2.0 * n + 1.0);

  const int top = n + kRecursionOffset;
  double f = asymptotic_is_exact(top, x) ? boys_asymptotic(top, x) : boys_positive_series(top, x);
  const double ex = std::exp(-x);
  for (int m = top - 1; m >= n; --m) f = (2.0 * x * f + ex) / (2.0 * m + 1.0);
  return f;
}

ProductGaussian gaussian_product(const GaussianPrimitive& g1, const GaussianPrimitive& g2) {
  const double a = g1.exponent;
  const double b = g2.exponent;
  ProductGaussian out;
  out.p = a + b;
  out.center = (a * g1.center + b * g2.center) / out.p;
  out.mu = a * b / out.p;
  out.separation2 = (g1.center - g2.center).squaredNorm();
  out.prefactor = std::exp(-out.mu * out.separation2);
  return out;
}

double overlap(const GaussianPrimitive& g1, const GaussianPrimitive& g2) {
  const auto pg = gaussian_product(g1, g2);
  return std::pow(kPi / pg.p, 1.5) * pg.prefactor;
}

double kinetic(const GaussianPrimitive& g1, const GaussianPrimitive& g2) {
  const auto pg = gaussian_product(g1, g2);
  return std::pow(kPi / pg.p, 1.5) * pg.mu * (3.0 - 2.0 * pg.mu * pg.separation2) * pg.prefactor;
}

double nuclear_attraction(const GaussianPrimitive& g1, const GaussianPrimitive& g2, const Vec3& c) {
  return nuclear_attraction_printed(g1, g2, c) * gaussian_product(g1, g2).prefactor;
}

double nuclear_attraction_printed(const GaussianPrimitive& g1, const GaussianPrimitive& g2, const Vec3& c) {
  const auto pg = gaussian_product(g1, g2);
  return 2.0 * kPi / pg.p * boys_f(0, pg.p * (c - pg.center).squaredNorm());
}

}  // namespace gaussint
