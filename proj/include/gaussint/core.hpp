#pragma once

// Shared domain types and special functions used by every identity evaluator.

#include <Eigen/Dense>

#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace gaussint {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr cplx kI{0.0, 1.0};

/// Raised when an argument lies outside an operation's declared domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised on inconsistent shapes (vector length vs. matrix order, etc).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Strictly positive quantum parameter; k = 1/hbar.
class QuantumParam {
 public:
  explicit QuantumParam(double hbar);
  static QuantumParam from_k(double k);

  double hbar() const { return hbar_; }
  double k() const { return 1.0 / hbar_; }

 private:
  double hbar_;
};

/// Stopping rule shared by every truncated series.
struct TruncationControl {
  int max_terms = 400;
  double tail_tol = 1e-15;

  void validate() const;
};

/// Truncated-series result.
struct SeriesValue {
  double value = 0.0;
  int terms_used = 0;
  double tail_estimate = 0.0;
  bool converged = true;
  std::string flag;
};

/// Real symmetric positive definite matrix. Construction symmetrizes the
/// input (after checking it is symmetric to rounding) and rejects anything
/// with a non-positive eigenvalue or a condition number above 1e12.
class RealSpdMatrix {
 public:
  explicit RealSpdMatrix(const Mat& entries);

  static RealSpdMatrix identity(int n);
  static RealSpdMatrix diagonal(std::span<const double> diag);

  int n() const { return static_cast<int>(a_.rows()); }
  const Mat& matrix() const { return a_; }
  double operator()(int i, int j) const { return a_(i, j); }

  double determinant() const { return det_; }
  const Mat& inverse() const { return inv_; }
  double condition_number() const { return cond_; }
  /// x^T A x
  double quadratic_form(const Vec& x) const { return x.dot(a_ * x); }

 private:
  Mat a_;
  Mat inv_;
  double det_ = 0.0;
  double cond_ = 0.0;
};

/// Complex symmetric nonsingular matrix admissible for the Gaussian
/// Fourier-transform theorem: either Re A is positive semidefinite, or A is
/// purely imaginary (A = -i A0 with A0 real symmetric nonsingular).
class ComplexSymMatrix {
 public:
  enum class Kind { kPositiveRealPart, kPurelyImaginary };

  explicit ComplexSymMatrix(const CMat& entries);
  /// Builds A = -i A0.
  static ComplexSymMatrix from_imaginary(const Mat& a0);

  int n() const { return static_cast<int>(a_.rows()); }
  const CMat& matrix() const { return a_; }
  const CMat& inverse() const { return inv_; }
  /// True when Re A is positive semidefinite (the general branch applies).
  bool real_part_psd() const { return real_psd_; }
  /// True when Re A vanishes; then a0() is the real matrix with A = -i A0.
  bool purely_imaginary() const { return imaginary_; }
  Mat a0() const;

 private:
  CMat a_;
  CMat inv_;
  bool real_psd_ = false;
  bool imaginary_ = false;
};

/// R^d with the standard complex structure J = [[0, -I], [I, 0]], the dot
/// product g and the symplectic form omega(v, w) = g(Jv, w).
class SymplecticSpace {
 public:
  explicit SymplecticSpace(int d);

  int dim() const { return d_; }
  const Mat& complex_structure() const { return j_; }

  double metric(const Vec& v, const Vec& w) const;
  double omega(const Vec& v, const Vec& w) const;
  Vec apply_j(const Vec& v) const { return j_ * v; }
  /// Hermitian product H = g - i omega.
  cplx hermitian(const Vec& v, const Vec& w) const;

 private:
  int d_;
  Mat j_;
};

/// Gamma function for Re s > 0 (Lanczos, g = 7).
cplx gamma(cplx s);
double gamma(double s);
/// log Gamma(s) for real s > 0; used for series terms whose Gamma factors overflow.
double log_gamma(double s);

/// Returns (Gamma(s) Gamma(1-s), pi / sin(pi s)) for 0 < s < 1.
std::pair<double, double> reflection_check(double s);

/// Error function on the complex plane. Guaranteed accuracy (~1e-12) for
/// |Im z| <= 26; beyond that the value itself overflows double range.
cplx erf(cplx z);
double erf(double x);
/// erfc(x) for real x, accurate in the far tail.
double erfc(double x);
/// Scaled complementary error function e^{x^2} erfc(x) for real x.
double erfcx(double x);
/// e^{z^2} erfc(z); stable for Re z >= 0 where the continued fraction applies.
cplx erfcx(cplx z);

/// Arithmetic-geometric mean. Stops at |a-b| < 1e-15 max(a,b) or throws
/// after 64 iterations.
double agm(double a, double b);

/// (omega(v,w) - g(Jv,w), omega(v,Jw) - g(v,w), omega(Jv,Jw) - omega(v,w)).
std::tuple<double, double, double> omega_relations(const SymplecticSpace& space, const Vec& v,
                                                   const Vec& w);

/// Double factorial (n-1)!! style helper: product 1*3*5*...*(2m-1), m >= 0.
double odd_double_factorial(int m);
double factorial(int n);

}  // namespace gaussint
