#include "gaussint/core.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace gaussint {

QuantumParam::QuantumParam(double hbar) : hbar_(hbar) {
  if (!(hbar > 0.0) || !std::isfinite(1.0 / hbar)) {
    throw DomainError("QuantumParam: hbar must be > 0 with finite 1/hbar");
  }
}

QuantumParam QuantumParam::from_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("QuantumParam: k must be finite and > 0");
  return QuantumParam(1.0 / k);
}

void TruncationControl::validate() const {
  if (max_terms < 1) throw DomainError("TruncationControl: max_terms must be >= 1");
  if (!(tail_tol > 0.0)) throw DomainError("TruncationControl: tail_tol must be > 0");
}

// ---------------------------------------------------------------------------
// Matrices

namespace {

void require_square(const auto& m, const char* who) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw DimensionError(std::string(who) + ": matrix must be square and non-empty");
  }
}

}  // namespace

RealSpdMatrix::RealSpdMatrix(const Mat& entries) {
  require_square(entries, "RealSpdMatrix");
  const double scale = std::max(entries.cwiseAbs().maxCoeff(), 1e-300);
  if ((entries - entries.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DomainError("RealSpdMatrix: matrix is not symmetric");
  }
  a_ = 0.5 * (entries + entries.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> eig(a_);
  const Vec& ev = eig.eigenvalues();
  if (ev.minCoeff() <= 0.0) throw DomainError("RealSpdMatrix: matrix is not positive definite");
  cond_ = ev.maxCoeff() / ev.minCoeff();
  if (cond_ > 1e12) throw DomainError("RealSpdMatrix: condition number exceeds 1e12");
  det_ = ev.prod();
  inv_ = a_.llt().solve(Mat::Identity(a_.rows(), a_.cols()));
}

RealSpdMatrix RealSpdMatrix::identity(int n) {
  if (n < 1) throw DimensionError("RealSpdMatrix::identity: n must be >= 1");
  return RealSpdMatrix(Mat::Identity(n, n));
}

RealSpdMatrix RealSpdMatrix::diagonal(std::span<const double> diag) {
  Mat m = Mat::Zero(static_cast<Eigen::Index>(diag.size()), static_cast<Eigen::Index>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return RealSpdMatrix(m);
}

ComplexSymMatrix::ComplexSymMatrix(const CMat& entries) {
  require_square(entries, "ComplexSymMatrix");
  const double scale = std::max(entries.cwiseAbs().maxCoeff(), 1e-300);
  if ((entries - entries.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DomainError("ComplexSymMatrix: matrix is not symmetric");
  }
  a_ = 0.5 * (entries + entries.transpose());

  Eigen::JacobiSVD<CMat> svd(a_);
  const auto& sv = svd.singularValues();
  if (sv.minCoeff() <= 1e-12 * sv.maxCoeff()) throw DomainError("ComplexSymMatrix: matrix is singular");
  inv_ = a_.fullPivLu().inverse();

  const Mat re = a_.real();
  imaginary_ = re.cwiseAbs().maxCoeff() <= 1e-15 * scale;
  Eigen::SelfAdjointEigenSolver<Mat> eig(re);
  real_psd_ = imaginary_ || eig.eigenvalues().minCoeff() >= -1e-12 * scale;
  if (!real_psd_) {
    throw DomainError("ComplexSymMatrix: Re A must be positive semidefinite or A purely imaginary");
  }
}

ComplexSymMatrix ComplexSymMatrix::from_imaginary(const Mat& a0) {
  return ComplexSymMatrix(CMat(-kI * a0.cast<cplx>()));
}

Mat ComplexSymMatrix::a0() const {
  if (!imaginary_) throw DomainError("ComplexSymMatrix::a0: matrix is not purely imaginary");
  // A = -i A0  =>  A0 = i A
  return (kI * a_).real();
}

SymplecticSpace::SymplecticSpace(int d) : d_(d) {
  if (d < 2 || d % 2 != 0) throw DomainError("SymplecticSpace: dimension must be even and positive");
  const int n = d / 2;
  j_ = Mat::Zero(d, d);
  j_.block(0, n, n, n) = -Mat::Identity(n, n);
  j_.block(n, 0, n, n) = Mat::Identity(n, n);
}

double SymplecticSpace::metric(const Vec& v, const Vec& w) const {
  if (v.size() != d_ || w.size() != d_) throw DimensionError("SymplecticSpace::metric: dimension mismatch");
  return v.dot(w);
}

double SymplecticSpace::omega(const Vec& v, const Vec& w) const {
  if (v.size() != d_ || w.size() != d_) throw DimensionError("SymplecticSpace::omega: dimension mismatch");
  return (j_ * v).dot(w);
}

cplx SymplecticSpace::hermitian(const Vec& v, const Vec& w) const {
  return {metric(v, w), -omega(v, w)};
}

std::tuple<double, double, double> omega_relations(const SymplecticSpace& space, const Vec& v,
                                                   const Vec& w) {
  if (v.size() != space.dim() || w.size() != space.dim()) {
    throw DimensionError("omega_relations: vectors must have the space dimension");
  }
  const Vec jv = space.apply_j(v);
  const Vec jw = space.apply_j(w);
  return {space.omega(v, w) - space.metric(jv, w), space.omega(v, jw) - space.metric(v, w),
          space.omega(jv, jw) - space.omega(v, w)};
}

// ---------------------------------------------------------------------------
// Gamma

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Lanczos sum for Gamma(z + 1), valid for Re z >= -0.5.
cplx lanczos_series(cplx z) {
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  return x;
}

}  // namespace

cplx gamma(cplx s) {
  if (!(s.real() > 0.0)) throw DomainError("gamma: requires Re s > 0");
  if (s.real() < 0.5) return gamma(s + 1.0) / s;
  const cplx z = s - 1.0;
  const cplx t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * lanczos_series(z);
}

double gamma(double s) {
  if (!(s > 0.0)) throw DomainError("gamma: requires s > 0");
  if (s < 0.5) return gamma(s + 1.0) / s;
  const double z = s - 1.0;
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) *
         lanczos_series(cplx(z)).real();
}

double log_gamma(double s) {
  if (!(s > 0.0)) throw DomainError("log_gamma: requires s > 0");
  if (s < 0.5) return log_gamma(s + 1.0) - std::log(s);
  const double z = s - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_series(cplx(z)).real());
}

std::pair<double, double> reflection_check(double s) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("reflection_check: requires 0 < s < 1");
  return {gamma(s) * gamma(1.0 - s), kPi / std::sin(kPi * s)};
}

double factorial(int n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

double odd_double_factorial(int m) {
  if (m < 0) throw DomainError("odd_double_factorial: negative argument");
  double r = 1.0;
  for (int i = 1; i <= m; ++i) r *= 2.0 * i - 1.0;
  return r;
}

// ---------------------------------------------------------------------------
// Error function

namespace {

constexpr double kTwoOverSqrtPi = 2.0 / kSqrtPi;

cplx erf_taylor(cplx z) {
  const cplx z2 = z * z;
  cplx term = z;  // (-1)^n z^{2n+1} / n!
  cplx sum = z;
  const double min_terms = std::norm(z) + 4.0;
  for (int n = 1; n < 2000; ++n) {
    term *= -z2 / static_cast<double>(n);
    const cplx contrib = term / static_cast<double>(2 * n + 1);
    sum += contrib;
    if (n > min_terms && std::abs(contrib) <= 1e-17 * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

// 1 / (sqrt(pi) f) with f = z + (1/2)/(z + 1/(z + (3/2)/(z + ...))), so that
// erfc(z) = e^{-z^2} * erfc_cf_scaled(z) for Re z > 0.
cplx erfc_cf_scaled(cplx z) {
  constexpr double tiny = 1e-300;
  cplx f = z;
  cplx c = z;
  cplx d = 0.0;
  for (int k = 1; k < 20000; ++k) {
    const double a = 0.5 * k;
    d = z + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = z + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const cplx delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 / (kSqrtPi * f);
}

bool use_taylor(cplx z) {
  const double x2 = z.real() * z.real();
  const double y2 = z.imag() * z.imag();
  // Largest Taylor term ~ e^{|z|^2}; the result ~ max(1, e^{y^2 - x^2}).
  return x2 + y2 - std::max(0.0, y2 - x2) <= 6.0;
}

}  // namespace

cplx erf(cplx z) {
  if (use_taylor(z)) return erf_taylor(z);
  if (z.real() < 0.0) return -erf(-z);
  return 1.0 - std::exp(-z * z) * erfc_cf_scaled(z);
}

double erf(double x) { return erf(cplx(x, 0.0)).real(); }

double erfcx(double x) {
  if (x < 0.0) return 2.0 * std::exp(x * x) - erfcx(-x);
  if (x < 2.0) return std::exp(x * x) * (1.0 - erf(x));
  return erfc_cf_scaled(cplx(x, 0.0)).real();
}

cplx erfcx(cplx z) {
  if (!use_taylor(z) && z.real() > 0.0) return erfc_cf_scaled(z);
  return std::exp(z * z) * (1.0 - erf(z));
}

double erfc(double x) {
  if (x < 0.5) return 1.0 - erf(x);
  return std::exp(-x * x) * erfcx(x);
}

// ---------------------------------------------------------------------------

double agm(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("agm: arguments must be positive");
  for (int i = 0; i < 64; ++i) {
    if (std::abs(a - b) < 1e-15 * std::max(a, b)) return 0.5 * (a + b);
    const double next_a = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next_a;
  }
  throw DomainError("agm: no convergence after 64 iterations");
}

}  // namespace gaussint
