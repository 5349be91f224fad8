#include "gaussint/multidim.hpp"

#include "gaussint/oracle.hpp"

#include <cmath>

namespace gaussint {

double gauss_nd(int n) {
  if (n < 1) throw DomainError("gauss_nd: n must be >= 1");
  return std::pow(kPi, 0.5 * n);
}

double sphere_area(int n) {
  if (n < 1) throw DomainError("sphere_area: n must be >= 1");
  return 2.0 * std::pow(kPi, 0.5 * n) / gamma(0.5 * n);
}

double gauss_spd(const RealSpdMatrix& a) { return std::sqrt(std::pow(kPi, a.n()) / a.determinant()); }

cplx sqrt_det_inverse(const ComplexSymMatrix& a) {
  const int n = a.n();
  const CMat id = CMat::Identity(n, n);
  constexpr int kSteps = 1024;
  cplx root = 1.0;  // sqrt(det A(0)) = 1
  for (int s = 1; s <= kSteps; ++s) {
    const double t = static_cast<double>(s) / kSteps;
    const cplx det = ((1.0 - t) * id + t * a.matrix()).determinant();
    if (std::abs(det) < 1e-12) throw DomainError("sqrt_det_inverse: deformation passes through a singular matrix");
    const cplx cand = std::sqrt(det);
    const double keep = std::abs(cand - root);
    const double flip = std::abs(cand + root);
    if (std::abs(keep - flip) < 1e-3 * std::abs(cand)) {
      throw DomainError("sqrt_det_inverse: ambiguous square-root branch along deformation");
    }
    root = keep <= flip ? cand : -cand;
  }
  return 1.0 / root;
}

int signature(const Mat& a0) {
  if (a0.rows() == 0 || a0.rows() != a0.cols()) throw DimensionError("signature: matrix must be square");
  const double scale = a0.cwiseAbs().maxCoeff();
  if ((a0 - a0.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) throw DomainError("signature: not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (a0 + a0.transpose()));
  int sig = 0;
  for (double ev : eig.eigenvalues()) {
    if (std::abs(ev) <= 1e-12 * scale) throw DomainError("signature: matrix is singular");
    sig += ev > 0.0 ? 1 : -1;
  }
  return sig;
}

cplx hormander_general(const ComplexSymMatrix& a, const Vec& xi) {
  if (xi.size() != a.n()) throw DimensionError("hormander_ft: xi has wrong dimension");
  const CVec x = xi.cast<cplx>();
  const cplx quad = x.transpose() * a.inverse() * x;
  return std::pow(2.0 * kPi, 0.5 * a.n()) * sqrt_det_inverse(a) * std::exp(-0.5 * quad);
}

cplx hormander_imaginary(const ComplexSymMatrix& a, const Vec& xi) {
  if (xi.size() != a.n()) throw DimensionError("hormander_ft: xi has wrong dimension");
  const Mat a0 = a.a0();
  const double quad = xi.dot(a0.fullPivLu().solve(xi));
  const double phase = kPi * signature(a0) / 4.0 - 0.5 * quad;
  return std::pow(2.0 * kPi, 0.5 * a.n()) / std::sqrt(std::abs(a0.determinant())) * std::exp(kI * phase);
}

cplx hormander_ft(const ComplexSymMatrix& a, const Vec& xi) {
  return a.purely_imaginary() ? hormander_imaginary(a, xi) : hormander_general(a, xi);
}

double z0(const RealSpdMatrix& a) { return std::pow(2.0 * kPi, 0.5 * a.n()) / std::sqrt(a.determinant()); }

double generating_z(const RealSpdMatrix& a, const Vec& j) {
  if (j.size() != a.n()) throw DimensionError("generating_z: J has wrong dimension");
  return z0(a) * std::exp(0.5 * j.dot(a.inverse() * j));
}

double wick_moment(const RealSpdMatrix& a, std::span<const int> indices) {
  for (int i : indices) {
    if (i < 1 || i > a.n()) throw DimensionError("wick_moment: index out of range 1..n");
  }
  // Odd moments of a centered Gaussian vanish by x -> -x symmetry.
  if (indices.size() % 2 != 0) return 0.0;
  const Mat& b = a.inverse();
  double sum = 0.0;
  for (const auto& m : pairings(indices)) {
    double prod = 1.0;
    for (const auto& [i, j] : m) prod *= b(i - 1, j - 1);
    sum += prod;
  }
  return z0(a) * sum;
}

double HomogeneousSpec::weight() const {
  double p = 0.0;
  for (double w : weights) p += w;
  return p;
}

void HomogeneousSpec::validate() const {
  if (n < 1 || static_cast<int>(weights.size()) != n) throw DimensionError("HomogeneousSpec: need n weights");
  for (double w : weights) {
    if (!(w > 0.0)) throw DomainError("HomogeneousSpec: weights must be positive");
  }
  if (!(unit_ball_measure > 0.0) || !std::isfinite(unit_ball_measure)) {
    throw DomainError("HomogeneousSpec: unit ball measure must be finite and positive");
  }
}

double homog_integral(const HomogeneousSpec& spec) {
  spec.validate();
  return spec.unit_ball_measure * gamma(spec.weight() + 1.0);
}

double homog_power_form(double c, double p, const RealSpdMatrix& a) {
  if (!(c > 0.0) || !(p > 0.0)) throw DomainError("homog_power_form: c and p must be > 0");
  const int n = a.n();
  return std::pow(kPi / c, 0.5 * n) / std::sqrt(a.determinant()) * gamma(0.5 * n / p + 1.0) /
         gamma(0.5 * n + 1.0);
}

HermitianPoint::HermitianPoint(int n, Vec coords) : n_(n), h_(std::move(coords)) {
  if (n < 1) throw DimensionError("HermitianPoint: N must be >= 1");
  if (h_.size() != n * n) throw DimensionError("HermitianPoint: need N^2 coordinates");
}

CMat HermitianPoint::matrix() const {
  CMat m = CMat::Zero(n_, n_);
  for (int i = 0; i < n_; ++i) m(i, i) = h_(i);
  const int off = n_ * (n_ - 1) / 2;
  int k = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j, ++k) {
      const cplx v(h_(n_ + k), h_(n_ + off + k));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  return m;
}

Vec trace_form_weights(int n) {
  if (n < 1) throw DimensionError("trace_form_weights: N must be >= 1");
  Vec b = Vec::Constant(n * n, 2.0);
  b.head(n).setOnes();
  return b;
}

double trace_form(const HermitianPoint& h) {
  const Vec b = trace_form_weights(h.size());
  return (b.array() * h.coords().array().square()).sum();
}

double hermitian_ensemble_norm(int n) {
  if (n < 1) throw DomainError("hermitian_ensemble_norm: N must be >= 1");
  const int n2 = n * n;
  return std::pow(std::sqrt(2.0 * kPi), n2) / std::pow(2.0, 0.5 * (n2 - n));
}

double hermitian_measure_density(const HermitianPoint& h) {
  const int n2 = h.size() * h.size();
  return std::pow(2.0 * kPi, -0.5 * n2) * std::pow(2.0, 0.5 * (n2 - h.size())) * std::exp(-0.5 * trace_form(h));
}

}  // namespace gaussint
