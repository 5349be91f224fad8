#include "gaussint/quantum.hpp"

#include "gaussint/multidim.hpp"
#include "gaussint/oracle.hpp"

#include <cmath>

namespace gaussint {

namespace {

void require_same(const Vec& a, const Vec& b, const char* who) {
  if (a.size() != b.size() || a.size() == 0) throw DimensionError(std::string(who) + ": dimension mismatch");
}

void require_even(long n, const char* who) {
  if (n < 2 || n % 2 != 0) throw DimensionError(std::string(who) + ": symplectic form needs even n");
}

}  // namespace

SymplecticSpace PhasePoint::space() const { return SymplecticSpace(n()); }

cplx g1_exponent(const SymplecticSpace& s, const Vec& v, const Vec& w) {
  return s.omega(v, w) - 0.5 * kI * (v - w).squaredNorm();
}

cplx g2_exponent(const SymplecticSpace& s, const Vec& v, const Vec& w, const Vec& u) {
  return -s.omega(v, w + u) - 0.5 * kI * v.squaredNorm();
}

cplx g3_exponent(const SymplecticSpace& s, const Vec& v, const Vec& w, const Vec& u) {
  return s.omega(v, w) + s.omega(w, u) - 0.5 * kI * (v - w).squaredNorm() - 0.5 * kI * (w - u).squaredNorm();
}

cplx g4_exponent(const Vec& v, const Vec& w, double theta) {
  require_same(v, w, "g4_exponent");
  const cplx c(1.0, 2.0 / std::tan(theta));
  return v.dot(w) - 0.5 * kI * v.squaredNorm() - 0.5 * kI * c * w.squaredNorm();
}

double g5_exponent(const Vec& u, const Vec& v, const Vec& w) {
  return 0.5 * ((w - v).squaredNorm() + (v - u).squaredNorm());
}

cplx g1_integral(const Vec& w, const QuantumParam& hbar) {
  require_even(w.size(), "g1_integral");
  const double h = hbar.hbar();
  return std::pow(2.0 * kPi * h, 0.5 * w.size()) * std::exp(-w.squaredNorm() / (2.0 * h));
}

cplx g2_integral(const Vec& w, const Vec& u, const QuantumParam& hbar) {
  require_same(w, u, "g2_integral");
  require_even(w.size(), "g2_integral");
  const double h = hbar.hbar();
  return std::pow(2.0 * kPi * h, 0.5 * w.size()) * std::exp(-(w + u).squaredNorm() / (2.0 * h));
}

cplx g3_integral(const Vec& v, const Vec& u, const QuantumParam& hbar) {
  require_same(v, u, "g3_integral");
  require_even(v.size(), "g3_integral");
  const SymplecticSpace s(static_cast<int>(v.size()));
  const double h = hbar.hbar();
  return std::pow(kPi * h, 0.5 * v.size()) * std::exp(-kI / h * g1_exponent(s, v, u));
}

namespace {

void check_theta(double theta) {
  if (!(theta > 0.0 && theta < kPi)) throw DomainError("g4: theta must lie in (0, pi)");
}

}  // namespace

cplx g4_integral(double theta, int n, const QuantumParam& hbar) {
  check_theta(theta);
  if (n < 1) throw DimensionError("g4_integral: n must be >= 1");
  const double mod = std::pow(2.0, 0.5 * n) * std::pow(hbar.hbar() * kPi, n) * std::pow(std::sin(theta), 0.5 * n);
  return mod * std::exp(-kI * (0.5 * kPi - theta) * (0.5 * n));
}

cplx g4_printed(double theta, int n, const QuantumParam& hbar) { return std::conj(g4_integral(theta, n, hbar)); }

cplx g5_integral(const Vec& w, const Vec& u, const QuantumParam& hbar) {
  require_same(w, u, "g5_integral");
  const double h = hbar.hbar();
  const auto n = static_cast<double>(w.size());
  return std::pow(kPi * h, 0.5 * n) * std::exp(kI * ((w - u).squaredNorm() / (4.0 * h) + kPi * n / 4.0));
}

cplx g5_printed(const Vec& w, const Vec& u, const QuantumParam& hbar) {
  require_same(w, u, "g5_printed");
  const double h = hbar.hbar();
  const auto n = static_cast<double>(w.size());
  return std::pow(2.0 * kPi * h, 0.5 * n) *
         std::exp(kI * ((0.5 * (w - u)).squaredNorm() / (2.0 * h) + kPi * n / 4.0));
}

double LaplaceExpansion::value(int through_order) const {
  double sum = 0.0;
  for (int j = 0; j <= through_order && j < static_cast<int>(terms.size()); ++j) {
    sum += terms[j].second * std::pow(hbar, terms[j].first);
  }
  return sum;
}

LaplaceExpansion laplace_expand(const LaplaceAmplitude& amp, int n, const QuantumParam& hbar, int order) {
  if (order < 0 || order > 2) throw DomainError("laplace_expand: order must be 0, 1 or 2");
  if (n < 1) throw DimensionError("laplace_expand: n must be >= 1");
  if (!amp.value) throw DomainError("laplace_expand: amplitude value required");
  const Vec origin = Vec::Zero(n);
  const double area = sphere_area(n);

  LaplaceExpansion out;
  out.order = order;
  out.hbar = hbar.hbar();
  // int |u|^j e^{-|u|^2/2hbar} du = c_n 2^{(n+j)/2 - 1} Gamma((n+j)/2) hbar^{(n+j)/2}
  auto radial_moment = [&](int j) { return area * std::pow(2.0, 0.5 * (n + j) - 1.0) * gamma(0.5 * (n + j)); };

  out.terms.emplace_back(0.5 * n, amp.value(origin) * radial_moment(0));
  if (order >= 1) {
    if (!amp.gradient) throw DomainError("laplace_expand: gradient required for order >= 1");
    const Vec g = amp.gradient(origin);
    if (g.size() != n) throw DimensionError("laplace_expand: gradient has wrong dimension");
    // Average of the directional derivative over the antipodal axis directions.
    double avg = 0.0;
    for (int i = 0; i < n; ++i) avg += g(i) + (-g(i));
    avg /= 2.0 * n;
    out.terms.emplace_back(0.5 * (n + 1), avg * radial_moment(1));
  }
  if (order >= 2) {
    if (!amp.hessian) throw DomainError("laplace_expand: hessian required for order 2");
    const Mat hess = amp.hessian(origin);
    if (hess.rows() != n || hess.cols() != n) throw DimensionError("laplace_expand: hessian has wrong shape");
    // Sphere average of u^T H u / 2 over |u| = 1 is tr(H) / 2n.
    out.terms.emplace_back(0.5 * (n + 2), hess.trace() / (2.0 * n) * radial_moment(2));
  }
  return out;
}

std::vector<double> source_derivative_poly(int m, double a) {
  if (m < 0) throw DomainError("source_derivative_poly: m must be >= 0");
  if (!(a > 0.0)) throw DomainError("source_derivative_poly: a must be > 0");
  // H_{m+1} = H_m' + (J/a) H_m
  std::vector<double> h{1.0};
  for (int step = 0; step < m; ++step) {
    std::vector<double> next(h.size() + 1, 0.0);
    for (std::size_t j = 1; j < h.size(); ++j) next[j - 1] += static_cast<double>(j) * h[j];
    for (std::size_t j = 0; j < h.size(); ++j) next[j + 1] += h[j] / a;
    h = std::move(next);
  }
  return h;
}

PerturbedResult perturbed_gauss(double a, double lambda, int k, double j, const TruncationControl& ctrl) {
  if (!(a > 0.0)) throw DomainError("perturbed_gauss: a must be > 0");
  if (k < 1) throw DomainError("perturbed_gauss: k must be >= 1");
  ctrl.validate();
  PerturbedResult out;
  out.formal = (k % 2 == 1) || lambda > 0.0;
  const double base = std::sqrt(2.0 * kPi / a) * std::exp(j * j / (2.0 * a));
  if (lambda == 0.0) {
    out.value = base;
    out.terms_used = 1;
    return out;
  }

  const double c = lambda / factorial(k);
  double prefactor = 1.0;  // c^n / n!
  double prev = kInf;
  for (int n = 0; n < ctrl.max_terms; ++n) {
    if (n > 0) prefactor *= c / n;
    const auto poly = source_derivative_poly(k * n, a);
    double hv = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) hv = hv * j + *it;
    const double t = prefactor * hv * base;
    if (!std::isfinite(t)) {
      out.converged = false;
      out.flag = "non-finite term";
      return out;
    }
    if (n >= 2 && std::abs(t) > prev) {
      out.converged = false;
      out.flag = "asymptotic series: truncated at smallest term";
      out.tail_estimate = std::abs(t);
      return out;
    }
    out.value += t;
    out.terms_used = n + 1;
    out.tail_estimate = std::abs(t);
    if (t != 0.0 && std::abs(t) <= ctrl.tail_tol * std::abs(out.value)) return out;
    if (t != 0.0) prev = std::abs(t);
  }
  out.converged = false;
  out.flag = "tail not below tolerance at max_terms";
  return out;
}

}  // namespace gaussint
