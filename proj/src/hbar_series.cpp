#include "gaussint/hbar_series.hpp"

#include "gaussint/multidim.hpp"

#include <cmath>
#include <functional>

namespace gaussint {

namespace {

constexpr double kMinHbar = 0.05;

// Sums positive terms given in log form. Stops once terms are decreasing and
// the latest one is below tail_tol relative to the sum.
SeriesValue sum_log_terms(const std::function<double(int)>& log_term, double scale, const TruncationControl& ctrl) {
  ctrl.validate();
  SeriesValue out;
  double prev = 0.0;
  for (int n = 0; n < ctrl.max_terms; ++n) {
    const double t = scale * std::exp(log_term(n));
    if (!std::isfinite(t)) {
      out.converged = false;
      out.flag = "non-finite term";
      return out;
    }
    out.value += t;
    out.terms_used = n + 1;
    out.tail_estimate = t;
    if (n > 0 && t <= prev && t <= ctrl.tail_tol * out.value) return out;
    prev = t;
  }
  out.converged = false;
  out.flag = "tail not below tolerance at max_terms";
  return out;
}

void flag_small_hbar(SeriesValue& s, double h) {
  if (h < kMinHbar) {
    s.converged = false;
    s.flag = "slow convergence: hbar below 0.05";
  }
}

}  // namespace

SeriesValue quartic_series(const QuantumParam& hbar, const TruncationControl& ctrl) {
  const double h = hbar.hbar();
  const double lh = std::log(h);
  auto s = sum_log_terms(
      [&](int n) { return log_gamma(0.5 * n + 0.25) - 0.5 * n * lh - log_gamma(n + 1.0); },
      std::pow(h, 0.25) / std::sqrt(2.0), ctrl);
  flag_small_hbar(s, h);
  return s;
}

SeriesValue cubic_series(const QuantumParam& hbar, const TruncationControl& ctrl) {
  const double h = hbar.hbar();
  const double lh = std::log(h);
  const double l2h = std::log(2.0 * h);
  const double l3 = std::log(3.0);
  auto s = sum_log_terms(
      [&](int n) {
        const double two_thirds_n = 2.0 * n / 3.0;
        return -n * l2h - log_gamma(n + 1.0) + (two_thirds_n - 2.0 / 3.0) * l3 + (two_thirds_n + 1.0 / 3.0) * lh +
               log_gamma(two_thirds_n + 1.0 / 3.0);
      },
      1.0, ctrl);
  flag_small_hbar(s, h);
  return s;
}

std::pair<double, double> gamma_quarter_agm() {
  return {gamma(0.25), std::pow(2.0 * kPi, 0.75) / std::sqrt(agm(std::sqrt(2.0), 1.0))};
}

std::pair<double, double> gamma_third_agm() {
  const double m = agm(2.0, std::sqrt(2.0 + std::sqrt(3.0)));
  return {gamma(1.0 / 3.0),
          std::pow(kPi, 1.0 / 3.0) * std::pow(2.0, -2.0 / 9.0) * std::pow(3.0, 5.0 / 12.0) / std::cbrt(m)};
}

double gamma_product_ratio(double x, double b, int k_max) {
  if (!(x > 0.0)) throw DomainError("gamma_product_ratio: x must be > 0");
  if (!(b > 0.0) || b > 1.0) throw DomainError("gamma_product_ratio: b must lie in (0, 1]");
  if (k_max < 1) throw DomainError("gamma_product_ratio: K must be >= 1");
  // k = 1: [1/(1-b)] [x/(x+b)], and (1-b) Gamma(1-b) = Gamma(2-b).
  double log_prod = std::log(x) - std::log(x + b) - log_gamma(2.0 - b);
  for (int k = 2; k <= k_max; ++k) {
    log_prod += std::log(static_cast<double>(k)) + std::log(x + k - 1.0) - std::log(k - b) - std::log(x + k - 1.0 + b);
  }
  return std::exp(log_prod);
}

RadialQuarticPair radial_quartic_nd(int n, const QuantumParam& hbar, const TruncationControl& ctrl) {
  if (n < 1) throw DimensionError("radial_quartic_nd: n must be >= 1");
  const double h = hbar.hbar();
  const double lh = std::log(h);
  auto radial = [&](int m) { return 0.25 * (n - 2.0 * m) * lh + log_gamma(0.25 * (n + 2.0 * m)) - log_gamma(m + 1.0); };

  RadialQuarticPair out;
  const double ball = std::pow(kPi, 0.5 * n) / gamma(0.5 * n + 1.0);
  out.printed = sum_log_terms(radial, ball * std::pow(2.0, n - 4.0), ctrl);
  out.rederived = sum_log_terms(radial, sphere_area(n) * std::pow(2.0, 0.5 * n - 2.0), ctrl);
  flag_small_hbar(out.printed, h);
  flag_small_hbar(out.rederived, h);
  return out;
}

}  // namespace gaussint
