#include "gaussint/scalar1d.hpp"

#include <cmath>

namespace gaussint {

double gauss_scaled(double a) {
  if (!(a > 0.0)) throw DomainError("gauss_scaled: a must be > 0");
  return std::sqrt(kPi / a);
}

cplx gauss_complex_quadratic(double a, cplx eta) {
  if (!(a > 0.0)) throw DomainError("gauss_complex_quadratic: a must be > 0");
  return std::exp(eta * eta / (4.0 * a)) * std::sqrt(kPi / a);
}

double gauss_even_moment(int n) {
  if (n < 0) throw DomainError("gauss_even_moment: n must be >= 0");
  // (2n)! / (n! 4^n) = (2n-1)!! / 2^n
  return odd_double_factorial(n) * kSqrtPi / (2.0 * std::pow(2.0, n));
}

double gauss_moment_scaled(int n, double a) {
  if (n < 2 || n % 2 != 0) throw DomainError("gauss_moment_scaled: n must be even and >= 2");
  if (!(a > 0.0)) throw DomainError("gauss_moment_scaled: a must be > 0");
  return odd_double_factorial(n / 2) * kSqrtPi / (std::pow(2.0, n / 2) * std::pow(a, 0.5 * (n + 1)));
}

double gauss_difference(double p, double q) {
  if (!(p >= 0.0 && q > p)) throw DomainError("gauss_difference: requires q > p >= 0");
  return kSqrtPi * (std::sqrt(q) - std::sqrt(p));
}

std::vector<double> poly_pm(int m, double k) {
  if (m < 0) throw DomainError("poly_pm: m must be >= 0");
  if (!(k > 0.0)) throw DomainError("poly_pm: k must be > 0");
  // d/dxi [P e^{-xi^2/2k}] = (P' - xi P / k) e^{-xi^2/2k}; after factoring (-1/k)
  // per step the recurrence is P_{m+1} = xi P_m - k P_m'.
  std::vector<double> p{1.0};
  for (int step = 0; step < m; ++step) {
    std::vector<double> next(p.size() + 1, 0.0);
    for (std::size_t j = 0; j < p.size(); ++j) next[j + 1] += p[j];
    for (std::size_t j = 1; j < p.size(); ++j) next[j - 1] -= k * static_cast<double>(j) * p[j];
    p = std::move(next);
  }
  return p;
}

cplx hermite_moment(int m, double k, double xi) {
  const auto p = poly_pm(m, k);
  double pv = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) pv = pv * xi + *it;
  return std::sqrt(2.0 * kPi) * std::pow(-kI, m) * std::pow(k, -(m + 0.5)) * pv *
         std::exp(-xi * xi / (2.0 * k));
}

double stretched_exponential(double m) {
  if (!(m >= 1.0)) throw DomainError("stretched_exponential: m must be >= 1");
  return gamma((1.0 + m) / m);
}

SeriesValue nested_exponential(const TruncationControl& ctrl) {
  ctrl.validate();
  SeriesValue out;
  double term_mag = 1.0;
  for (int k = 1; k <= ctrl.max_terms; ++k) {
    term_mag /= k;  // 1/k!
    const double t = ((k % 2 == 0) ? 1.0 : -1.0) * term_mag * std::sqrt(kPi / k);
    out.value += t;
    out.terms_used = k;
    out.tail_estimate = 10.0 * std::abs(t);
    if (out.tail_estimate <= ctrl.tail_tol * std::abs(out.value)) return out;
  }
  out.converged = false;
  out.flag = "tail not below tolerance at max_terms";
  return out;
}

std::vector<Identity1D> rewrite_integrands() {
  std::vector<Identity1D> out;
  out.push_back({"log_form", [](double t) { return cplx(1.0 / (2.0 * std::sqrt(std::log(t)))); }, 1.0, kInf,
                 cplx(kSqrtPi), "substitution x^2 = ln t"});
  out.push_back({"self_power", [](double s) { return cplx(std::pow(s, -std::log(s) - 1.0)); }, 0.0, kInf,
                 cplx(kSqrtPi), "substitution e^x = s"});
  out.push_back({"gudermann",
                 [](double x) {
                   // (1 + sin phi) / cos phi with phi = arctan(e^{-x^2}) - pi/2, in a form
                   // that stays finite where cos phi underflows.
                   return cplx(std::tan(0.5 * std::atan(std::exp(-x * x))));
                 },
                 -kInf, kInf, cplx(kSqrtPi), "Gudermannian rewrite"});
  return out;
}

double mills_psi(double x) {
  if (x < 0.0) throw DomainError("mills_psi: x must be >= 0");
  if (x <= 25.0) return 0.5 * kSqrtPi * erfcx(x);
  // 1/(2x) sum (-1)^k (2k-1)!! / (2x^2)^k, truncated at its smallest term.
  const double u = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 30; ++k) {
    const double next = -term * (2.0 * k - 1.0) * u;
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
  }
  return sum / (2.0 * x);
}

namespace {

IntPoly recur(const IntPoly& cur, const IntPoly& prev, int n) {
  // 2x cur + 2n prev
  IntPoly next(std::max(cur.size() + 1, prev.size()), BigInt(0));
  for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2 * cur[j];
  for (std::size_t j = 0; j < prev.size(); ++j) next[j] += 2 * n * prev[j];
  return next;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntPoly trimmed(IntPoly p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace

ConvergentPair convergent_pair(int n) {
  if (n < 0) throw DomainError("convergent_pair: n must be >= 0");
  IntPoly p_prev{1};
  IntPoly q_prev{0};
  if (n == 0) return {0, p_prev, q_prev};
  IntPoly p{0, 2};
  IntPoly q{1};
  for (int k = 1; k < n; ++k) {
    IntPoly p_next = recur(p, p_prev, k);
    IntPoly q_next = recur(q, q_prev, k);
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
  return {n, trimmed(p), trimmed(q)};
}

double eval_poly(const IntPoly& p, double x) {
  double v = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + it->convert_to<double>();
  return v;
}

double cf_convergent(int n, double a) {
  if (!(a > 0.0)) throw DomainError("cf_convergent: a must be > 0");
  const auto pair = convergent_pair(n);
  return eval_poly(pair.q, a) / eval_poly(pair.p, a);
}

IntPoly cf_determinant(int n) {
  const auto cur = convergent_pair(n);
  const auto next = convergent_pair(n + 1);
  IntPoly lhs = poly_mul(next.q, cur.p);
  const IntPoly rhs = poly_mul(next.p, cur.q);
  lhs.resize(std::max(lhs.size(), rhs.size()), BigInt(0));
  for (std::size_t j = 0; j < rhs.size(); ++j) lhs[j] -= rhs[j];
  return trimmed(lhs);
}

cplx plasma_d(cplx x) {
  if (!(x.imag() > 0.0)) throw DomainError("plasma_d: requires Im x > 0");
  // 1 + erf(ix) = erfc(-ix), and e^{-x^2} = e^{(-ix)^2}.
  return kI * kSqrtPi * erfcx(-kI * x);
}

cplx plasma_incomplete(double nu, cplx x, const OracleBudget& budget) {
  if (!(x.imag() > 0.0)) throw DomainError("plasma_incomplete: requires Im x > 0");
  const auto r = integrate_1d([&](double t) { return std::exp(-t * t) / (t - x); }, nu, kInf, budget);
  return r.value / kSqrtPi;
}

cplx plasma_ode_residual(double nu, cplx x, double h, const OracleBudget& budget) {
  const cplx d = plasma_incomplete(nu, x, budget);
  const cplx deriv = (plasma_incomplete(nu, x + h, budget) - plasma_incomplete(nu, x - h, budget)) / (2.0 * h);
  const cplx rhs = std::exp(-nu * nu) / (kSqrtPi * (nu - x)) - 1.0 + erf(nu);
  return deriv + 2.0 * x * d - rhs;
}

}  // namespace gaussint
