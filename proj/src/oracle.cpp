#include "gaussint/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <queue>
#include <random>

namespace gaussint {

void OracleBudget::validate() const {
  if (max_evaluations < 1 || !(target_tol > 0.0) || mc_samples < 2) {
    throw DomainError("OracleBudget: all fields must be positive");
  }
}

namespace {

// Value plus an absolute error already carried by the integrand (nested use).
using ValueErr = std::pair<cplx, double>;
using InnerFn = std::function<ValueErr(double)>;

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  cplx value;
  double err = 0.0;
  // Error inherited from nested integrands; subdivision cannot reduce it.
  double inherited = 0.0;
  bool operator<(const Panel& o) const { return err < o.err; }
};

struct PanelEval {
  Panel panel;
  bool finite = true;
};

PanelEval kronrod(const InnerFn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  std::array<cplx, 15> fv;
  std::array<double, 15> ev;
  bool finite = true;
  auto eval = [&](int slot, double x) {
    const auto [v, e] = f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || !std::isfinite(e)) finite = false;
    fv[slot] = v;
    ev[slot] = e;
  };
  eval(0, c);
  for (int j = 0; j < 7; ++j) {
    eval(1 + 2 * j, c - h * kXgk[j]);
    eval(2 + 2 * j, c + h * kXgk[j]);
  }
  cplx resk = kWgk[7] * fv[0];
  cplx resg = kWg[3] * fv[0];
  double inner = kWgk[7] * ev[0];
  for (int j = 0; j < 7; ++j) {
    const cplx pair = fv[1 + 2 * j] + fv[2 + 2 * j];
    resk += kWgk[j] * pair;
    inner += kWgk[j] * (ev[1 + 2 * j] + ev[2 + 2 * j]);
    if (j % 2 == 1) resg += kWg[j / 2] * pair;
  }
  const cplx mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fv[0] - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv[1 + 2 * j] - mean) + std::abs(fv[2 + 2 * j] - mean));
  }
  resasc *= std::abs(h);
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * std::abs(resk * h));
  return {Panel{a, b, resk * h, err, std::abs(h) * inner}, finite};
}

QuadResult adaptive(const InnerFn& f, double a, double b, const OracleBudget& budget) {
  QuadResult out;
  std::priority_queue<Panel> queue;
  constexpr int kInitial = 4;
  for (int i = 0; i < kInitial; ++i) {
    const double lo = a + (b - a) * i / kInitial;
    const double hi = (i + 1 == kInitial) ? b : a + (b - a) * (i + 1) / kInitial;
    auto pe = kronrod(f, lo, hi);
    out.evaluations += 15;
    if (!pe.finite) {
      out.converged = false;
      out.flag = "non-finite integrand";
    }
    queue.push(pe.panel);
  }
  auto totals = [&] {
    auto copy = queue;
    cplx v = 0.0;
    double e = 0.0;
    double inh = 0.0;
    while (!copy.empty()) {
      v += copy.top().value;
      e += copy.top().err;
      inh += copy.top().inherited;
      copy.pop();
    }
    return std::tuple{v, e, inh};
  };
  auto [value, err, inherited] = totals();
  while (out.converged && err > budget.target_tol * std::max(1.0, std::abs(value))) {
    if (out.evaluations + 30 > budget.max_evaluations) {
      out.converged = false;
      out.flag = "evaluation budget exhausted";
      break;
    }
    const Panel worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) {
      out.converged = false;
      out.flag = "roundoff limit reached";
      break;
    }
    queue.pop();
    auto left = kronrod(f, worst.a, mid);
    auto right = kronrod(f, mid, worst.b);
    out.evaluations += 30;
    if (!left.finite || !right.finite) {
      out.converged = false;
      out.flag = "non-finite integrand";
    }
    value += left.panel.value + right.panel.value - worst.value;
    err += left.panel.err + right.panel.err - worst.err;
    queue.push(left.panel);
    queue.push(right.panel);
    if (queue.size() % 64 == 0) std::tie(value, err, inherited) = totals();
  }
  std::tie(value, err, inherited) = totals();
  out.value = value;
  out.abs_error_estimate = err + inherited;
  return out;
}

// Maps [lower, upper] (possibly infinite) onto a finite parameter interval.
QuadResult integrate_mapped(const InnerFn& g, double lower, double upper, const OracleBudget& budget) {
  if (std::isnan(lower) || std::isnan(upper)) throw DomainError("integrate_1d: NaN bound");
  if (lower == upper) return QuadResult{0.0, 0.0, 1, true, ""};
  if (lower > upper) {
    auto r = integrate_mapped(g, upper, lower, budget);
    r.value = -r.value;
    return r;
  }
  const bool lo_inf = std::isinf(lower);
  const bool hi_inf = std::isinf(upper);
  if (lo_inf && hi_inf) {
    return adaptive(
        [&](double t) {
          const double d = 1.0 - t * t;
          const double jac = (1.0 + t * t) / (d * d);
          auto [v, e] = g(t / d);
          return ValueErr{v * jac, e * jac};
        },
        -1.0, 1.0, budget);
  }
  if (hi_inf) {
    return adaptive(
        [&](double t) {
          const double d = 1.0 - t;
          const double jac = 1.0 / (d * d);
          auto [v, e] = g(lower + t / d);
          return ValueErr{v * jac, e * jac};
        },
        0.0, 1.0, budget);
  }
  if (lo_inf) {
    return adaptive(
        [&](double t) {
          const double d = 1.0 - t;
          const double jac = 1.0 / (d * d);
          auto [v, e] = g(upper - t / d);
          return ValueErr{v * jac, e * jac};
        },
        0.0, 1.0, budget);
  }
  return adaptive(g, lower, upper, budget);
}

void merge_status(QuadResult& into, const QuadResult& from) {
  into.evaluations += from.evaluations;
  if (!from.converged) {
    into.converged = false;
    if (into.flag.empty()) into.flag = from.flag;
  }
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

QuadResult monte_carlo(const IntegrandND& f, int n, const OracleBudget& budget, std::string_view call_id,
                       const Mat& covariance) {
  Mat cov = covariance.size() == 0 ? Mat(Mat::Identity(n, n)) : covariance;
  if (cov.rows() != n || cov.cols() != n) throw DimensionError("integrate_nd: covariance shape mismatch");
  Eigen::LLT<Mat> llt(cov);
  if (llt.info() != Eigen::Success) throw DomainError("integrate_nd: covariance must be SPD");
  const Mat l = llt.matrixL();
  const double log_norm = 0.5 * n * std::log(2.0 * kPi) + l.diagonal().array().log().sum();

  std::mt19937_64 rng(splitmix64(budget.seed ^ fnv1a(call_id)));
  std::normal_distribution<double> normal;
  Vec z(n);
  Vec x(n);
  cplx mean = 0.0;
  double m2 = 0.0;
  for (long i = 0; i < budget.mc_samples; ++i) {
    for (int j = 0; j < n; ++j) z(j) = normal(rng);
    x.noalias() = l * z;
    const cplx w = f(x) * std::exp(0.5 * z.squaredNorm() + log_norm);
    const cplx delta = w - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += std::norm(delta) * static_cast<double>(i) / static_cast<double>(i + 1);
  }
  const double n_s = static_cast<double>(budget.mc_samples);
  const double se = std::sqrt(m2 / (n_s - 1.0) / n_s);
  QuadResult out{mean, 3.0 * se, budget.mc_samples, true, ""};
  if (!std::isfinite(mean.real()) || !std::isfinite(mean.imag())) {
    out.converged = false;
    out.flag = "non-finite integrand";
  }
  return out;
}

QuadResult nested(const IntegrandND& f, std::span<const double> lower, std::span<const double> upper,
                  const OracleBudget& budget) {
  const int n = static_cast<int>(lower.size());
  Vec x(n);
  QuadResult status;
  std::function<ValueErr(int)> level = [&](int d) -> ValueErr {
    if (d == n) {
      ++status.evaluations;
      return {f(x), 0.0};
    }
    auto r = integrate_mapped(
        [&](double t) {
          x(d) = t;
          return level(d + 1);
        },
        lower[d], upper[d], budget);
    if (!r.converged) {
      status.converged = false;
      if (status.flag.empty()) status.flag = r.flag;
    }
    return {r.value, r.abs_error_estimate};
  };
  const auto [v, e] = level(0);
  status.value = v;
  status.abs_error_estimate = e;
  return status;
}

}  // namespace

QuadResult integrate_1d(const Integrand1D& f, double lower, double upper, const OracleBudget& budget) {
  budget.validate();
  return integrate_mapped([&](double x) { return ValueErr{f(x), 0.0}; }, lower, upper, budget);
}

std::span<const double> default_damping() {
  static constexpr std::array<double, 4> kLadder = {0.2, 0.1, 0.05, 0.025};
  return kLadder;
}

std::pair<cplx, double> extrapolate_to_zero(std::span<const double> x, std::span<const cplx> y) {
  const std::size_t m = x.size();
  if (m == 0 || y.size() != m) throw DimensionError("extrapolate_to_zero: sample size mismatch");
  if (m == 1) return {y[0], std::abs(y[0])};
  // p[i] holds P_{i..i+level}
  std::vector<cplx> p(y.begin(), y.end());
  std::vector<cplx> prev;
  for (std::size_t level = 1; level < m; ++level) {
    prev = p;
    for (std::size_t i = 0; i + level < m; ++i) {
      const double xi = x[i];
      const double xj = x[i + level];
      p[i] = (xi * prev[i + 1] - xj * prev[i]) / (xi - xj);
    }
  }
  // prev[1] is the extrapolant that drops the first sample.
  return {p[0], std::abs(p[0] - prev[1])};
}

QuadResult integrate_1d_oscillatory(const Integrand1D& f, std::span<const double> damping,
                                    const OracleBudget& budget) {
  budget.validate();
  if (damping.empty()) throw DomainError("integrate_1d_oscillatory: empty damping sequence");
  QuadResult out;
  out.evaluations = 0;
  std::vector<cplx> values;
  double quad_err = 0.0;
  for (double eps : damping) {
    if (!(eps > 0.0)) throw DomainError("integrate_1d_oscillatory: damping must be positive");
    auto r = integrate_1d([&](double x) { return f(x) * std::exp(-eps * x * x); }, -kInf, kInf, budget);
    merge_status(out, r);
    values.push_back(r.value);
    quad_err = std::max(quad_err, r.abs_error_estimate);
  }
  const auto [v, e] = extrapolate_to_zero(damping, values);
  out.value = v;
  out.abs_error_estimate = e + quad_err;
  if (values.size() >= 2 && e > std::abs(values.back() - values[values.size() - 2])) {
    out.converged = false;
    out.flag = "divergent extrapolation";
  }
  return out;
}

QuadResult integrate_nd(const IntegrandND& f, int n, const OracleBudget& budget, std::string_view call_id,
                        const Mat& covariance) {
  budget.validate();
  if (n < 1) throw DimensionError("integrate_nd: n must be >= 1");
  if (n > 8) throw DimensionError("integrate_nd: dimension > 8 not supported");
  if (n <= 3) {
    std::vector<double> lo(n, -kInf);
    std::vector<double> hi(n, kInf);
    return nested(f, lo, hi, budget);
  }
  return monte_carlo(f, n, budget, call_id, covariance);
}

QuadResult integrate_nd(const IntegrandND& f, std::span<const double> lower, std::span<const double> upper,
                        const OracleBudget& budget) {
  budget.validate();
  if (lower.size() != upper.size() || lower.empty()) throw DimensionError("integrate_nd: bound size mismatch");
  if (lower.size() > 3) throw DimensionError("integrate_nd: box quadrature supports n <= 3");
  return nested(f, lower, upper, budget);
}

QuadResult integrate_nd_oscillatory(const IntegrandND& f, int n, std::span<const double> damping,
                                    const OracleBudget& budget) {
  budget.validate();
  if (n < 1 || n > 3) throw DimensionError("integrate_nd_oscillatory: supports 1 <= n <= 3");
  if (damping.empty()) throw DomainError("integrate_nd_oscillatory: empty damping sequence");
  QuadResult out;
  std::vector<cplx> values;
  double quad_err = 0.0;
  std::vector<double> lo(n, -kInf);
  std::vector<double> hi(n, kInf);
  for (double eps : damping) {
    if (!(eps > 0.0)) throw DomainError("integrate_nd_oscillatory: damping must be positive");
    auto r = nested([&](const Vec& x) { return f(x) * std::exp(-eps * x.squaredNorm()); }, lo, hi, budget);
    merge_status(out, r);
    values.push_back(r.value);
    quad_err = std::max(quad_err, r.abs_error_estimate);
  }
  const auto [v, e] = extrapolate_to_zero(damping, values);
  out.value = v;
  out.abs_error_estimate = e + quad_err;
  if (values.size() >= 2 && e > std::abs(values.back() - values[values.size() - 2])) {
    out.converged = false;
    out.flag = "divergent extrapolation";
  }
  return out;
}

std::pair<Vec, Vec> gauss_hermite_rule(int nodes) {
  if (nodes < 1 || nodes > 200) throw DomainError("gauss_hermite_rule: nodes must be in [1, 200]");
  Mat jacobi = Mat::Zero(nodes, nodes);
  for (int k = 1; k < nodes; ++k) {
    jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(0.5 * k);
  }
  Eigen::SelfAdjointEigenSolver<Mat> eig(jacobi);
  Vec w = kSqrtPi * eig.eigenvectors().row(0).transpose().array().square();
  return {eig.eigenvalues(), w};
}

QuadResult integrate_gauss_hermite_nd(const IntegrandND& f, int n, int nodes, double scale) {
  if (n < 1 || n > 8) throw DimensionError("integrate_gauss_hermite_nd: 1 <= n <= 8");
  if (!(scale > 0.0)) throw DomainError("integrate_gauss_hermite_nd: scale must be positive");
  auto tensor = [&](int m, long& evals) {
    auto [t, w] = gauss_hermite_rule(m);
    // Weight for plain integrals: w e^{t^2}, times the Jacobian of x = scale t.
    Vec wt(m);
    for (int i = 0; i < m; ++i) wt(i) = w(i) * std::exp(t(i) * t(i)) * scale;
    std::vector<int> idx(n, 0);
    Vec x(n);
    cplx sum = 0.0;
    while (true) {
      double weight = 1.0;
      for (int d = 0; d < n; ++d) {
        x(d) = scale * t(idx[d]);
        weight *= wt(idx[d]);
      }
      sum += weight * f(x);
      ++evals;
      int d = 0;
      while (d < n && ++idx[d] == m) idx[d++] = 0;
      if (d == n) break;
    }
    return sum;
  };
  QuadResult out;
  out.evaluations = 0;
  const cplx coarse = tensor(nodes, out.evaluations);
  const cplx fine = tensor(nodes + 8, out.evaluations);
  out.value = fine;
  out.abs_error_estimate = std::abs(fine - coarse);
  if (!std::isfinite(fine.real()) || !std::isfinite(fine.imag())) {
    out.converged = false;
    out.flag = "non-finite integrand";
  }
  return out;
}

QuadResult principal_value(const Integrand1D& f, double pole, double lower, double upper,
                           const OracleBudget& budget) {
  budget.validate();
  if (!(lower < pole && pole < upper)) throw DomainError("principal_value: pole must lie inside (lower, upper)");
  const double delta0 = std::min({1.0, 0.5 * (pole - lower), 0.5 * (upper - pole)});
  QuadResult out;
  out.evaluations = 0;
  const auto left = integrate_1d(f, lower, pole - delta0, budget);
  const auto right = integrate_1d(f, pole + delta0, upper, budget);
  merge_status(out, left);
  merge_status(out, right);
  const cplx outer = left.value + right.value;
  double err = left.abs_error_estimate + right.abs_error_estimate;

  auto paired = [&](double s) { return f(pole + s) + f(pole - s); };
  std::vector<double> radii;
  std::vector<cplx> values;
  double inner_err = 0.0;
  for (int j = 2; j <= 6; ++j) {
    const double r = delta0 * std::pow(10.0, -j);
    const auto inner = integrate_1d(paired, r, delta0, budget);
    merge_status(out, inner);
    radii.push_back(r);
    values.push_back(outer + inner.value);
    inner_err = std::max(inner_err, inner.abs_error_estimate);
  }
  const auto [v, e] = extrapolate_to_zero(radii, values);
  out.value = v;
  out.abs_error_estimate = err + inner_err + e;

  const double s1 = delta0 * 1e-6;
  const double s2 = delta0 * 1e-8;
  const double r1 = std::abs(s1 * paired(s1));
  const double r2 = std::abs(s2 * paired(s2));
  if (r1 > 1e-12 && r2 > 0.1 * r1) {
    out.converged = false;
    out.flag = "pole contributions do not cancel";
  }
  return out;
}

QuadResult principal_value(const Integrand1D& f, double pole, const OracleBudget& budget) {
  return principal_value(f, pole, -kInf, kInf, budget);
}

QuadResult sum_series(const std::function<cplx(int)>& term, const TruncationControl& ctrl, int first) {
  ctrl.validate();
  QuadResult out;
  out.evaluations = 0;
  cplx sum = 0.0;
  double prev = kInf;
  for (int i = 0; i < ctrl.max_terms; ++i) {
    const cplx t = term(first + i);
    ++out.evaluations;
    sum += t;
    const double mag = std::abs(t);
    if (!std::isfinite(mag)) {
      out.converged = false;
      out.flag = "non-finite term";
      break;
    }
    if (mag <= prev && 10.0 * mag <= ctrl.tail_tol * std::abs(sum)) {
      out.value = sum;
      out.abs_error_estimate = 10.0 * mag;
      return out;
    }
    if (mag == 0.0 && sum == cplx(0.0)) {
      out.value = sum;
      return out;
    }
    prev = mag;
    out.abs_error_estimate = 10.0 * mag;
  }
  if (out.converged) {
    out.converged = false;
    out.flag = "tail not below tolerance at max_terms";
  }
  out.value = sum;
  return out;
}

std::vector<Matching> pairings(std::span<const int> labels) {
  if (labels.size() % 2 != 0) throw DomainError("pairings: odd number of labels");
  std::vector<Matching> out;
  if (labels.empty()) {
    out.emplace_back();
    return out;
  }
  const int first = labels[0];
  for (std::size_t j = 1; j < labels.size(); ++j) {
    std::vector<int> rest;
    rest.reserve(labels.size() - 2);
    for (std::size_t k = 1; k < labels.size(); ++k) {
      if (k != j) rest.push_back(labels[k]);
    }
    for (auto& m : pairings(rest)) {
      m.insert(m.begin(), {first, labels[j]});
      out.push_back(std::move(m));
    }
  }
  return out;
}

namespace {

using Sparse = std::map<std::uint32_t, cplx>;

// Sign of (monomial a)(monomial b) after reordering to ascending generators.
int product_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

Sparse multiply(const Sparse& x, const Sparse& y) {
  Sparse out;
  for (const auto& [ma, ca] : x) {
    for (const auto& [mb, cb] : y) {
      if ((ma & mb) != 0) continue;
      out[ma | mb] += static_cast<double>(product_sign(ma, mb)) * ca * cb;
    }
  }
  return out;
}

}  // namespace

cplx grassmann_expand_integral(std::span<const GrassmannTerm> exponent, std::span<const int> measure_order,
                               int n_generators) {
  if (n_generators < 0 || n_generators > 24) throw DomainError("grassmann_expand_integral: 0..24 generators");
  if (static_cast<int>(measure_order.size()) != n_generators) {
    throw DomainError("grassmann_expand_integral: measure must list each generator exactly once");
  }
  std::uint32_t seen = 0;
  for (int g : measure_order) {
    if (g < 0 || g >= n_generators || (seen >> g & 1u)) {
      throw DomainError("grassmann_expand_integral: measure must list each generator exactly once");
    }
    seen |= 1u << g;
  }

  Sparse x;
  for (const auto& term : exponent) {
    Sparse mono{{0u, term.coefficient}};
    for (int g : term.generators) {
      if (g < 0 || g >= n_generators) throw DomainError("grassmann_expand_integral: generator out of range");
      mono = multiply(mono, Sparse{{1u << g, 1.0}});
    }
    for (const auto& [m, c] : mono) x[m] += c;
  }
  const cplx scalar = x.count(0u) ? x[0u] : cplx(0.0);
  x.erase(0u);

  Sparse result{{0u, 1.0}};
  Sparse power{{0u, 1.0}};
  for (int k = 1; k <= n_generators; ++k) {
    power = multiply(power, x);
    if (power.empty()) break;
    for (const auto& [m, c] : power) result[m] += c / factorial(k);
  }

  // Berezin integration: left derivative, innermost generator first.
  Sparse current = result;
  for (int g : measure_order) {
    Sparse next;
    for (const auto& [m, c] : current) {
      if (!(m >> g & 1u)) continue;
      const int sign = (std::popcount(m & ((1u << g) - 1u)) % 2 == 0) ? 1 : -1;
      next[m & ~(1u << g)] += static_cast<double>(sign) * c;
    }
    current = std::move(next);
  }
  const cplx top = current.count(0u) ? current[0u] : cplx(0.0);
  return std::exp(scalar) * top;
}

}  // namespace gaussint
