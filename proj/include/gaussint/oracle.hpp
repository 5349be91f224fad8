#pragma once

// Brute-force numerical oracles. Nothing here calls a closed-form evaluator,
// so these routines can adjudicate every identity in the catalog.

#include "gaussint/core.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gaussint {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct OracleBudget {
  long max_evaluations = 2'000'000;
  double target_tol = 1e-12;
  long mc_samples = 1'000'000;
  std::uint64_t seed = 42;

  void validate() const;
};

struct QuadResult {
  cplx value{0.0, 0.0};
  double abs_error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
  /// Empty when converged; otherwise a short reason.
  std::string flag;
};

using Integrand1D = std::function<cplx(double)>;
using IntegrandND = std::function<cplx(const Vec&)>;

/// Globally adaptive Gauss-Kronrod (7/15) quadrature. Infinite endpoints are
/// mapped to a finite interval by a rational change of variables. Stops when
/// the error estimate falls below target_tol * max(1, |value|).
QuadResult integrate_1d(const Integrand1D& f, double lower, double upper, const OracleBudget& budget);

/// Damped-integral extrapolation over the real line: I(eps) = int f e^{-eps x^2}
/// for each eps, then Neville extrapolation to eps = 0.
QuadResult integrate_1d_oscillatory(const Integrand1D& f, std::span<const double> damping,
                                    const OracleBudget& budget);

/// The default damping ladder {0.2, 0.1, 0.05, 0.025}.
std::span<const double> default_damping();

/// Polynomial extrapolation of samples (x_i, y_i) to x = 0 by Neville's scheme.
/// The error estimate is the last correction of the tableau.
std::pair<cplx, double> extrapolate_to_zero(std::span<const double> x, std::span<const cplx> y);

/// Integral over R^n. n <= 3: nested adaptive quadrature. 4 <= n <= 8: Monte
/// Carlo with Gaussian importance sampling (density N(0, covariance), identity
/// when covariance is empty); error bar is 3 standard errors. The random stream
/// is derived from (budget.seed, call_id).
QuadResult integrate_nd(const IntegrandND& f, int n, const OracleBudget& budget,
                        std::string_view call_id = "", const Mat& covariance = Mat());

/// Nested adaptive quadrature over a box (infinite bounds allowed), n <= 3.
QuadResult integrate_nd(const IntegrandND& f, std::span<const double> lower, std::span<const double> upper,
                        const OracleBudget& budget);

/// Damped-integral extrapolation over R^n, n <= 3 (nested quadrature per eps).
QuadResult integrate_nd_oscillatory(const IntegrandND& f, int n, std::span<const double> damping,
                                    const OracleBudget& budget);

/// Tensor Gauss-Hermite rule over R^n for integrands with a Gaussian envelope
/// of width ~scale. Nodes x = scale * t; error estimate is the change between
/// `nodes` and `nodes + 8` points per axis.
QuadResult integrate_gauss_hermite_nd(const IntegrandND& f, int n, int nodes, double scale);

/// Physicists' Gauss-Hermite nodes and weights (weight e^{-t^2}) via Golub-Welsch.
std::pair<Vec, Vec> gauss_hermite_rule(int nodes);

/// Principal value of int_lower^upper f(t) dt with a simple pole at `pole`.
/// Symmetric excisions of radius 1e-2 .. 1e-6 are extrapolated to zero radius.
QuadResult principal_value(const Integrand1D& f, double pole, double lower, double upper,
                           const OracleBudget& budget);
/// Principal value over the whole real line.
QuadResult principal_value(const Integrand1D& f, double pole, const OracleBudget& budget);

/// Sums term(first), term(first+1), ... until 10 |term| <= tail_tol |sum| with
/// non-increasing magnitudes. Error estimate is 10 |last term|.
QuadResult sum_series(const std::function<cplx(int)>& term, const TruncationControl& ctrl, int first = 0);

using Matching = std::vector<std::pair<int, int>>;
/// All perfect matchings of the given labels, (2m-1)!! of them.
std::vector<Matching> pairings(std::span<const int> labels);

/// One monomial of an exponent: coefficient times the product of generators
/// in the listed order.
struct GrassmannTerm {
  std::vector<int> generators;
  cplx coefficient;
};

/// Expands exp(exponent) exactly over `n_generators` anticommuting generators
/// and integrates with the measure whose generators are listed innermost first.
cplx grassmann_expand_integral(std::span<const GrassmannTerm> exponent, std::span<const int> measure_order,
                               int n_generators);

}  // namespace gaussint
