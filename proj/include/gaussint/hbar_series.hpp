#pragma once

// Series in the quantum parameter for quartic and cubic exponents, and the
// Gamma-value identities through the arithmetic-geometric mean.

#include "gaussint/core.hpp"

#include <utility>

namespace gaussint {

/// int e^{-x^4/4hbar + x^2/2hbar} dx over R, as (hbar^{1/4}/sqrt 2) sum Gamma(n/2+1/4) / (hbar^{n/2} n!).
SeriesValue quartic_series(const QuantumParam& hbar, const TruncationControl& ctrl);
/// int_0^inf e^{-x^3/3hbar + x^2/2hbar} dx as a Gamma series.
SeriesValue cubic_series(const QuantumParam& hbar, const TruncationControl& ctrl);

/// (Gamma(1/4), (2 pi)^{3/4} / agm(sqrt 2, 1)^{1/2})
std::pair<double, double> gamma_quarter_agm();
/// (Gamma(1/3), pi^{1/3} 2^{-2/9} 3^{5/12} / agm(2, sqrt(2 + sqrt 3))^{1/3})
std::pair<double, double> gamma_third_agm();

/// K-factor truncation of prod_k k (x+k-1) / ((k-b)(x+k-1+b)) divided by
/// Gamma(1-b); tends to Gamma(x+b)/Gamma(x). The k = 1 factor is combined
/// with Gamma(1-b) into Gamma(2-b), so b = 1 is allowed.
double gamma_product_ratio(double x, double b, int k_max);

struct RadialQuarticPair {
  /// Unit-ball volume and 2^{n-4} radial coefficient.
  SeriesValue printed;
  /// Unit-sphere area and 2^{n/2-2} radial coefficient.
  SeriesValue rederived;
};

/// int_{R^n} e^{-|t|^4/4hbar + |t|^2/2hbar} dt in both forms.
RadialQuarticPair radial_quartic_nd(int n, const QuantumParam& hbar, const TruncationControl& ctrl);

}  // namespace gaussint
