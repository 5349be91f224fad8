#pragma once

// Exterior algebra over psi_1, psi_1*, ..., psi_n, psi_n* and the Berezin
// integral. Generators are ordered psi_1 < psi_1* < psi_2 < ...; generator
// index 2(k-1) is psi_k and 2(k-1)+1 is psi_k*.

#include "gaussint/core.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace gaussint {

constexpr int kMaxGrassmannPairs = 16;

class GrassmannElement {
 public:
  using Mask = std::uint32_t;

  explicit GrassmannElement(int n_pairs);

  static GrassmannElement scalar(int n_pairs, cplx c);
  /// Product of the listed generators in the given order; repeated generators give 0.
  static GrassmannElement monomial(int n_pairs, std::span<const int> generators, cplx c = 1.0);
  /// psi_k, k is 1-based.
  static GrassmannElement psi(int n_pairs, int k);
  /// psi_k*, k is 1-based.
  static GrassmannElement psi_star(int n_pairs, int k);

  int n_pairs() const { return n_pairs_; }
  int n_generators() const { return 2 * n_pairs_; }
  cplx scalar_part() const;
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the canonically ordered monomial with the given generator set.
  cplx coefficient(std::span<const int> sorted_generators) const;
  /// (strictly increasing generator indices, coefficient), zero terms omitted.
  std::vector<std::pair<std::vector<int>, cplx>> monomials() const;

  const std::map<Mask, cplx>& terms() const { return terms_; }
  void add_term(Mask m, cplx c);

  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  GrassmannElement& operator*=(cplx c);
  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(GrassmannElement a, cplx c) { return a *= c; }
  friend GrassmannElement operator*(cplx c, GrassmannElement a) { return a *= c; }
  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
    return a.n_pairs_ == b.n_pairs_ && a.terms_ == b.terms_;
  }

 private:
  int n_pairs_;
  std::map<Mask, cplx> terms_;
};

/// Sign of the permutation sorting `generators` increasingly; 0 if any repeats.
int sort_sign(std::span<const int> generators);

GrassmannElement g_mul(const GrassmannElement& x, const GrassmannElement& y);
/// (ab)* = b* a*, psi_k <-> psi_k*, scalars conjugated.
GrassmannElement g_conj(const GrassmannElement& x);
/// e^x; a nonzero scalar part s is factored out as e^s.
GrassmannElement g_exp(const GrassmannElement& x);
/// Left derivative d/d(generator).
GrassmannElement left_derivative(const GrassmannElement& x, int generator);

/// Generators listed innermost first.
class BerezinMeasure {
 public:
  explicit BerezinMeasure(std::vector<int> order);
  /// prod_k dpsi_k* dpsi_k over all pairs.
  static BerezinMeasure full(int n_pairs);

  const std::vector<int>& order() const { return order_; }

 private:
  std::vector<int> order_;
};

/// Iterated integration, innermost generator first; what is left of the
/// element when the measure does not cover every generator.
GrassmannElement berezin_partial(const GrassmannElement& x, const BerezinMeasure& measure);
/// Scalar part of berezin_partial.
cplx berezin(const GrassmannElement& x, const BerezinMeasure& measure);

/// int psi_{i1} ... psi_{in} dpsi_n ... dpsi_1, indices 1-based.
int epsilon(std::span<const int> indices);

/// -(1/2) sum_ij psi_i* A_ij psi_j
GrassmannElement fermionic_exponent(const CMat& a);

struct FermionicGaussian {
  cplx brute_force;
  cplx det_a;
  cplx sqrt_det_claim;
};

/// int e^{-(1/2) psi_i* A_ij psi_j} prod dpsi_k* dpsi_k for Hermitian A, n <= 6.
FermionicGaussian fermionic_gaussian(const CMat& a);

struct MixedGaussian {
  double value = 0.0;
  double fermionic = 0.0;
  double bosonic = 0.0;
  double claim = 0.0;
  /// Values at k = 0.5, 1, 2, 4.
  std::vector<double> sweep;
  /// max/min - 1 over the sweep.
  double flatness = 0.0;
  bool k_independent = false;
};

/// Fermionic factor at A = k I times the bosonic (2 pi / k)^{n/2}, n <= 4.
MixedGaussian mixed_gaussian(int n, double k);

/// int (f1 + f2 psi + f3 psi*) e^{-(1/2hbar) g} dpsi* dpsi with g = -psi* (k/2) psi, k = 1/hbar.
cplx heuristic_laplace_grassmann(cplx f1, cplx f2, cplx f3, const QuantumParam& hbar);
/// The stated value 1/(2 hbar).
double heuristic_laplace_claim(const QuantumParam& hbar);

}  // namespace gaussint
