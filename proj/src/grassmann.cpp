#include "gaussint/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace gaussint {

namespace {

using Mask = GrassmannElement::Mask;

void check_pairs(int n_pairs) {
  if (n_pairs < 1 || n_pairs > kMaxGrassmannPairs) {
    throw DimensionError("GrassmannElement: n_pairs must lie in 1.." + std::to_string(kMaxGrassmannPairs));
  }
}

void check_same(const GrassmannElement& x, const GrassmannElement& y) {
  if (x.n_pairs() != y.n_pairs()) throw DimensionError("Grassmann elements over different generator sets");
}

void check_generator(int n_pairs, int g) {
  if (g < 0 || g >= 2 * n_pairs) throw DimensionError("generator index out of range");
}

// Sign of a * b for disjoint canonical monomials: number of (i in a, j in b) with i > j.
int product_sign(Mask a, Mask b) {
  int swaps = 0;
  for (Mask rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace

int sort_sign(std::span<const int> generators) {
  int inversions = 0;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (generators[i] == generators[j]) return 0;
      if (generators[i] > generators[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

GrassmannElement::GrassmannElement(int n_pairs) : n_pairs_(n_pairs) { check_pairs(n_pairs); }

GrassmannElement GrassmannElement::scalar(int n_pairs, cplx c) {
  GrassmannElement e(n_pairs);
  e.add_term(0, c);
  return e;
}

GrassmannElement GrassmannElement::monomial(int n_pairs, std::span<const int> generators, cplx c) {
  GrassmannElement e(n_pairs);
  Mask m = 0;
  for (int g : generators) {
    check_generator(n_pairs, g);
    m |= Mask{1} << g;
  }
  const int s = sort_sign(generators);
  if (s != 0) e.add_term(m, static_cast<double>(s) * c);
  return e;
}

GrassmannElement GrassmannElement::psi(int n_pairs, int k) {
  const int g = 2 * (k - 1);
  return monomial(n_pairs, std::span<const int>(&g, 1));
}

GrassmannElement GrassmannElement::psi_star(int n_pairs, int k) {
  const int g = 2 * (k - 1) + 1;
  return monomial(n_pairs, std::span<const int>(&g, 1));
}

cplx GrassmannElement::scalar_part() const {
  const auto it = terms_.find(0);
  return it == terms_.end() ? cplx{} : it->second;
}

cplx GrassmannElement::coefficient(std::span<const int> sorted_generators) const {
  Mask m = 0;
  for (int g : sorted_generators) {
    check_generator(n_pairs_, g);
    m |= Mask{1} << g;
  }
  const auto it = terms_.find(m);
  return it == terms_.end() ? cplx{} : it->second;
}

std::vector<std::pair<std::vector<int>, cplx>> GrassmannElement::monomials() const {
  std::vector<std::pair<std::vector<int>, cplx>> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::vector<int> gens;
    for (Mask rest = m; rest != 0; rest &= rest - 1) gens.push_back(std::countr_zero(rest));
    out.emplace_back(std::move(gens), c);
  }
  return out;
}

void GrassmannElement::add_term(Mask m, cplx c) {
  if (n_generators() < 32 && (m >> n_generators()) != 0) throw DimensionError("monomial uses unknown generators");
  if (c == cplx{}) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx{}) terms_.erase(it);
  }
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  check_same(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  check_same(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GrassmannElement& GrassmannElement::operator*=(cplx c) {
  if (c == cplx{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

GrassmannElement g_mul(const GrassmannElement& x, const GrassmannElement& y) {
  check_same(x, y);
  GrassmannElement out(x.n_pairs());
  for (const auto& [ma, ca] : x.terms()) {
    for (const auto& [mb, cb] : y.terms()) {
      if ((ma & mb) != 0) continue;
      out.add_term(ma | mb, static_cast<double>(product_sign(ma, mb)) * ca * cb);
    }
  }
  return out;
}

GrassmannElement g_conj(const GrassmannElement& x) {
  GrassmannElement out(x.n_pairs());
  for (const auto& [gens, c] : x.monomials()) {
    std::vector<int> rev(gens.rbegin(), gens.rend());
    for (int& g : rev) g ^= 1;
    out += GrassmannElement::monomial(x.n_pairs(), rev, std::conj(c));
  }
  return out;
}

GrassmannElement g_exp(const GrassmannElement& x) {
  const cplx s = x.scalar_part();
  GrassmannElement nil = x - GrassmannElement::scalar(x.n_pairs(), s);
  GrassmannElement sum = GrassmannElement::scalar(x.n_pairs(), 1.0);
  GrassmannElement power = sum;
  for (int k = 1; k <= x.n_generators(); ++k) {
    power = g_mul(power, nil) * (1.0 / k);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * std::exp(s);
}

GrassmannElement left_derivative(const GrassmannElement& x, int generator) {
  check_generator(x.n_pairs(), generator);
  const Mask bit = Mask{1} << generator;
  GrassmannElement out(x.n_pairs());
  for (const auto& [m, c] : x.terms()) {
    if ((m & bit) == 0) continue;
    const int before = std::popcount(m & (bit - 1));
    out.add_term(m & ~bit, before % 2 == 0 ? c : -c);
  }
  return out;
}

BerezinMeasure::BerezinMeasure(std::vector<int> order) : order_(std::move(order)) {
  std::vector<int> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("BerezinMeasure: generator repeated in measure");
  }
  for (int g : order_) {
    if (g < 0 || g >= 2 * kMaxGrassmannPairs) throw DimensionError("BerezinMeasure: generator index out of range");
  }
}

BerezinMeasure BerezinMeasure::full(int n_pairs) {
  check_pairs(n_pairs);
  // dpsi_1* dpsi_1 ... dpsi_n* dpsi_n: the rightmost differential is innermost.
  std::vector<int> order;
  for (int k = n_pairs; k >= 1; --k) {
    order.push_back(2 * (k - 1));
    order.push_back(2 * (k - 1) + 1);
  }
  return BerezinMeasure(std::move(order));
}

GrassmannElement berezin_partial(const GrassmannElement& x, const BerezinMeasure& measure) {
  Mask need = 0;
  for (int g : measure.order()) {
    check_generator(x.n_pairs(), g);
    need |= Mask{1} << g;
  }
  // A surviving monomial is rewritten as g_1 g_2 ... g_m (rest), g_1 innermost.
  GrassmannElement out(x.n_pairs());
  for (const auto& [m, c] : x.terms()) {
    if ((m & need) != need) continue;
    std::vector<int> seq = measure.order();
    const Mask rest = m & ~need;
    for (Mask r = rest; r != 0; r &= r - 1) seq.push_back(std::countr_zero(r));
    out.add_term(rest, static_cast<double>(sort_sign(seq)) * c);
  }
  return out;
}

cplx berezin(const GrassmannElement& x, const BerezinMeasure& measure) {
  return berezin_partial(x, measure).scalar_part();
}

int epsilon(std::span<const int> indices) {
  const int n = static_cast<int>(indices.size());
  if (n == 0 || n > kMaxGrassmannPairs) throw DimensionError("epsilon: need 1..16 indices");
  std::vector<int> gens;
  for (int i : indices) {
    if (i < 1 || i > n) throw DimensionError("epsilon: index out of range 1..n");
    gens.push_back(2 * (i - 1));
  }
  std::vector<int> order;
  for (int k = 1; k <= n; ++k) order.push_back(2 * (k - 1));
  const auto value = berezin(GrassmannElement::monomial(n, gens), BerezinMeasure(order));
  return static_cast<int>(std::lround(value.real()));
}

GrassmannElement fermionic_exponent(const CMat& a) {
  const int n = static_cast<int>(a.rows());
  if (n < 1 || a.cols() != n) throw DimensionError("fermionic_exponent: A must be square");
  GrassmannElement out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int gens[2] = {2 * i + 1, 2 * j};
      out += GrassmannElement::monomial(n, gens, -0.5 * a(i, j));
    }
  }
  return out;
}

FermionicGaussian fermionic_gaussian(const CMat& a) {
  const int n = static_cast<int>(a.rows());
  if (n < 1 || a.cols() != n) throw DimensionError("fermionic_gaussian: A must be square");
  if (n > 6) throw DimensionError("fermionic_gaussian: n > 6 not supported");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) throw DomainError("fermionic_gaussian: A not Hermitian");
  FermionicGaussian out;
  out.brute_force = berezin(g_exp(fermionic_exponent(a)), BerezinMeasure::full(n));
  out.det_a = a.determinant();
  out.sqrt_det_claim = std::sqrt(out.det_a);
  return out;
}

MixedGaussian mixed_gaussian(int n, double k) {
  if (n < 1 || n > 4) throw DimensionError("mixed_gaussian: n must lie in 1..4");
  if (!(k > 0.0)) throw DomainError("mixed_gaussian: k must be > 0");
  auto product = [n](double kk, double* fermi, double* boson) {
    const double f = fermionic_gaussian(kk * CMat::Identity(n, n)).brute_force.real();
    const double b = std::pow(2.0 * kPi / kk, 0.5 * n);
    if (fermi) *fermi = f;
    if (boson) *boson = b;
    return f * b;
  };
  MixedGaussian out;
  out.value = product(k, &out.fermionic, &out.bosonic);
  out.claim = std::pow(2.0 * kPi, 0.5 * n);
  for (double kk : {0.5, 1.0, 2.0, 4.0}) out.sweep.push_back(product(kk, nullptr, nullptr));
  const auto [lo, hi] = std::minmax_element(out.sweep.begin(), out.sweep.end());
  out.flatness = *hi / *lo - 1.0;
  out.k_independent = out.flatness <= 1e-12;
  return out;
}

cplx heuristic_laplace_grassmann(cplx f1, cplx f2, cplx f3, const QuantumParam& hbar) {
  const double k = hbar.k();
  const auto psi = GrassmannElement::psi(1, 1);
  const auto psi_star = GrassmannElement::psi_star(1, 1);
  const GrassmannElement f = GrassmannElement::scalar(1, f1) + f2 * psi + f3 * psi_star;
  const GrassmannElement g = g_mul(psi_star, psi) * (-0.5 * k);
  const GrassmannElement weight = g_exp(g * (-0.5 * k));
  return berezin(g_mul(f, weight), BerezinMeasure::full(1));
}

double heuristic_laplace_claim(const QuantumParam& hbar) { return 0.5 * hbar.k(); }

}  // namespace gaussint
