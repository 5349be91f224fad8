#include "catalog_detail.hpp"

#include "gaussint/grassmann.hpp"

#include <array>

namespace gaussint::detail {

namespace {

// prod dpsi_k* dpsi_k, innermost first.
std::vector<int> full_measure(int n) {
  std::vector<int> order;
  for (int k = n - 1; k >= 0; --k) {
    order.push_back(2 * k);
    order.push_back(2 * k + 1);
  }
  return order;
}

cplx expand_gaussian(const CMat& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<GrassmannTerm> terms;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) terms.push_back({{2 * i + 1, 2 * j}, -0.5 * a(i, j)});
  }
  return grassmann_expand_integral(terms, full_measure(n), 2 * n);
}

const std::array<CMat, 3>& hermitian_cases() {
  static const std::array<CMat, 3> cases = [] {
    std::array<CMat, 3> c;
    c[0] = CMat::Constant(1, 1, 3.0);
    c[1].resize(2, 2);
    c[1] << 2.0, 0.0, 0.0, 3.0;
    c[2].resize(3, 3);
    c[2] << 2.0, cplx(0.5, 0.3), cplx(0.1, -0.2), cplx(0.5, -0.3), 1.5, cplx(0.0, 0.4), cplx(0.1, 0.2),
        cplx(0.0, -0.4), 1.0;
    return c;
  }();
  return cases;
}

const CMat& hermitian_case(const Params& p) { return hermitian_cases().at(get_int(p, "case")); }

std::vector<Params> case_grid() { return {{{"case", 0}}, {{"case", 1}}, {{"case", 2}}}; }

IdentityRecord anticommutation_record() {
  IdentityRecord r;
  r.id = "grassmann/anticommutation";
  r.summary = "psi_a psi_b + psi_b psi_a = 0 and psi_a^2 = 0";
  r.anchor = "defining relations of Grassmann numbers";
  r.params = {int_param("a", 0, 5), int_param("b", 0, 5)};
  r.grid = {{{"a", 0}, {"b", 2}}, {{"a", 1}, {"b", 4}}, {{"a", 3}, {"b", 3}}};
  r.covers = {"g_mul"};
  r.closed_form = [](const Params&) { return cplx(0.0); };
  r.oracle = [](const Params& p, const OracleBudget&) {
    const int ga = get_int(p, "a");
    const int gb = get_int(p, "b");
    const auto x = GrassmannElement::monomial(3, std::span<const int>(&ga, 1));
    const auto y = GrassmannElement::monomial(3, std::span<const int>(&gb, 1));
    double mass = 0.0;
    for (const auto& [m, c] : (g_mul(x, y) + g_mul(y, x)).terms()) mass += std::abs(c);
    for (const auto& [m, c] : g_mul(x, x).terms()) mass += std::abs(c);
    return exact(mass);
  };
  return r;
}

IdentityRecord conjugation_record() {
  IdentityRecord r;
  r.id = "grassmann/conjugation";
  r.summary = "(psi_i psi_j)* = psi_j* psi_i* = -psi_i* psi_j*";
  r.anchor = "conjugation reverses the order of factors";
  r.params = {int_param("i", 1, 3), int_param("j", 1, 3)};
  r.grid = {{{"i", 1}, {"j", 2}}, {{"i", 2}, {"j", 3}}, {{"i", 3}, {"j", 1}}};
  r.covers = {"g_conj"};
  r.precondition = [](const Params& p) -> std::optional<std::string> {
    if (get_int(p, "i") == get_int(p, "j")) return "i and j must differ";
    return std::nullopt;
  };
  r.closed_form = [](const Params&) { return cplx(-1.0); };
  r.oracle = [](const Params& p, const OracleBudget&) {
    const int i = get_int(p, "i");
    const int j = get_int(p, "j");
    const auto lhs = g_conj(g_mul(GrassmannElement::psi(3, i), GrassmannElement::psi(3, j)));
    const auto ref = g_mul(GrassmannElement::psi_star(3, i), GrassmannElement::psi_star(3, j));
    const auto& [mask, c] = *ref.terms().begin();
    const auto it = lhs.terms().find(mask);
    if (lhs.terms().size() != 1 || it == lhs.terms().end()) return exact(cplx(0.0));
    return exact(it->second / c);
  };
  return r;
}

IdentityRecord pair_record() {
  IdentityRecord r;
  r.id = "grassmann/pair_gaussian";
  r.summary = "int e^{-psi* (r/2) psi} dpsi* dpsi = int (1 - psi* (r/2) psi) dpsi* dpsi = r/2";
  r.anchor = "single-pair Berezin Gaussian";
  r.params = {real_param("r", -kInf, kInf, -4.0, 4.0)};
  r.grid = {{{"r", 1.0}}, {{"r", 3.0}}, {{"r", -2.5}}};
  r.covers = {"g_exp", "berezin"};
  r.closed_form = [](const Params& p) {
    const double rr = get(p, "r");
    const auto x = g_mul(GrassmannElement::psi_star(1, 1), GrassmannElement::psi(1, 1)) * (-0.5 * rr);
    return berezin(g_exp(x), BerezinMeasure::full(1));
  };
  r.oracle = [](const Params& p, const OracleBudget&) {
    const GrassmannTerm t{{1, 0}, -0.5 * get(p, "r")};
    return exact(grassmann_expand_integral(std::span(&t, 1), full_measure(1), 2));
  };
  return r;
}

IdentityRecord fermionic_record() {
  IdentityRecord r;
  r.id = "grassmann/fermionic_gaussian";
  r.summary = "brute-force int e^{-(1/2) psi_i* A_ij psi_j} prod dpsi_k* dpsi_k, equal to det(A) / 2^n";
  r.anchor = "fermionic Gaussian integral expanded in the exterior algebra";
  r.params = {int_param("case", 0, 2)};
  r.grid = case_grid();
  r.covers = {"fermionic_gaussian"};
  r.closed_form = [](const Params& p) { return fermionic_gaussian(hermitian_case(p)).brute_force; };
  r.oracle = [](const Params& p, const OracleBudget&) { return exact(expand_gaussian(hermitian_case(p))); };
  return r;
}

IdentityRecord sqrt_det_record() {
  IdentityRecord r;
  r.id = "grassmann/fermionic_sqrt_det";
  r.summary = "claimed value sqrt(det A) of the fermionic Gaussian";
  r.anchor = "fermionic Gaussian as printed; the single-pair case gives r/2, which sqrt(det A) cannot match";
  r.params = {int_param("case", 0, 2)};
  r.grid = case_grid();
  r.expected = Expected::FailTolerated;
  r.covers = {"fermionic_gaussian"};
  r.closed_form = [](const Params& p) { return fermionic_gaussian(hermitian_case(p)).sqrt_det_claim; };
  r.oracle = [](const Params& p, const OracleBudget&) { return exact(expand_gaussian(hermitian_case(p))); };
  return r;
}

IdentityRecord det_record() {
  IdentityRecord r;
  r.id = "grassmann/fermionic_det";
  r.summary = "claimed square of the fermionic Gaussian, det A";
  r.anchor = "epsilon-tensor expansion as printed; the brute-force square is det(A)^2 / 4^n";
  r.params = {int_param("case", 0, 2)};
  r.grid = case_grid();
  r.expected = Expected::FailTolerated;
  r.covers = {"fermionic_gaussian"};
  r.closed_form = [](const Params& p) { return fermionic_gaussian(hermitian_case(p)).det_a; };
  r.oracle = [](const Params& p, const OracleBudget&) {
    const cplx v = expand_gaussian(hermitian_case(p));
    return exact(v * v);
  };
  return r;
}

IdentityRecord mixed_record() {
  IdentityRecord r;
  r.id = "grassmann/mixed_gaussian";
  r.summary = "claimed int e^{-(k/2) psi* psi - k|x|^2/2} dx prod dpsi* dpsi = (2 pi)^{n/2}";
  r.anchor = "mixed Gaussian as printed; brute force gives (pi k / 2)^{n/2}";
  r.params = {int_param("n", 1, 4), positive_param("k", 0.25, 8.0)};
  r.grid = {{{"n", 1}, {"k", 1.0}}, {{"n", 2}, {"k", 0.5}}, {{"n", 3}, {"k", 2.0}}};
  r.expected = Expected::FailTolerated;
  r.covers = {"mixed_gaussian"};
  r.closed_form = [](const Params& p) { return cplx(std::pow(2.0 * kPi, 0.5 * get_int(p, "n"))); };
  r.oracle = [](const Params& p, const OracleBudget&) {
    const int n = get_int(p, "n");
    const double k = get(p, "k");
    const double fermi = expand_gaussian(k * CMat::Identity(n, n)).real();
    return exact(fermi * std::pow(2.0 * kPi / k, 0.5 * n));
  };
  return r;
}

IdentityRecord mixed_flat_record() {
  IdentityRecord r;
  r.id = "grassmann/mixed_k_independence";
  r.summary = "claimed k-independence of the mixed Gaussian; max/min - 1 over k = 0.5, 1, 2, 4";
  r.anchor = "mixed Gaussian stated to be independent of k";
  r.params = {int_param("n", 1, 4)};
  r.grid = {{{"n", 1}}, {{"n", 2}}, {{"n", 3}}};
  r.expected = Expected::FailTolerated;
  r.covers = {"mixed_gaussian"};
  r.closed_form = [](const Params&) { return cplx(0.0); };
  r.oracle = [](const Params& p, const OracleBudget&) { return exact(mixed_gaussian(get_int(p, "n"), 1.0).flatness); };
  return r;
}

IdentityRecord heuristic_record() {
  IdentityRecord r;
  r.id = "grassmann/heuristic_laplace";
  r.summary = "claimed int (f1 + f2 psi + f3 psi*) e^{-g/2hbar} dpsi* dpsi = 1/(2 hbar), g = -psi* (k/2) psi";
  r.anchor = "heuristic Laplace method on one Grassmann pair; brute force gives -f1 k^2 / 4";
  r.params = {real_param("f1", -kInf, kInf, -2.0, 2.0), real_param("f2", -kInf, kInf, -2.0, 2.0),
              real_param("f3", -kInf, kInf, -2.0, 2.0), positive_param("hbar", 0.2, 2.0)};
  r.grid = {{{"f1", 1.0}, {"f2", 0.0}, {"f3", 0.0}, {"hbar", 1.0}},
            {{"f1", 1.0}, {"f2", 2.0}, {"f3", 3.0}, {"hbar", 0.25}},
            {{"f1", 1.0}, {"f2", 0.0}, {"f3", 0.0}, {"hbar", 0.5}}};
  r.expected = Expected::FailTolerated;
  r.covers = {"heuristic_laplace_grassmann"};
  r.closed_form = [](const Params& p) { return cplx(heuristic_laplace_claim(QuantumParam(get(p, "hbar")))); };
  r.oracle = [](const Params& p, const OracleBudget&) {
    return exact(heuristic_laplace_grassmann(get(p, "f1"), get(p, "f2"), get(p, "f3"), QuantumParam(get(p, "hbar"))));
  };
  return r;
}

}  // namespace

void register_grassmann(std::vector<IdentityRecord>& out) {
  out.push_back(anticommutation_record());
  out.push_back(conjugation_record());
  out.push_back(pair_record());
  out.push_back(fermionic_record());
  out.push_back(sqrt_det_record());
  out.push_back(det_record());
  out.push_back(mixed_record());
  out.push_back(mixed_flat_record());
  out.push_back(heuristic_record());
}

}  // namespace gaussint::detail
