#include "catalog_detail.hpp"

#include "gaussint/multidim.hpp"

#include <array>

namespace gaussint::detail {

namespace {

Mat mat(int n, std::initializer_list<double> v) {
  Mat m(n, n);
  auto it = v.begin();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = *it++;
  }
  return m;
}

Vec vec(std::initializer_list<double> v) {
  Vec x(static_cast<Eigen::Index>(v.size()));
  int i = 0;
  for (double e : v) x(i++) = e;
  return x;
}

const std::array<Mat, 3>& spd_cases() {
  static const std::array<Mat, 3> cases = {
      mat(2, {2.0, 0.5, 0.5, 1.0}),
      mat(3, {1.0, 0.3, 0.1, 0.3, 2.0, 0.4, 0.1, 0.4, 1.5}),
      mat(2, {3.0, -1.0, -1.0, 2.0}),
  };
  return cases;
}

const Mat& spd_case(const Params& p) { return spd_cases().at(get_int(p, "case")); }

OracleBudget nested_budget(const OracleBudget& b, int n) { return with_tol(b, n <= 2 ? 1e-11 : 1e-9); }

QuadResult nested(const IntegrandND& f, int n, const OracleBudget& b) { return integrate_nd(f, n, nested_budget(b, n)); }

IdentityRecord gauss_nd_record() {
  IdentityRecord r;
  r.id = "multidim/gauss_nd";
  r.summary = "int_{R^n} e^{-|x|^2} dx = pi^{n/2}";
  r.anchor = "n-dimensional Gaussian integral by Fubini";
  r.params = {int_param("n", 1, 3)};
  r.grid = {{{"n", 1}}, {{"n", 2}}, {{"n", 3}}};
  r.covers = {"gauss_nd"};
  r.closed_form = [](const Params& p) { return cplx(gauss_nd(get_int(p, "n"))); };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const int n = get_int(p, "n");
    return nested([](const Vec& x) { return cplx(std::exp(-x.squaredNorm())); }, n, b);
  };
  return r;
}

IdentityRecord sphere_record() {
  IdentityRecord r;
  r.id = "multidim/sphere_area";
  r.summary = "|S^{n-1}| = 2 pi^{n/2} / Gamma(n/2), from pi^{n/2} = |S^{n-1}| int_0^inf r^{n-1} e^{-r^2} dr";
  r.anchor = "unit sphere constant from the Gaussian integral in polar coordinates";
  r.params = {int_param("n", 1, 30)};
  r.grid = {{{"n", 2}}, {{"n", 3}}, {{"n", 4}}, {{"n", 7}}};
  r.covers = {"sphere_area"};
  r.closed_form = [](const Params& p) { return cplx(sphere_area(get_int(p, "n"))); };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const int n = get_int(p, "n");
    auto q = integrate_1d([n](double x) { return cplx(std::pow(x, n - 1) * std::exp(-x * x)); }, 0.0, kInf, b);
    const double scale = std::pow(kPi, 0.5 * n);
    q.abs_error_estimate = scale * q.abs_error_estimate / std::norm(q.value);
    q.value = scale / q.value;
    return q;
  };
  return r;
}

IdentityRecord gauss_spd_record() {
  IdentityRecord r;
  r.id = "multidim/gauss_spd";
  r.summary = "int exp(-<Ax, x>) dx = sqrt(pi^n / det A)";
  r.anchor = "Gaussian integral of a symmetric positive definite form";
  r.params = {int_param("case", 0, 2)};
  r.grid = {{{"case", 0}}, {{"case", 1}}, {{"case", 2}}};
  r.covers = {"gauss_spd"};
  r.closed_form = [](const Params& p) { return cplx(gauss_spd(RealSpdMatrix(spd_case(p)))); };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const Mat a = spd_case(p);
    return nested([a](const Vec& x) { return cplx(std::exp(-x.dot(a * x))); }, static_cast<int>(a.rows()), b);
  };
  return r;
}

struct FtCase {
  CMat a;
  Vec xi;
};

const std::array<FtCase, 3>& general_cases() {
  static const std::array<FtCase, 3> cases = [] {
    std::array<FtCase, 3> c;
    c[0].a = CMat::Constant(1, 1, cplx(1.0, 0.5));
    c[0].xi = vec({0.7});
    c[1].a.resize(2, 2);
    c[1].a << cplx(1.0, 0.5), 0.2, 0.2, cplx(2.0, -0.3);
    c[1].xi = vec({0.4, -0.6});
    c[2].a.resize(2, 2);
    c[2].a << 2.0, cplx(0.0, 0.3), cplx(0.0, 0.3), 1.0;
    c[2].xi = vec({1.0, 0.5});
    return c;
  }();
  return cases;
}

struct ImagCase {
  Mat a0;
  Vec xi;
};

const std::array<ImagCase, 3>& imaginary_cases() {
  static const std::array<ImagCase, 3> cases = {
      ImagCase{mat(1, {1.0}), vec({0.3})},
      ImagCase{mat(1, {-2.0}), vec({0.5})},
      ImagCase{mat(2, {1.0, 0.5, 0.5, -1.5}), vec({0.2, -0.4})},
  };
  return cases;
}

cplx ft_integrand(const CMat& a, const Vec& xi, const Vec& x) {
  const CVec xc = x.cast<cplx>();
  const cplx quad = xc.transpose() * a * xc;
  return std::exp(-kI * x.dot(xi) - 0.5 * quad);
}

IdentityRecord hormander_general_record() {
  IdentityRecord r;
  r.id = "multidim/hormander_general";
  r.summary = "int e^{-i<x,xi>} e^{-<Ax,x>/2} dx = (2 pi)^{n/2} det(A^{-1})^{1/2} e^{-<A^{-1} xi, xi>/2}, Re A > 0";
  r.anchor = "Fourier transform of a complex Gaussian, branch continued from A = I";
  r.params = {int_param("case", 0, 2)};
  r.grid = {{{"case", 0}}, {{"case", 1}}, {{"case", 2}}};
  r.covers = {"hormander_ft"};
  r.closed_form = [](const Params& p) {
    const auto& c = general_cases().at(get_int(p, "case"));
    return hormander_ft(ComplexSymMatrix(c.a), c.xi);
  };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const auto& c = general_cases().at(get_int(p, "case"));
    return nested([&c](const Vec& x) { return ft_integrand(c.a, c.xi, x); }, static_cast<int>(c.a.rows()), b);
  };
  return r;
}

IdentityRecord hormander_imaginary_record() {
  IdentityRecord r;
  r.id = "multidim/hormander_imaginary";
  r.summary = "A = -i A0: (2 pi)^{n/2} |det A0|^{-1/2} e^{i pi sgn(A0)/4} e^{-i<A0^{-1} xi, xi>/2}";
  r.anchor = "signature branch of the Fourier transform theorem; oscillatory oracle by damped extrapolation";
  r.params = {int_param("case", 0, 2)};
  r.grid = {{{"case", 0}}, {{"case", 1}}, {{"case", 2}}};
  r.tol = 5e-4;
  r.covers = {"hormander_ft", "signature"};
  r.closed_form = [](const Params& p) {
    const auto& c = imaginary_cases().at(get_int(p, "case"));
    return hormander_ft(ComplexSymMatrix::from_imaginary(c.a0), c.xi);
  };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const auto& c = imaginary_cases().at(get_int(p, "case"));
    const CMat a = -kI * c.a0.cast<cplx>();
    const int n = static_cast<int>(a.rows());
    const OracleBudget bb = with_tol(b, 1e-10);
    if (n == 1) {
      return integrate_1d_oscillatory([&](double t) { return ft_integrand(a, c.xi, Vec::Constant(1, t)); },
                                      default_damping(), bb);
    }
    return integrate_nd_oscillatory([&](const Vec& x) { return ft_integrand(a, c.xi, x); }, n, default_damping(),
                                    with_tol(b, 1e-8));
  };
  return r;
}

IdentityRecord signature_record() {
  IdentityRecord r;
  r.id = "multidim/signature_congruence";
  r.summary = "sgn(P^T A0 P) = sgn(A0) for invertible P";
  r.anchor = "Sylvester's law of inertia behind the signature phase";
  r.params = {int_param("case", 0, 2)};
  r.grid = {{{"case", 0}}, {{"case", 1}}, {{"case", 2}}};
  r.covers = {"signature"};
  static const std::array<Mat, 3> a0 = {mat(2, {1.0, 0.5, 0.5, -1.5}),
                                        mat(3, {2.0, 0.0, 1.0, 0.0, -1.0, 0.5, 1.0, 0.5, 0.5}),
                                        mat(4, {1, 2, 0, 0, 2, 1, 0, 0, 0, 0, -3, 1, 0, 0, 1, 2})};
  r.closed_form = [](const Params& p) { return cplx(signature(a0.at(get_int(p, "case")))); };
  r.oracle = [](const Params& p, const OracleBudget&) {
    const Mat& a = a0.at(get_int(p, "case"));
    const int n = static_cast<int>(a.rows());
    Mat pm = Mat::Identity(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pm(i, j) = 0.3 * (i + 1) - 0.2 * j;
    }
    pm(n - 1, 0) = 0.7;
    return exact(static_cast<double>(signature(pm.transpose() * a * pm)));
  };
  return r;
}

struct ZCase {
  int a_case;
  Vec j;
};

const std::array<ZCase, 3>& z_cases() {
  static const std::array<ZCase, 3> cases = {
      ZCase{0, vec({0.3, -0.2})},
      ZCase{1, vec({0.1, 0.2, -0.3})},
      ZCase{2, vec({1.0, 0.5})},
  };
  return cases;
}

IdentityRecord generating_record() {
  IdentityRecord r;
  r.id = "multidim/generating_z";
  r.summary = "Z(J) = int exp(-x^T A x/2 + x^T J) dx = (2 pi)^{n/2} det(A)^{-1/2} e^{J^T A^{-1} J / 2}";
  r.anchor = "generating function of Gaussian moments";
  r.params = {int_param("case", 0, 2)};
  r.grid = {{{"case", 0}}, {{"case", 1}}, {{"case", 2}}};
  r.covers = {"generating_z"};
  r.closed_form = [](const Params& p) {
    const auto& c = z_cases().at(get_int(p, "case"));
    return cplx(generating_z(RealSpdMatrix(spd_cases().at(c.a_case)), c.j));
  };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const auto& c = z_cases().at(get_int(p, "case"));
    const Mat a = spd_cases().at(c.a_case);
    return nested([&](const Vec& x) { return cplx(std::exp(-0.5 * x.dot(a * x) + x.dot(c.j))); },
                  static_cast<int>(a.rows()), b);
  };
  return r;
}

IdentityRecord wick_second_record() {
  IdentityRecord r;
  r.id = "multidim/wick_second_moment";
  r.summary = "int x_i x_j exp(-x^T A x/2) dx = Z0 (A^{-1})_{ij}";
  r.anchor = "second moment from differentiating Z(J) twice";
  r.params = {int_param("case", 0, 2), int_param("i", 1, 3), int_param("j", 1, 3)};
  r.grid = {{{"case", 0}, {"i", 1}, {"j", 2}}, {{"case", 1}, {"i", 1}, {"j", 3}}, {{"case", 1}, {"i", 2}, {"j", 2}}};
  r.tol = 1e-7;
  r.covers = {"wick_moment"};
  r.precondition = [](const Params& p) -> std::optional<std::string> {
    const int n = static_cast<int>(spd_case(p).rows());
    if (get_int(p, "i") > n || get_int(p, "j") > n) return "index exceeds the dimension";
    return std::nullopt;
  };
  r.closed_form = [](const Params& p) {
    const int idx[2] = {get_int(p, "i"), get_int(p, "j")};
    return cplx(wick_moment(RealSpdMatrix(spd_case(p)), idx));
  };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const Mat a = spd_case(p);
    const int i = get_int(p, "i") - 1;
    const int j = get_int(p, "j") - 1;
    return nested([&](const Vec& x) { return cplx(x(i) * x(j) * std::exp(-0.5 * x.dot(a * x))); },
                  static_cast<int>(a.rows()), b);
  };
  return r;
}

const Mat& wick4_matrix() {
  static const Mat a = mat(4, {2.0, 0.3, 0.0, 0.1, 0.3, 1.5, 0.2, 0.0, 0.0, 0.2, 1.0, 0.1, 0.1, 0.0, 0.1, 1.2});
  return a;
}

IdentityRecord wick_fourth_record() {
  IdentityRecord r;
  r.id = "multidim/wick_fourth_moment";
  r.summary = "fourth moments as the sum over the three pairings of products of (A^{-1}) entries";
  r.anchor = "Wick's theorem; Monte Carlo oracle with Gaussian importance sampling";
  r.params = {int_param("i1", 1, 4), int_param("i2", 1, 4), int_param("i3", 1, 4), int_param("i4", 1, 4)};
  r.grid = {{{"i1", 1}, {"i2", 2}, {"i3", 3}, {"i4", 4}},
            {{"i1", 1}, {"i2", 1}, {"i3", 2}, {"i4", 2}},
            {{"i1", 3}, {"i2", 3}, {"i3", 3}, {"i4", 3}}};
  r.covers = {"wick_moment"};
  r.closed_form = [](const Params& p) {
    const int idx[4] = {get_int(p, "i1"), get_int(p, "i2"), get_int(p, "i3"), get_int(p, "i4")};
    return cplx(wick_moment(RealSpdMatrix(wick4_matrix()), idx));
  };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const Mat& a = wick4_matrix();
    const int idx[4] = {get_int(p, "i1") - 1, get_int(p, "i2") - 1, get_int(p, "i3") - 1, get_int(p, "i4") - 1};
    return integrate_nd(
        [&](const Vec& x) { return cplx(x(idx[0]) * x(idx[1]) * x(idx[2]) * x(idx[3]) * std::exp(-0.5 * x.dot(a * x))); },
        4, b, "multidim/wick_fourth_moment", a.inverse());
  };
  return r;
}

IdentityRecord homog_record() {
  IdentityRecord r;
  r.id = "multidim/homog_integral";
  r.summary = "int e^{-phi} dx = Leb{phi < 1} Gamma(p + 1) for phi = |x|^a + |y|^b, p = 1/a + 1/b";
  r.anchor = "integral of e^{-phi} for a quasi-homogeneous phi";
  r.params = {real_param("a", 1.0, kInf, 1.0, 5.0), real_param("b", 1.0, kInf, 1.0, 5.0)};
  r.grid = {{{"a", 2.0}, {"b", 2.0}}, {{"a", 1.0}, {"b", 3.0}}, {{"a", 4.0}, {"b", 2.0}}};
  r.covers = {"homog_integral"};
  r.closed_form = [](const Params& p) {
    const double a = get(p, "a");
    const double b = get(p, "b");
    HomogeneousSpec spec;
    spec.n = 2;
    spec.weights = {1.0 / a, 1.0 / b};
    spec.unit_ball_measure = 4.0 * gamma(1.0 + 1.0 / a) * gamma(1.0 + 1.0 / b) / gamma(1.0 + 1.0 / a + 1.0 / b);
    return cplx(homog_integral(spec));
  };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const double ea = get(p, "a");
    const double eb = get(p, "b");
    return nested(
        [=](const Vec& x) { return cplx(std::exp(-std::pow(std::abs(x(0)), ea) - std::pow(std::abs(x(1)), eb))); }, 2,
        b);
  };
  return r;
}

IdentityRecord power_form_record() {
  IdentityRecord r;
  r.id = "multidim/homog_power_form";
  r.summary = "int exp(-(c <Ax,x>)^p) dx = (pi/c)^{n/2} det(A)^{-1/2} Gamma(n/2p + 1) / Gamma(n/2 + 1)";
  r.anchor = "power of a quadratic form";
  r.params = {positive_param("c", 0.3, 3.0), positive_param("p", 0.5, 3.0), int_param("case", 0, 2)};
  r.grid = {{{"c", 1.0}, {"p", 1.0}, {"case", 0}},
            {{"c", 0.5}, {"p", 2.0}, {"case", 2}},
            {{"c", 2.0}, {"p", 0.75}, {"case", 0}}};
  r.covers = {"homog_power_form"};
  r.closed_form = [](const Params& p) {
    return cplx(homog_power_form(get(p, "c"), get(p, "p"), RealSpdMatrix(spd_case(p))));
  };
  r.oracle = [](const Params& p, const OracleBudget& b) {
    const double c = get(p, "c");
    const double pw = get(p, "p");
    const Mat a = spd_case(p);
    return nested([&](const Vec& x) { return cplx(std::exp(-std::pow(c * x.dot(a * x), pw))); },
                  static_cast<int>(a.rows()), b);
  };
  return r;
}

QuadResult hermitian_oracle(int n, const std::function<double(const HermitianPoint&)>& f) {
  const int dim = n * n;
  auto g = [n, &f](const Vec& h) { return cplx(f(HermitianPoint(n, h))); };
  if (dim == 1) {
    OracleBudget b;
    return integrate_1d([&](double t) { return g(Vec::Constant(1, t)); }, -kInf, kInf, b);
  }
  return integrate_gauss_hermite_nd(g, dim, 24, std::sqrt(2.0));
}

IdentityRecord hermitian_norm_record() {
  IdentityRecord r;
  r.id = "multidim/hermitian_ensemble_norm";
  r.summary = "int e^{-Tr(H^2)/2} dLeb(H) = (2 pi)^{N^2/2} / 2^{(N^2-N)/2}";
  r.anchor = "Gaussian measure on N x N Hermitian matrices via the diagonal form B";
  r.params = {int_param("N", 1, 2)};
  r.grid = {{{"N", 1}}, {{"N", 2}}};
  r.covers = {"hermitian_ensemble_norm", "trace_form"};
  r.closed_form = [](const Params& p) { return cplx(hermitian_ensemble_norm(get_int(p, "N"))); };
  r.oracle = [](const Params& p, const OracleBudget&) {
    return hermitian_oracle(get_int(p, "N"), [](const HermitianPoint& h) {
      return std::exp(-0.5 * h.matrix().squaredNorm());
    });
  };
  return r;
}

IdentityRecord hermitian_measure_record() {
  IdentityRecord r;
  r.id = "multidim/hermitian_measure";
  r.summary = "the normalized Gaussian measure on Hermitian matrices has total mass 1";
  r.anchor = "Gaussian matrix measure with density proportional to e^{-(Bh,h)/2}";
  r.params = {int_param("N", 1, 2)};
  r.grid = {{{"N", 1}}, {{"N", 2}}};
  r.tol = 1e-6;
  r.covers = {"trace_form"};
  r.closed_form = [](const Params&) { return cplx(1.0); };
  r.oracle = [](const Params& p, const OracleBudget&) {
    return hermitian_oracle(get_int(p, "N"), [](const HermitianPoint& h) { return hermitian_measure_density(h); });
  };
  return r;
}

}  // namespace

void register_multidim(std::vector<IdentityRecord>& out) {
  out.push_back(gauss_nd_record());
  out.push_back(sphere_record());
  out.push_back(gauss_spd_record());
  out.push_back(hormander_general_record());
  out.push_back(hormander_imaginary_record());
  out.push_back(signature_record());
  out.push_back(generating_record());
  out.push_back(wick_second_record());
  out.push_back(wick_fourth_record());
  out.push_back(homog_record());
  out.push_back(power_form_record());
  out.push_back(hermitian_norm_record());
  out.push_back(hermitian_measure_record());
}

}  // namespace gaussint::detail
