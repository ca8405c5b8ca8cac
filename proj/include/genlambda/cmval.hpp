#pragma once

// Double-precision evaluation of E, Lambda, j, g_N and lambda at points of the
// upper half plane, the known CM values at levels 3 and 4, and the exact series
// identities among Lambda, g_N, lambda and j at those levels.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "genlambda/minpoly.hpp"

namespace genlambda {

using cplx = std::complex<double>;

struct CMPoint {
  cplx tau;
  std::string description;
  int level = 0;
};

struct NumericValue {
  cplx value;
  double error = 0;  // bound on truncation error, plus a roundoff allowance
};

/// One line of a verification report.
struct CheckRow {
  std::string name;
  double residual = 0;
  double tol = 0;
  bool pass = false;
  std::string note;
};

struct Report {
  std::string title;
  std::vector<CheckRow> rows;
  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
  void add(std::string name, double residual, double tol, std::string note = {}) {
    rows.push_back({std::move(name), residual, tol, residual < tol, std::move(note)});
  }
  void add_exact(std::string name, bool ok, std::string note = {}) { rows.push_back({std::move(name), ok ? 0.0 : 1.0, 0.5, ok, std::move(note)}); }
};

namespace detail {

inline constexpr double two_pi = 2 * std::numbers::pi;
inline constexpr std::size_t max_terms = 2'000'000;

inline cplx expi(double x) { return {std::cos(x), std::sin(x)}; }

/// sqrt(-m) with positive imaginary part.
inline cplx sqrt_neg(double m) { return {0.0, std::sqrt(m)}; }

/// Smallest K with sum_{n > K} n y^n below eps.
inline std::size_t lambert_terms(double y, double eps) {
  if (!(y < 1)) throw precision_error("numeric series: |q| too close to 1");
  std::size_t k = 1;
  while (true) {
    const double tail = std::pow(y, static_cast<double>(k + 1)) * (static_cast<double>(k + 1) - static_cast<double>(k) * y) / ((1 - y) * (1 - y));
    if (tail < eps) return k;
    if (++k > max_terms) throw precision_error("numeric series: tail bound unreachable in double precision");
  }
}

}  // namespace detail

/// E(tau; r, s) from its q-expansion, q = exp(2 pi i tau / N), with a geometric tail bound below tol / 10.
inline NumericValue eval_e_numeric(const EIndex& idx, i64 n, cplx tau, double tol) {
  if (tau.imag() <= 0) throw std::domain_error("eval_e_numeric: tau must lie in the upper half plane");
  const auto [br, m] = brace_mu(idx.r, n);
  const double nd = static_cast<double>(n);
  const cplx q = std::exp(cplx(0, detail::two_pi) * tau / nd);
  const cplx omega = detail::expi(detail::two_pi * static_cast<double>(mod(m * idx.s, n)) / nd);
  const double aq = std::abs(q);
  const cplx u = omega * std::pow(q, static_cast<double>(br));
  const cplx x = std::pow(q, nd);
  const double ax = std::abs(x);
  const double y = std::pow(aq, static_cast<double>(n - br));
  const double eps = tol / 10 * (1 - ax) / 4;
  const std::size_t terms = detail::lambert_terms(y, eps);
  cplx s = br == 0 ? omega / ((1.0 - omega) * (1.0 - omega)) : u / ((1.0 - u) * (1.0 - u));
  const cplx a = u * x, b = x / u;
  cplx an = 1, bn = 1, xn = 1;
  for (std::size_t k = 1; k <= terms; ++k) {
    an *= a;
    bn *= b;
    xn *= x;
    s += static_cast<double>(k) * (an + bn - 2.0 * xn) / (1.0 - xn);
  }
  return {s, tol / 10 + 1e-15 * (1 + std::abs(s)) * static_cast<double>(terms)};
}

/// tau' in the standard fundamental domain and gamma with tau' = gamma tau.
inline std::pair<cplx, SL2Mat> reduce_to_fundamental_domain(cplx tau) {
  if (tau.imag() <= 0) throw std::domain_error("reduce_to_fundamental_domain: tau must lie in the upper half plane");
  SL2Mat g;
  for (int it = 0; it < 10000; ++it) {
    const double k = std::round(tau.real());
    if (k != 0) {
      tau -= k;
      g = SL2Mat::T_pow(-static_cast<i64>(k)) * g;
    }
    if (std::norm(tau) < 1 - 1e-15) {
      tau = -1.0 / tau;
      g = SL2Mat::S() * g;
    } else {
      return {tau, g};
    }
  }
  throw std::runtime_error("reduce_to_fundamental_domain: no convergence");
}

inline SL2Mat sl2_inverse(const SL2Mat& m) { return {m.d, -m.b, -m.c, m.a}; }

/// Lambda(tau; Q1, Q2) for the basis pair b, after moving tau into the fundamental domain.
inline NumericValue eval_lambda_numeric(const BasisPair& b, i64 n, cplx tau, double tol = 1e-13) {
  b.check(n);
  const auto [t, g] = reduce_to_fundamental_domain(tau);
  // Lambda(b; tau) = Lambda(b gamma^{-1}; gamma tau)
  const BasisPair bb = b.times(sl2_inverse(g));
  const EIndex q1 = EIndex::make(bb.r1, bb.s1, n), q2 = EIndex::make(bb.r2, bb.s2, n), q12 = EIndex::make(bb.r1 + bb.r2, bb.s1 + bb.s2, n);
  const NumericValue e1 = eval_e_numeric(q1, n, t, tol), e2 = eval_e_numeric(q2, n, t, tol), e12 = eval_e_numeric(q12, n, t, tol);
  const cplx num = e1.value - e12.value, den = e2.value - e12.value;
  const cplx v = num / den;
  const double en = e1.error + e12.error, ed = e2.error + e12.error;
  return {v, (en + std::abs(v) * ed) / std::abs(den) + 1e-15 * std::abs(v)};
}

/// (Lambda o A)(tau).
inline NumericValue eval_lambda_numeric(const SL2Mat& a, i64 n, cplx tau, double tol = 1e-13) {
  return eval_lambda_numeric(BasisPair{}.times(a), n, tau, tol);
}

/// Lambda(tau) at a CM point.
inline NumericValue eval_lambda_numeric(const CMPoint& p, double tol = 1e-13) {
  return eval_lambda_numeric(SL2Mat::identity(), p.level, p.tau, tol);
}

/// j(tau) = E4^3 / Delta with q = exp(2 pi i tau), after reduction to the fundamental domain.
inline cplx eval_j_numeric(cplx tau) {
  const cplx t = reduce_to_fundamental_domain(tau).first;
  const cplx q = std::exp(cplx(0, detail::two_pi) * t);
  cplx e4 = 1, prod = 1, qn = 1;
  for (int k = 1; k < 200; ++k) {
    qn *= q;
    e4 += 240.0 * std::pow(static_cast<double>(k), 3) * qn / (1.0 - qn);
    prod *= 1.0 - qn;
    if (std::abs(qn) < 1e-30) break;
  }
  return e4 * e4 * e4 / (q * std::pow(prod, 24));
}

/// g_N(tau)^(24/(N-1)) for N = 3, 4 from the eta product.
inline cplx eval_g_pow_numeric(i64 n, cplx tau) {
  if (n != 3 && n != 4) throw std::invalid_argument("eval_g_pow_numeric: only N = 3, 4");
  if (tau.imag() < 0.05) throw precision_error("eval_g_pow_numeric: Im tau too small");
  const cplx q = std::exp(cplx(0, detail::two_pi) * tau);
  const cplx qn_step = std::pow(q, static_cast<double>(n));
  cplx r = 1, qk = 1, qnk = 1;
  for (std::size_t k = 1; k < detail::max_terms; ++k) {
    qk *= q;
    qnk *= qn_step;
    r *= (1.0 - qk) / (1.0 - qnk);
    if (std::abs(qk) < 1e-18) break;
  }
  return std::pow(r, static_cast<int>(24 / (n - 1))) / q;
}

/// The classical lambda function from its product, h = exp(pi i tau).
inline cplx eval_lambda_classical_numeric(cplx tau) {
  if (tau.imag() < 0.05) throw precision_error("eval_lambda_classical_numeric: Im tau too small");
  const cplx h = std::exp(cplx(0, std::numbers::pi) * tau);
  cplx r = 1, hk = 1;
  for (std::size_t k = 1; k < detail::max_terms; ++k) {
    hk *= h;
    r *= (k % 2 == 0) ? (1.0 + hk) : 1.0 / (1.0 + hk);
    if (std::abs(hk) < 1e-18) break;
  }
  return 16.0 * h * std::pow(r, 8);
}

/// One closed-form value of Lambda at a CM point.
struct CMValueRow {
  CMPoint point;
  std::string formula;
  std::vector<cplx> candidates;  // square-root branches of the closed form; first is principal
  bool printed = true;           // false for diagnostic rows that are not stated values
};

/// The square-root branch chosen by a row, as reported.
struct CMMatch {
  NumericValue numeric;
  double residual = 0;
  int branch = -1;  // index into candidates
};

inline CMMatch match_cm_row(const CMValueRow& row, double tol = 1e-13) {
  CMMatch m;
  m.numeric = eval_lambda_numeric(row.point, tol);
  m.residual = 1e300;
  for (std::size_t k = 0; k < row.candidates.size(); ++k) {
    const double r = std::abs(m.numeric.value - row.candidates[k]);
    if (r < m.residual) {
      m.residual = r;
      m.branch = static_cast<int>(k);
    }
  }
  return m;
}

/// beta and Omega for v(m), m = 1 mod 3, at level 3.
struct BetaOmega {
  int m;
  long double beta, c3, cm;  // Omega = c3 sqrt(-3) + cm sqrt(-m)
};

inline std::vector<BetaOmega> level3_beta_omega() {
  return {{7, 1, 0.5L, -0.5L}, {19, 2, 5, -2}, {43, 6, 53, -14}, {67, 14, 293, -62}, {163, 154, 35573, -4826}};
}

inline cplx half_integral_point(int m) { return (1.0 + detail::sqrt_neg(m)) / 2.0; }

/// v(11) with chosen signs of sqrt(-3) and sqrt(-11).
inline cplx level3_v11(int sign3, int sign11) {
  const cplx s3 = static_cast<double>(sign3) * detail::sqrt_neg(3), s11 = static_cast<double>(sign11) * detail::sqrt_neg(11);
  return s3 * (-1.0 + 2.0 * s11 - 3.0 * s3) / 18.0;
}

/// Both branches of v(m) = (1 + Omega -+ beta sqrt(3 sqrt(-3) Omega)) / 2, evaluated in long double
/// (Omega is a near-cancellation for large m).
inline std::vector<cplx> level3_v(const BetaOmega& bo) {
  using lc = std::complex<long double>;
  const lc s3(0, std::sqrt(3.0L)), sm(0, std::sqrt(static_cast<long double>(bo.m)));
  const lc omega = bo.c3 * s3 + bo.cm * sm;
  const lc w = std::sqrt(3.0L * s3 * omega);
  auto cast = [](lc z) { return cplx(static_cast<double>(z.real()), static_cast<double>(z.imag())); };
  return {cast((1.0L + omega - bo.beta * w) / 2.0L), cast((1.0L + omega + bo.beta * w) / 2.0L)};
}

/// Closed-form values of Lambda: i, rho, sqrt(-2) and the (1 + sqrt(-m))/2 table at level 3;
/// i, rho, sqrt(-2), (1 + sqrt(-7))/2 at level 4.
inline std::vector<CMValueRow> cm_value_table(int n) {
  const cplx i(0, 1), rho = half_integral_point(3), s2 = detail::sqrt_neg(2), s3 = detail::sqrt_neg(3);
  std::vector<CMValueRow> rows;
  if (n == 3) {
    rows.push_back({{i, "i", 3}, "i rho", {i * rho}});
    rows.push_back({{rho, "rho", 3}, "-rho", {-rho}});
    rows.push_back({{s2, "sqrt(-2)", 3}, "(sqrt(-3) - sqrt(-2)) rho", {(s3 - s2) * rho}});
    rows.push_back({{half_integral_point(11), "(1+sqrt(-11))/2", 3}, "v(11)", {level3_v11(1, 1)}});
    for (const auto& bo : level3_beta_omega())
      rows.push_back({{half_integral_point(bo.m), "(1+sqrt(-" + std::to_string(bo.m) + "))/2", 3}, "v(" + std::to_string(bo.m) + ")", level3_v(bo)});
    return rows;
  }
  if (n == 4) {
    const cplx s7 = detail::sqrt_neg(7);
    const cplx r = std::sqrt(1.0 + std::sqrt(2.0));
    rows.push_back({{i, "i", 4}, "(i - 1)/sqrt(-2)", {(i - 1.0) / s2, -(i - 1.0) / s2}});
    rows.push_back({{rho, "rho", 4}, "i (rho - 1)", {i * (rho - 1.0)}});
    rows.push_back({{s2, "sqrt(-2)", 4}, "(1 - i)(1 - sqrt(1 + sqrt 2))/2", {(1.0 - i) * (1.0 - r) / 2.0, (1.0 - i) * (1.0 + r) / 2.0}});
    rows.push_back({{half_integral_point(7), "(1+sqrt(-7))/2", 4}, "(1 - 3i + (1 + i) sqrt(-7))/2", {(1.0 - 3.0 * i + (1.0 + i) * s7) / 2.0, (1.0 - 3.0 * i - (1.0 + i) * s7) / 2.0}});
    // values read off the roots of F(X, j(alpha)), for comparison with the two rows above
    rows.push_back({{i, "i", 4}, "(i - 1)/sqrt(2) [diagnostic]", {(i - 1.0) / std::sqrt(2.0)}, false});
    rows.push_back({{half_integral_point(7), "(1+sqrt(-7))/2", 4}, "(1 - 3i + (1 + i) sqrt(-7))/4 [diagnostic]", {(1.0 - 3.0 * i + (1.0 + i) * s7) / 4.0}, false});
    return rows;
  }
  throw std::domain_error("cm_value_table: only N = 3, 4");
}

/// The cubic EQ(m) at level 4, coefficients from the X^3 term down.
inline std::vector<cplx> level4_cubic(int m) {
  const cplx i(0, 1), sm = detail::sqrt_neg(m);
  if (m == 11) return {1, -(3.0 + 2.0 * i - sm) / 2.0, (7.0 + 2.0 * i + (2.0 * i - 1.0) * sm) / 2.0, -(3.0 * (1.0 - i) + (1.0 + i) * sm) / 2.0};
  if (m == 43)
    return {1, -(3.0 + 58.0 * i - 9.0 * sm) / 2.0, (119.0 + 58.0 * i + 9.0 * (2.0 * i - 1.0) * sm) / 2.0,
            -(59.0 * (1.0 - i) + 9.0 * (1.0 + i) * sm) / 2.0};
  cplx omega;
  if (m == 19) omega = (3.0 - 8.0 * i - 3.0 * sm) / 2.0;
  else if (m == 67) omega = (3.0 - 216.0 * i - 27.0 * sm) / 2.0;
  else if (m == 163) omega = (3.0 - 8000.0 * i - 627.0 * sm) / 2.0;
  else throw std::domain_error("level4_cubic: m must be one of 11, 19, 43, 67, 163");
  return {1, omega * i, std::conj(omega), i};
}

inline cplx horner(const std::vector<cplx>& hi_first, cplx x) {
  cplx s = 0;
  for (auto c : hi_first) s = s * x + c;
  return s;
}

/// Closed-form values, EQ(m) residuals and the norm of v(11). Diagnostic rows carry "[diagnostic]" in the name.
inline Report verify_cm_table(int n, double tol = 1e-13) {
  Report rep{"cm values, N = " + std::to_string(n), {}};
  std::vector<CMValueRow> rows = cm_value_table(n);
  std::vector<CMMatch> matches(rows.size());
  parallel_for(rows.size(), [&](std::size_t k) { matches[k] = match_cm_row(rows[k], tol); });
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const cplx v = matches[k].numeric.value;
    std::string note = "numeric " + std::to_string(v.real()) + (v.imag() < 0 ? " - " : " + ") + std::to_string(std::abs(v.imag())) + "i";
    if (rows[k].candidates.size() > 1) note += matches[k].branch == 0 ? "; principal square root" : "; negated square root";
    rep.add("Lambda(" + rows[k].point.description + ") = " + rows[k].formula, matches[k].residual, 1e-8, note);
  }
  if (n == 3) {
    cplx prod = 1;
    for (int a : {1, -1})
      for (int b : {1, -1}) prod *= level3_v11(a, b);
    rep.add("norm of v(11) = 3^-3", std::abs(prod - 1.0 / 27.0), 1e-10);
  }
  if (n == 4) {
    for (int m : {11, 19, 43, 67, 163}) {
      const NumericValue v = eval_lambda_numeric(CMPoint{half_integral_point(m), "", 4}, tol);
      rep.add("EQ(" + std::to_string(m) + ") at Lambda((1+sqrt(-" + std::to_string(m) + "))/2)", std::abs(horner(level4_cubic(m), v.value)), 1e-6);
    }
  }
  return rep;
}

inline bool is_diagnostic(const CheckRow& r) { return r.name.find("[diagnostic]") != std::string::npos; }

/// |Lambda(e^{i theta})| = 1.
inline Report unit_circle_check(i64 n, const std::vector<double>& thetas, double tol = 1e-13) {
  Report rep{"unit circle, N = " + std::to_string(n), {}};
  for (double th : thetas) {
    if (!(th > std::numbers::pi / 2 && th < std::numbers::pi)) throw std::domain_error("unit_circle_check: angle outside (pi/2, pi)");
    const NumericValue v = eval_lambda_numeric(SL2Mat::identity(), n, std::polar(1.0, th), tol);
    rep.add("|Lambda(exp(" + std::to_string(th / std::numbers::pi) + " pi i))| = 1", std::abs(std::abs(v.value) - 1.0), 1e-9);
  }
  return rep;
}

/// Lambda(alpha)^{-1} = conj(Lambda(alpha / |alpha|^2)).
inline Report reciprocal_check(i64 n, const std::vector<cplx>& points, double tol = 1e-13) {
  Report rep{"reciprocal law, N = " + std::to_string(n), {}};
  for (cplx a : points) {
    const cplx lhs = 1.0 / eval_lambda_numeric(SL2Mat::identity(), n, a, tol).value;
    const cplx rhs = std::conj(eval_lambda_numeric(SL2Mat::identity(), n, a / std::norm(a), tol).value);
    rep.add("alpha = " + std::to_string(a.real()) + " + " + std::to_string(a.imag()) + "i", std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)), 1e-9);
  }
  return rep;
}

/// Horner evaluation of p(s) for a series s.
inline QSeries compose(const KPoly& p, const QSeries& s) {
  const int lv = s.level();
  if (p.is_zero()) return QSeries::zero(lv, s.prec());
  QSeries acc = QSeries::constant(p.lead(), std::max<i64>(s.prec(), 1));
  for (std::size_t k = p.coeffs().size() - 1; k-- > 0;) acc = acc * s + p.coeffs()[k];
  return acc;
}

/// A polynomial identity sum_k c_k(q) p_k(Lambda) = 0 among q-series.
struct SeriesIdentity {
  std::string name;
  std::vector<std::pair<std::string, KPoly>> terms;  // (series name, polynomial in Lambda)
  bool printed = true;                                // false for sign-corrected diagnostic variants
};

/// The identities among Lambda, g_N, lambda and j at N = 3, 4, cleared of denominators.
/// Series names: "1", "g" for g_N^(24/(N-1)), "lambda" for Lambda(tau; (0,1), (1,0)) of level 2, "j".
inline std::vector<SeriesIdentity> level_identities(int n) {
  using detail::cyc;
  const KPoly X = KPoly::monomial(n, 1, CycNum::one(n));
  auto c = [n](std::vector<mpq_class> v) { return KPoly::constant(cyc(n, std::move(v))); };
  const JClosedForm jc = j_closed_form(n);
  SeriesIdentity jexpr{"j expression", {{"j", jc.den.pow(jc.den_pow)}, {"1", -(jc.num.pow(jc.num_pow) * jc.scale)}}};
  if (n == 3) {
    const KPoly l3 = X.pow(3);
    const KPoly rest = (X - c({1})) * (X + c({0, 1}));
    return {{"Fermat cubic (Lambda g^4)^3 + (3 Lambda)^3 = (3 (Lambda + zeta - 1))^3",
             {{"g", l3}, {"1", l3 * CycNum::from_int(3, 27) - (X + c({-1, 1})).pow(3) * CycNum::from_int(3, 27)}}},
            {"g^12 = 81 (1 - zeta)(Lambda - 1)(Lambda + zeta) / Lambda^3", {{"g", l3}, {"1", -(c({81, -81}) * rest)}}},
            {"g^12 = 81 (zeta - 1)(Lambda - 1)(Lambda + zeta) / Lambda^3 [diagnostic]", {{"g", l3}, {"1", -(c({-81, 81}) * rest)}}, false},
            jexpr};
  }
  if (n == 4) {
    const KPoly l4 = X.pow(4);
    const KPoly a = X - c({mpq_class(1, 2), mpq_class(-1, 2)});
    return {{"Fermat quartic (Lambda g^2)^4 + (2 Lambda)^4 = (2 (Lambda + 1 - i))^4",
             {{"g", l4}, {"1", l4 * CycNum::from_int(4, 16) - (X + c({1, -1})).pow(4) * CycNum::from_int(4, 16)}}},
            {"Fermat quartic (Lambda g^2)^4 + (2 Lambda)^4 = (2 (Lambda - 1 + i))^4 [diagnostic]",
             {{"g", l4}, {"1", l4 * CycNum::from_int(4, 16) - (X + c({-1, 1})).pow(4) * CycNum::from_int(4, 16)}},
             false},
            {"g^8 = -2^6 (1 - i)(Lambda + i)(Lambda - 1)(Lambda + (i - 1)/2) / Lambda^4",
             {{"g", l4}, {"1", c({64, -64}) * (X + c({0, 1})) * (X - c({1})) * (X + c({mpq_class(-1, 2), mpq_class(1, 2)}))}}},
            {"lambda = 2i ((Lambda - (1 - i)/2) / (Lambda (Lambda - 1 + i)))^2",
             {{"lambda", (X * (X + c({-1, 1}))).pow(2)}, {"1", -(a.pow(2) * c({0, 2}))}}},
            jexpr};
  }
  throw std::domain_error("level_identities: only N = 3, 4");
}

/// j lambda^2 (lambda - 1)^2 - 2^8 (lambda^2 - lambda + 1)^3 as a series.
inline QSeries j_lambda_residual(i64 n, const QSeries& lam, const QSeries& j) {
  const int lv = static_cast<int>(n);
  const KPoly Y = KPoly::monomial(lv, 1, CycNum::one(lv));
  const KPoly one = KPoly::constant(CycNum::one(lv));
  const KPoly lhs = (Y * (Y - one)).pow(2);
  const KPoly rhs = (Y * Y - Y + one).pow(3) * CycNum::from_int(lv, 256);
  return j * compose(lhs, lam) - compose(rhs, lam);
}

/// Lambda(tau; (0,1), (1,0)) of level 2 at tau, from the E-series written at an even level N.
inline cplx eval_lambda_level_two_numeric(i64 n, cplx tau, double tol = 1e-13) {
  const i64 h = n / 2;
  const EIndex a = EIndex::make(0, h, n), b = EIndex::make(h, 0, n), ab = EIndex::make(h, h, n);
  const cplx ea = eval_e_numeric(a, n, tau, tol).value, eb = eval_e_numeric(b, n, tau, tol).value, eab = eval_e_numeric(ab, n, tau, tol).value;
  return (ea - eab) / (eb - eab);
}

/// Each identity as an exact q-series identity over at least prec exponents, and at three random points.
inline Report verify_identities(int n, i64 prec = 100, std::uint32_t seed = 1) {
  if (n != 3 && n != 4) throw std::domain_error("verify_identities: only N = 3, 4");
  Report rep{"identities, N = " + std::to_string(n), {}};
  const auto ids = level_identities(n);
  std::vector<cplx> taus;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.9, 1.6);
  for (int k = 0; k < 3; ++k) taus.emplace_back(re(rng), im(rng));

  auto series_of = [&](const std::string& name, i64 p) -> QSeries {
    if (name == "1") return QSeries::constant(CycNum::one(n), p);
    if (name == "g") return g_pow_series(n, p);
    if (name == "lambda") return lambda_level_two_series(n, p);
    if (name == "j") return j_series(n, p);
    throw std::logic_error("verify_identities: unknown series " + name);
  };
  auto numeric_of = [&](const std::string& name, cplx tau) -> cplx {
    if (name == "1") return 1.0;
    if (name == "g") return eval_g_pow_numeric(n, tau);
    if (name == "lambda") return eval_lambda_level_two_numeric(n, tau);
    if (name == "j") return eval_j_numeric(tau);
    throw std::logic_error("verify_identities: unknown series " + name);
  };
  auto tag = [](const std::string& name, const std::string& kind) {
    const auto p = name.find(" [diagnostic]");
    return p == std::string::npos ? name + " (" + kind + ")" : name.substr(0, p) + " (" + kind + ") [diagnostic]";
  };

  for (const auto& id : ids) {
    i64 margin = 4 * n;
    QSeries res;
    for (;;) {
      const i64 p = prec + margin;
      const QSeries lam = lambda_series(SL2Mat::identity(), n, p);
      res = QSeries::zero(n, p + 1000);
      for (const auto& [name, poly] : id.terms) res = res + series_of(name, p) * compose(poly, lam);
      if (res.prec() >= prec) break;
      margin *= 2;
    }
    rep.add_exact(tag(id.name, "series"), res.is_zero(), "window below q^" + std::to_string(res.prec()));
    double worst = 0;
    for (cplx tau : taus) {
      const cplx lam = eval_lambda_numeric(SL2Mat::identity(), n, tau).value;
      cplx s = 0;
      double scale = 0;
      for (const auto& [name, poly] : id.terms) {
        const cplx t = numeric_of(name, tau) * poly.eval(lam);
        s += t;
        scale = std::max(scale, std::abs(t));
      }
      worst = std::max(worst, std::abs(s) / std::max(scale, 1.0));
    }
    rep.add(tag(id.name, "numeric, 3 points"), worst, 1e-8);
  }
  if (n == 4) {
    auto wide = [&](auto make) {
      i64 p = prec + 8;
      for (;;) {
        QSeries r = make(p);
        if (r.prec() >= prec) return r;
        p *= 2;
      }
    };
    const QSeries r1 = wide([&](i64 p) { return j_lambda_residual(n, lambda_level_two_series(n, p), j_series(n, p)); });
    rep.add_exact("j = 2^8 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2), lambda = Lambda(tau; (0,1), (1,0)) (series)", r1.is_zero(),
                  "window below q^" + std::to_string(r1.prec()));
    const QSeries r2 = wide([&](i64 p) { return j_lambda_residual(n, lambda_classical_series(n, p), j_series(n, p)); });
    rep.add_exact("j = 2^8 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2), classical lambda product (series)", r2.is_zero(),
                  "window below q^" + std::to_string(r2.prec()));
    const QSeries r3 = wide([&](i64 p) {
      const QSeries lc = lambda_classical_series(n, p);
      return lambda_level_two_series(n, p) * lc - lc + CycNum::one(n);
    });
    rep.add_exact("Lambda(tau; (0,1), (1,0)) = (lambda - 1)/lambda for the classical lambda product (series)", r3.is_zero(),
                  "window below q^" + std::to_string(r3.prec()));
  }
  return rep;
}

}  // namespace genlambda
