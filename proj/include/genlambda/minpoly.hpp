#pragma once

// The polynomial F(X, Y) over K_N with F(X, j) = prod_{A in R} (X - Lambda o A),
// R a transversal of +-Gamma(N) in SL2(Z), and checks of its structure.

#include <algorithm>
#include <complex>
#include <limits>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "genlambda/counts.hpp"
#include "genlambda/kpoly.hpp"
#include "genlambda/lambda.hpp"

namespace genlambda {

/// Monic polynomial in X with series coefficients; c[i] multiplies X^(deg - i), c[0] = 1 is implicit.
struct SeriesPoly {
  int level = 0;
  std::vector<QSeries> c;  // c[0] unused (the leading 1); c.size() = deg + 1
  std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
};

namespace detail {

struct Window {
  i64 ord, prec;
};

inline Window product_window(const QSeries& a, const QSeries& b) {
  return {a.ord() + b.ord(), std::min(a.prec() + b.ord(), b.prec() + a.ord())};
}

}  // namespace detail

/// Product of two monic series polynomials; each output coefficient is accumulated
/// in one pass and carries the honest precision of its inputs.
inline SeriesPoly series_poly_mul(const SeriesPoly& a, const SeriesPoly& b) {
  const std::size_t da = a.degree(), db = b.degree(), dc = da + db;
  SeriesPoly out{a.level, std::vector<QSeries>(dc + 1)};
  const CycContext& ctx = CycContext::get(a.level);
  parallel_for(dc, [&](std::size_t idx) {
    const std::size_t k = idx + 1;
    i64 ord = std::numeric_limits<i64>::max(), prec = std::numeric_limits<i64>::max();
    auto widen = [&](i64 o, i64 p, bool nonzero) {
      prec = std::min(prec, p);
      if (nonzero) ord = std::min(ord, o);
    };
    if (k <= da) widen(a.c[k].ord(), a.c[k].prec(), !a.c[k].is_zero());
    if (k <= db) widen(b.c[k].ord(), b.c[k].prec(), !b.c[k].is_zero());
    const std::size_t lo = k > db ? k - db : 1, hi = std::min(da, k - 1);
    for (std::size_t i = lo; i <= hi && lo <= hi; ++i) {
      const auto w = detail::product_window(a.c[i], b.c[k - i]);
      widen(w.ord, w.prec, !a.c[i].is_zero() && !b.c[k - i].is_zero());
    }
    if (ord >= prec) {
      out.c[k] = QSeries::zero(a.level, prec);
      return;
    }
    std::vector<CycAccumulator> acc(static_cast<std::size_t>(prec - ord), CycAccumulator(ctx));
    auto add_single = [&](const QSeries& s) {
      for (std::size_t e = 0; e < s.coeffs().size(); ++e) {
        const i64 x = s.ord() + static_cast<i64>(e);
        if (x >= prec) break;
        if (!s.coeffs()[e].is_zero()) acc[static_cast<std::size_t>(x - ord)].add(s.coeffs()[e]);
      }
    };
    if (k <= da) add_single(a.c[k]);
    if (k <= db) add_single(b.c[k]);
    for (std::size_t i = lo; i <= hi && lo <= hi; ++i) {
      const QSeries &x = a.c[i], &y = b.c[k - i];
      if (x.is_zero() || y.is_zero()) continue;
      const auto& xc = x.coeffs();
      const auto& yc = y.coeffs();
      std::vector<std::size_t> ny;
      for (std::size_t t = 0; t < yc.size(); ++t)
        if (!yc[t].is_zero()) ny.push_back(t);
      for (std::size_t s = 0; s < xc.size(); ++s) {
        if (xc[s].is_zero()) continue;
        const i64 es = x.ord() + static_cast<i64>(s);
        for (std::size_t t : ny) {
          const i64 e = es + y.ord() + static_cast<i64>(t);
          if (e >= prec) break;
          acc[static_cast<std::size_t>(e - ord)].add_product(xc[s], yc[t]);
        }
      }
    }
    std::vector<CycNum> cs;
    cs.reserve(acc.size());
    for (auto& x : acc) cs.push_back(x.take());
    out.c[k] = QSeries(a.level, ord, std::move(cs));
  });
  return out;
}

/// prod_{i=0}^{N-1} (X - f(zeta^i q)) from the power sums p_m = N * (exponents of f^m divisible by N).
inline SeriesPoly orbit_polynomial(const QSeries& f, i64 n) {
  const int lv = f.level();
  std::vector<QSeries> p(static_cast<std::size_t>(n) + 1);
  QSeries fm = f;
  for (i64 m = 1; m <= n; ++m) {
    if (m > 1) fm = fm * f;
    p[static_cast<std::size_t>(m)] = fm.grid_part(n) * n;
  }
  SeriesPoly out{lv, std::vector<QSeries>(static_cast<std::size_t>(n) + 1)};
  // k c_k = -sum_{m=1..k} p_m c_{k-m}, c_0 = 1
  for (i64 k = 1; k <= n; ++k) {
    QSeries s = p[static_cast<std::size_t>(k)];
    for (i64 m = 1; m < k; ++m) s = s + p[static_cast<std::size_t>(m)] * out.c[static_cast<std::size_t>(k - m)];
    out.c[static_cast<std::size_t>(k)] = s * mpq_class(-1, static_cast<long>(k));
    if (!out.c[static_cast<std::size_t>(k)].supported_on_grid(n))
      throw std::logic_error("orbit_polynomial: coefficient off the N-grid");
  }
  return out;
}

/// Minimum precision accepted for the Lambda series.
inline i64 default_precision(i64 n) { return n * (ell_t(n, CountRoute::enumeration).ell + 2); }

/// Coefficient series of prod_{A in R} (X - Lambda o A): entry i multiplies X^(d_N - i).
inline std::vector<QSeries> product_poly(i64 n, i64 prec, PairConvention conv = PairConvention::smaller_primary) {
  if (n < 3) throw std::invalid_argument("product_poly: N must be at least 3");
  if (prec < default_precision(n)) throw precision_error("product_poly: precision below N(ell_N + 2)");
  const auto reps = cusp_reps(n, conv);
  std::vector<SeriesPoly> orbits(reps.size());
  parallel_for(reps.size(), [&](std::size_t k) { orbits[k] = orbit_polynomial(lambda_series(reps[k].matrix, n, prec), n); });
  SeriesPoly full = tree_reduce(std::move(orbits), [](const SeriesPoly& x, const SeriesPoly& y) { return series_poly_mul(x, y); });
  std::vector<QSeries> out(full.c.size());
  out[0] = QSeries::constant(CycNum::one(static_cast<int>(n)), std::max<i64>(prec, 1));
  for (std::size_t i = 1; i < full.c.size(); ++i) {
    if (!full.c[i].supported_on_grid(n)) throw std::logic_error("product_poly: coefficient " + std::to_string(i) + " has off-grid support");
    out[i] = std::move(full.c[i]);
  }
  return out;
}

/// Powers j^0 .. j^m of the j-series, each exact below prec.
class JPowers {
 public:
  JPowers(i64 n, i64 max_power, i64 prec) : n_(n) {
    const int lv = static_cast<int>(n);
    const QSeries j = j_series(n, prec + std::max<i64>(max_power - 1, 0) * n);
    pw_.push_back(QSeries::constant(CycNum::one(lv), prec));
    if (max_power >= 1) pw_.push_back(j);
    for (i64 m = 2; m <= max_power; ++m) pw_.push_back(pw_.back() * j);
    for (auto& s : pw_) s = s.truncate(std::min(s.prec(), prec));
  }
  const QSeries& operator[](std::size_t m) const { return pw_.at(m); }
  std::size_t size() const { return pw_.size(); }
  i64 level() const { return n_; }

 private:
  i64 n_;
  std::vector<QSeries> pw_;
};

/// The polynomial P(Y) with P(j) = f on the window of f; the remainder must vanish exactly.
inline KPoly reduce_to_j(const QSeries& f, const JPowers& jp) {
  const i64 n = jp.level();
  const int lv = f.level();
  if (f.prec() <= n) throw precision_error("reduce_to_j: window must reach exponent N");
  if (!f.supported_on_grid(n)) throw std::domain_error("reduce_to_j: input has off-grid support");
  if (f.is_zero()) return KPoly(lv, {});
  const i64 lo = std::min<i64>(f.ord(), 0);
  if (mod(lo, n) != 0) throw std::domain_error("reduce_to_j: order off the N-grid");
  const i64 top = -lo / n;
  if (static_cast<std::size_t>(top) >= jp.size()) throw std::domain_error("reduce_to_j: pole order exceeds available powers of j");
  std::vector<CycNum> res(static_cast<std::size_t>(f.prec() - lo), CycNum(lv));
  for (i64 e = f.ord(); e < f.prec(); ++e) res[static_cast<std::size_t>(e - lo)] = f.coeff(e);
  std::vector<CycNum> poly(static_cast<std::size_t>(top) + 1, CycNum(lv));
  for (i64 m = top; m >= 0; --m) {
    const CycNum c = res[static_cast<std::size_t>(-m * n - lo)];
    if (c.is_zero()) continue;
    poly[static_cast<std::size_t>(m)] = c;
    const QSeries& jm = jp[static_cast<std::size_t>(m)];
    if (jm.prec() < f.prec()) throw precision_error("reduce_to_j: j power too short");
    for (std::size_t t = 0; t < jm.coeffs().size(); ++t) {
      const i64 e = jm.ord() + static_cast<i64>(t);
      if (e >= f.prec()) break;
      const auto& jc = jm.coeffs()[t];
      if (jc.is_zero()) continue;
      res[static_cast<std::size_t>(e - lo)] -= c * jc.coord(0);
    }
  }
  for (std::size_t t = 0; t < res.size(); ++t)
    if (!res[t].is_zero())
      throw precision_error("reduce_to_j: nonzero remainder at exponent " + std::to_string(lo + static_cast<i64>(t)));
  return KPoly(lv, std::move(poly));
}

/// F(X, Y) = sum_i P_i(Y) X^(d_N - i).
struct BivarPoly {
  int level = 0;
  i64 d_n = 0, ell_n = 0, t_n = 0, prec = 0;
  std::vector<KPoly> P;  // P[i] in K_N[Y], i = 0 .. d_N

  long deg_y() const {
    long d = -1;
    for (const auto& p : P) d = std::max(d, p.degree());
    return d;
  }
  long deg_x() const { return static_cast<long>(P.size()) - 1; }

  /// F(X, y) as a polynomial in X.
  KPoly specialize(const CycNum& y) const {
    std::vector<CycNum> c(P.size(), CycNum(level));
    for (std::size_t i = 0; i < P.size(); ++i) c[P.size() - 1 - i] = P[i].eval(y);
    return KPoly(level, std::move(c));
  }
  /// Q_k(X): the coefficient of Y^(ell - k).
  KPoly q_coefficient(long k) const {
    const long target = deg_y() - k;
    std::vector<CycNum> c(P.size(), CycNum(level));
    for (std::size_t i = 0; i < P.size(); ++i) c[P.size() - 1 - i] = P[i].coeff(static_cast<std::size_t>(target));
    return KPoly(level, std::move(c));
  }
  std::complex<double> eval(std::complex<double> x, std::complex<double> y) const {
    std::complex<double> s = 0;
    for (const auto& p : P) s = s * x + p.eval(y);
    return s;
  }

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
    return a.level == b.level && a.d_n == b.d_n && a.ell_n == b.ell_n && a.t_n == b.t_n && a.P == b.P;
  }
};

struct RootCheck {
  bool ok = false;
  i64 window = 0;  // exponents verified: [ord, window)
};

/// Checks F(Lambda o A, j) = 0 as a q-series; uses 1/Lambda with reversed coefficients when Lambda has a pole.
inline RootCheck root_identity_check(const BivarPoly& f, const SL2Mat& m) {
  const i64 n = f.level;
  const i64 target = f.prec - n * f.ell_n;
  const QSeries lam = lambda_series(m, n, f.prec);
  const QSeries x = nu(m, n) >= 0 ? lam : lam.inv();
  const JPowers jp(n, f.ell_n, f.prec + n);
  auto pj = [&](std::size_t i) {
    QSeries s = QSeries::zero(f.level, f.prec + n);
    for (std::size_t k = 0; k < f.P[i].coeffs().size(); ++k)
      if (!f.P[i].coeffs()[k].is_zero()) s = s + jp[k] * f.P[i].coeffs()[k];
    return s;
  };
  const std::size_t d = f.P.size() - 1;
  const bool forward = nu(m, n) >= 0;
  QSeries acc = pj(forward ? 0 : d);
  for (std::size_t step = 1; step <= d; ++step) {
    const std::size_t i = forward ? step : d - step;
    acc = acc * x + pj(i);
    if (acc.prec() > target) acc = acc.truncate(target);
  }
  return {acc.is_zero() && acc.prec() >= n, acc.prec()};
}

/// Transversal members used by the self-check: the identity, up to three members where
/// Lambda o A has neither zero nor pole (every power of Lambda is then visible in the
/// window), and one member with a pole.
inline std::vector<SL2Mat> self_check_matrices(i64 n) {
  const auto tr = transversal(n);
  std::vector<SL2Mat> out{SL2Mat::identity()}, finite;
  std::optional<SL2Mat> pole;
  for (const auto& e : tr) {
    const i64 v = nu(e.matrix, n);
    if (v == 0) finite.push_back(e.matrix);
    if (v < 0 && !pole) pole = e.matrix;
  }
  for (std::size_t k = 0; k < 3 && k < finite.size(); ++k) out.push_back(finite[(k * finite.size()) / 3]);
  if (pole) out.push_back(*pole);
  return out;
}

/// Builds F. prec = 0 selects the default N(ell_N + 2); lower values are rejected.
inline BivarPoly build_F(i64 n, i64 prec = 0, PairConvention conv = PairConvention::smaller_primary, bool self_check = true) {
  if (n < 3) throw std::invalid_argument("build_F: N must be at least 3");
  const EllT lt = ell_t(n, CountRoute::enumeration);
  const i64 min_prec = n * (lt.ell + 2);
  if (prec == 0) prec = min_prec;
  if (prec < min_prec) throw precision_error("build_F: precision " + std::to_string(prec) + " below the minimum " + std::to_string(min_prec));
  const auto coeffs = product_poly(n, prec, conv);
  BivarPoly f;
  f.level = static_cast<int>(n);
  f.d_n = d_n(n);
  f.ell_n = lt.ell;
  f.t_n = lt.t;
  f.prec = prec;
  if (static_cast<i64>(coeffs.size()) != f.d_n + 1) throw std::logic_error("build_F: wrong X-degree");
  i64 max_pole = 0;
  for (const auto& c : coeffs)
    if (!c.is_zero()) max_pole = std::max(max_pole, -c.ord() / n);
  i64 max_window = 0;
  for (const auto& c : coeffs) max_window = std::max(max_window, c.prec());
  const JPowers jp(n, max_pole, max_window);
  f.P.resize(coeffs.size());
  f.P[0] = KPoly::constant(CycNum::one(f.level));
  parallel_for(coeffs.size() - 1, [&](std::size_t k) { f.P[k + 1] = reduce_to_j(coeffs[k + 1], jp); });
  if (self_check)
    for (const auto& m : self_check_matrices(n))
      if (!root_identity_check(f, m).ok) throw std::logic_error("build_F: F(Lambda o A, j) != 0 for A = " + m.to_string());
  return f;
}

struct ClauseResult {
  std::string name;
  bool claimed = true;  // false when the level lies outside the theorem's hypotheses
  bool pass = false;
  std::string detail;
};

/// The structural statements about the P_i.
inline std::vector<ClauseResult> verify_theorem1(const BivarPoly& f) {
  const int n = f.level;
  const bool claimed = n != 6;
  const std::size_t d = f.P.size() - 1;
  std::vector<ClauseResult> out;

  ClauseResult a{"P_dN = 1", claimed, f.P[d] == KPoly::constant(CycNum::one(n)), ""};
  out.push_back(a);

  ClauseResult b{"P_(dN-i) = conj(P_i)", claimed, true, ""};
  for (std::size_t i = 0; i <= d; ++i)
    if (f.P[d - i] != f.P[i].conj()) {
      b.pass = false;
      b.detail = "fails at i = " + std::to_string(i);
      break;
    }
  out.push_back(b);

  ClauseResult c{"deg P_i < i/2", claimed, true, ""};
  for (std::size_t i = 1; i <= d; ++i)
    if (!f.P[i].is_zero() && 2 * f.P[i].degree() >= static_cast<long>(i)) {
      c.pass = false;
      c.detail = "fails at i = " + std::to_string(i) + " (degree " + std::to_string(f.P[i].degree()) + ")";
      break;
    }
  if (c.pass && (f.P[1].degree() > 0 || f.P[2].degree() > 0)) {
    c.pass = false;
    c.detail = "P_1 or P_2 not constant";
  }
  out.push_back(c);

  ClauseResult e{"(1-zeta)^(3i) P_i integral", claimed, true, ""};
  const CycNum u3 = (CycNum::one(n) - CycNum::zeta(n)).pow(3);
  CycNum scale = CycNum::one(n);
  for (std::size_t i = 0; i <= d && e.pass; ++i) {
    if (i > 0) scale = scale * u3;
    for (const auto& co : f.P[i].coeffs())
      if (!is_integral(co * scale)) {
        e.pass = false;
        e.detail = "fails at i = " + std::to_string(i);
        break;
      }
  }
  out.push_back(e);

  ClauseResult g{"max deg P_i = deg P_(N t_N) = ell_N", claimed, true, ""};
  const std::size_t nt = static_cast<std::size_t>(n * f.t_n);
  const long maxdeg = f.deg_y();
  if (nt > d || f.P[nt].degree() != maxdeg || maxdeg != f.ell_n) {
    g.pass = false;
    g.detail = "deg P_(N t_N) = " + (nt <= d ? std::to_string(f.P[nt].degree()) : std::string("n/a")) + ", max = " + std::to_string(maxdeg) +
               ", ell_N = " + std::to_string(f.ell_n);
  }
  out.push_back(g);
  return out;
}

enum class FactorShape { cube, square, square_free };

struct FactorCertificate {
  FactorShape shape = FactorShape::square_free;
  bool ok = false;
  KPoly h;                     // F(X, y) = c h^k for the cube/square shapes
  CycNum c;                    // the constant
  bool h0_nonzero = false;     // h(0) != 0
  SquareFreeCertificate sqf;   // of h (cube/square) or of F(X, y)
  std::optional<bool> exact_yun;  // exact square-free decomposition agrees (when run)
  std::string detail;
};

/// Factorization shape of F(X, y): y = 0 gives c h^3, y = 1728 gives c h^2, other y square-free.
inline FactorCertificate specialize_and_factor(const BivarPoly& f, const CycNum& y, bool run_exact_yun = false) {
  FactorCertificate cert;
  const KPoly fy = f.specialize(y);
  const bool is0 = y.is_zero(), is1728 = y == CycNum::from_int(f.level, 1728);
  if (!is0 && !is1728) {
    cert.shape = FactorShape::square_free;
    cert.sqf = square_free_certificate(fy);
    cert.ok = cert.sqf.certified;
    if (run_exact_yun) {
      const auto parts = yun_decomposition(fy);
      cert.exact_yun = parts.size() == 1;
      cert.ok = cert.ok && *cert.exact_yun;
    }
    cert.detail = cert.ok ? "gcd(F, dF/dX) = 1" : "no square-free certificate";
    return cert;
  }
  const unsigned k = is0 ? 3 : 2;
  cert.shape = is0 ? FactorShape::cube : FactorShape::square;
  cert.c = fy.lead();
  const auto root = exact_kth_root(fy.monic(), k);
  if (!root) {
    cert.detail = "not a perfect power";
    return cert;
  }
  cert.h = *root;
  cert.h0_nonzero = !cert.h.coeff(0).is_zero();
  cert.sqf = square_free_certificate(cert.h);
  const bool deg_ok = cert.h.degree() * static_cast<long>(k) == f.deg_x();
  cert.ok = deg_ok && cert.h0_nonzero && cert.sqf.certified;
  if (run_exact_yun) {
    const auto parts = yun_decomposition(fy);
    bool shape_ok = parts.size() == k && parts.back() == cert.h;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) shape_ok = shape_ok && parts[i].degree() == 0;
    cert.exact_yun = shape_ok;
    cert.ok = cert.ok && shape_ok;
  }
  cert.detail = "deg h = " + std::to_string(cert.h.degree()) + (cert.ok ? "" : " (certificate incomplete)");
  return cert;
}

/// j = scale * num(Lambda)^num_pow / den(Lambda)^den_pow.
struct JClosedForm {
  CycNum scale;
  KPoly num, den;
  unsigned num_pow = 0, den_pow = 0;
};

namespace detail {
inline CycNum cyc(int level, std::vector<mpq_class> coords) {
  coords.resize(static_cast<std::size_t>(CycContext::get(level).degree()));
  return CycNum::from_coords(level, coords);
}
inline KPoly kpoly_product(const std::vector<KPoly>& fs) {
  KPoly r = KPoly::constant(CycNum::one(fs.front().level()));
  for (const auto& f : fs) r = r * f;
  return r;
}
}  // namespace detail

/// The known rational expressions of j in Lambda for N = 3 (basis 1, zeta) and N = 4 (basis 1, i).
inline JClosedForm j_closed_form(int n) {
  using detail::cyc;
  auto lin = [n](std::vector<mpq_class> root) { return KPoly::linear_root(cyc(n, std::move(root))); };
  auto quad = [n](std::vector<mpq_class> c1, std::vector<mpq_class> c0) {
    return KPoly(n, {cyc(n, std::move(c0)), cyc(n, std::move(c1)), CycNum::one(n)});
  };
  if (n == 3) {
    // sqrt(-3) = 1 + 2 zeta
    return {cyc(3, {-81, -162}),
            detail::kpoly_product({lin({1, -1}), lin({mpq_class(1, 3), mpq_class(-1, 3)}), lin({-1, -1}), lin({1, 1})}),
            detail::kpoly_product({lin({0}), lin({1}), lin({0, -1})}), 3, 3};
  }
  if (n == 4) {
    return {cyc(4, {-64}),
            detail::kpoly_product({quad({-1, 2}, {0, -1}), quad({-2, 1}, {0, -1}), quad({-1}, {1}), quad({0, 1}, {-1})}),
            detail::kpoly_product({lin({0}), lin({0, -1}), lin({1}), lin({1, -1}), lin({mpq_class(1, 2), mpq_class(-1, 2)})}), 3, 4};
  }
  throw std::domain_error("j_closed_form: only N = 3, 4");
}

struct RationalJ {
  KPoly q0, q1;                        // F = Q0 Y + Q1, so j = -Q1(Lambda) / Q0(Lambda)
  std::optional<bool> closed_form_ok;  // -Q1 den^b == scale num^a Q0, for N = 3, 4
};

/// For ell_N = 1 only.
inline RationalJ rational_j_expression(const BivarPoly& f) {
  if (f.deg_y() != 1) throw std::domain_error("rational_j_expression: needs deg_Y F = 1 (N = 3, 4)");
  RationalJ r{f.q_coefficient(0), f.q_coefficient(1), std::nullopt};
  if (f.level == 3 || f.level == 4) {
    const JClosedForm c = j_closed_form(f.level);
    const KPoly lhs = r.q1 * c.den.pow(c.den_pow);
    const KPoly rhs = c.num.pow(c.num_pow) * r.q0 * c.scale;
    r.closed_form_ok = !r.q0.is_zero() && (lhs + rhs).is_zero();
  }
  return r;
}

struct Q0Check {
  bool ok = false;
  std::size_t finite_cusps = 0;  // cusps where Lambda has neither zero nor pole
  std::vector<CycNum> roots;
  std::string detail;
};

/// Q_0 = c X^(N t_N) prod_k (X - Lambda(alpha_k))^N, the roots read off the constant
/// terms of Lambda o A at the cusps with nu(A) = 0.
inline Q0Check q0_structure_check(const BivarPoly& f, PairConvention conv = PairConvention::smaller_primary) {
  const i64 n = f.level;
  Q0Check r;
  for (const auto& c : cusp_reps(n, conv)) {
    if (nu(c.matrix, n) != 0) continue;
    r.roots.push_back(lambda_series(c.matrix, n, 1).coeff(0));
  }
  r.finite_cusps = r.roots.size();
  const KPoly q0 = f.q_coefficient(0);
  KPoly expect = KPoly::monomial(f.level, static_cast<std::size_t>(n * f.t_n), CycNum::one(f.level));
  for (const auto& v : r.roots) expect = expect * KPoly::linear_root(v).pow(static_cast<unsigned>(n));
  const bool count_ok = static_cast<i64>(r.finite_cusps) == f.d_n / n - 2 * f.t_n;
  const bool shape_ok = !q0.is_zero() && q0 == expect * q0.lead();
  r.ok = count_ok && shape_ok;
  r.detail = "deg Q0 = " + std::to_string(q0.degree()) + ", expected " + std::to_string(f.d_n - n * f.t_n);
  return r;
}

}  // namespace genlambda
