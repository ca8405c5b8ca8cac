#pragma once

// Dense univariate polynomials over K_N: arithmetic, Euclidean division and
// gcd, square-free decomposition, exact k-th roots, and reduction modulo a
// prime ideal of degree one for gcd certificates.

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "genlambda/cyclotomic.hpp"

namespace genlambda {

/// Coefficients low degree first; no trailing zeros (the zero polynomial is empty).
class KPoly {
 public:
  KPoly() = default;
  KPoly(int level, std::vector<CycNum> coeffs) : level_(level), c_(std::move(coeffs)) { trim(); }

  static KPoly constant(const CycNum& v) { return KPoly(v.level(), {v}); }
  /// X - root.
  static KPoly linear_root(const CycNum& root) { return KPoly(root.level(), {-root, CycNum::one(root.level())}); }
  static KPoly monomial(int level, std::size_t deg, const CycNum& v) {
    std::vector<CycNum> c(deg + 1, CycNum(level));
    c[deg] = v;
    return KPoly(level, std::move(c));
  }

  int level() const { return level_; }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<CycNum>& coeffs() const { return c_; }
  CycNum coeff(std::size_t i) const { return i < c_.size() ? c_[i] : CycNum(level_); }
  const CycNum& lead() const {
    if (c_.empty()) throw std::domain_error("KPoly::lead: zero polynomial");
    return c_.back();
  }

  friend bool operator==(const KPoly& a, const KPoly& b) { return a.c_ == b.c_; }

  friend KPoly operator+(const KPoly& a, const KPoly& b) { return combine(a, b, 1); }
  friend KPoly operator-(const KPoly& a, const KPoly& b) { return combine(a, b, -1); }
  KPoly operator-() const {
    KPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend KPoly operator*(const KPoly& a, const KPoly& b) {
    if (a.is_zero() || b.is_zero()) return KPoly(a.level_ ? a.level_ : b.level_, {});
    const CycContext& ctx = a.c_[0].context();
    std::vector<CycAccumulator> acc(a.c_.size() + b.c_.size() - 1, CycAccumulator(ctx));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (!b.c_[j].is_zero()) acc[i + j].add_product(a.c_[i], b.c_[j]);
    }
    std::vector<CycNum> out;
    out.reserve(acc.size());
    for (auto& x : acc) out.push_back(x.take());
    return KPoly(a.level_, std::move(out));
  }
  friend KPoly operator*(const KPoly& a, const CycNum& s) {
    KPoly r = a;
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
  }

  KPoly pow(unsigned e) const {
    KPoly r = constant(CycNum::one(level_)), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  KPoly derivative() const {
    if (c_.size() <= 1) return KPoly(level_, {});
    std::vector<CycNum> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<i64>(i));
    return KPoly(level_, std::move(d));
  }

  KPoly monic() const {
    if (is_zero()) return *this;
    return *this * lead().inv();
  }

  CycNum eval(const CycNum& x) const {
    CycNum s(level_);
    for (std::size_t i = c_.size(); i-- > 0;) s = s * x + c_[i];
    return s;
  }
  std::complex<double> eval(std::complex<double> x) const {
    std::complex<double> s = 0;
    for (std::size_t i = c_.size(); i-- > 0;) s = s * x + c_[i].to_complex();
    return s;
  }

  KPoly conj() const {
    KPoly r = *this;
    for (auto& x : r.c_) x = x.conj();
    return r;
  }

  /// Quotient and remainder.
  friend std::pair<KPoly, KPoly> divmod(KPoly a, const KPoly& b) {
    if (b.is_zero()) throw std::domain_error("KPoly::divmod: division by zero");
    const CycNum binv = b.lead().inv();
    const long db = b.degree();
    std::vector<CycNum> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, CycNum(b.level_));
    while (!a.is_zero() && a.degree() >= db) {
      const std::size_t shift = static_cast<std::size_t>(a.degree() - db);
      const CycNum t = a.lead() * binv;
      q[shift] = t;
      for (std::size_t i = 0; i < b.c_.size(); ++i) a.c_[i + shift] -= t * b.c_[i];
      a.c_.pop_back();  // cancelled exactly
      a.trim();
    }
    return {KPoly(b.level_, std::move(q)), std::move(a)};
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c_[i].to_string() + ")*X^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  static KPoly combine(const KPoly& a, const KPoly& b, int sign) {
    const int lv = a.level_ ? a.level_ : b.level_;
    std::vector<CycNum> r(std::max(a.c_.size(), b.c_.size()), CycNum(lv));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = sign > 0 ? r[i] + b.c_[i] : r[i] - b.c_[i];
    return KPoly(lv, std::move(r));
  }

  int level_ = 0;
  std::vector<CycNum> c_;
};

/// Monic gcd by the Euclidean algorithm over K_N.
inline KPoly kpoly_gcd(KPoly a, KPoly b) {
  while (!b.is_zero()) {
    KPoly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Yun's square-free decomposition of a nonzero polynomial: returns monic
/// factors s_1, s_2, ... with f = lead(f) * prod s_k^k and the s_k square-free, pairwise coprime.
inline std::vector<KPoly> yun_decomposition(const KPoly& f) {
  if (f.is_zero()) throw std::domain_error("yun_decomposition: zero polynomial");
  std::vector<KPoly> out;
  const KPoly fm = f.monic();
  const KPoly d = fm.derivative();
  KPoly a = kpoly_gcd(fm, d);
  KPoly b = divmod(fm, a).first;
  KPoly c = divmod(d, a).first;
  KPoly e = c - b.derivative();
  while (b.degree() > 0) {
    KPoly s = kpoly_gcd(b, e);
    out.push_back(s);
    b = divmod(b, s).first;
    c = divmod(e, s).first;
    e = c - b.derivative();
  }
  return out;
}

/// The monic h with h^k = f for monic f, when it exists (verified exactly).
inline std::optional<KPoly> exact_kth_root(const KPoly& f, unsigned k) {
  if (f.is_zero() || k == 0) throw std::domain_error("exact_kth_root: bad input");
  if (!f.lead().is_one()) throw std::domain_error("exact_kth_root: polynomial must be monic");
  if (f.degree() % static_cast<long>(k) != 0) return std::nullopt;
  const std::size_t n = static_cast<std::size_t>(f.degree()), m = n / k;
  const int lv = f.level();
  // reversed polynomials: r(x) = x^n f(1/x) = 1 + ..., and g = r^(1/k) as a power series,
  // g_i = (1/i) sum_{j=1..i} (j/k - (i - j)) r_j g_{i-j}
  auto r = [&](std::size_t j) { return f.coeff(n - j); };
  std::vector<CycNum> g(m + 1, CycNum(lv));
  g[0] = CycNum::one(lv);
  for (std::size_t i = 1; i <= m; ++i) {
    CycAccumulator acc(f.coeffs()[0].context());
    for (std::size_t j = 1; j <= i && j <= n; ++j) {
      const CycNum rj = r(j);
      if (rj.is_zero() || g[i - j].is_zero()) continue;
      const mpq_class w = mpq_class(static_cast<long>(j), static_cast<long>(k)) - static_cast<long>(i - j);
      acc.add_product(rj * w, g[i - j]);
    }
    g[i] = acc.take() * mpq_class(1, static_cast<long>(i));
  }
  KPoly h(lv, std::vector<CycNum>(g.rbegin(), g.rend()));
  if (h.pow(k) != f) return std::nullopt;
  return h;
}

// Reduction modulo a degree-one prime above p = 1 mod N.

struct PrimeEmbedding {
  std::uint64_t p = 0;
  std::uint64_t root = 0;  // image of zeta, a primitive N-th root of unity mod p
};

namespace detail {
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
}  // namespace detail

/// The k-th prime p = 1 mod N above 2^40 together with a primitive N-th root of unity mod p.
inline PrimeEmbedding prime_embedding(int n, int k = 0) {
  std::uint64_t p = (std::uint64_t{1} << 40) / static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) + 1;
  int found = -1;
  for (;; p += static_cast<std::uint64_t>(n)) {
    if (!is_prime(static_cast<i64>(p))) continue;
    if (++found == k) break;
  }
  const auto pd = prime_divisors(n);
  for (std::uint64_t g = 2;; ++g) {
    const std::uint64_t r = detail::powmod(g, (p - 1) / static_cast<std::uint64_t>(n), p);
    bool primitive = r != 1;
    for (i64 q : pd)
      if (detail::powmod(r, static_cast<std::uint64_t>(n / q), p) == 1) primitive = false;
    if (primitive) return {p, r};
  }
}

/// Image of a in Z/p; throws if the denominator is divisible by p.
inline std::uint64_t reduce_mod(const CycNum& a, const PrimeEmbedding& e) {
  const mpz_class pz(std::to_string(e.p));
  const mpz_class den = a.denominator() % pz;
  if (den == 0) throw std::domain_error("reduce_mod: denominator divisible by p");
  std::uint64_t s = 0, rp = 1;
  for (const auto& c : a.numerators()) {
    mpz_class m = c % pz;
    if (m < 0) m += pz;
    s = (s + detail::mulmod(std::stoull(m.get_str()), rp, e.p)) % e.p;
    rp = detail::mulmod(rp, e.root, e.p);
  }
  const auto dinv = detail::powmod(std::stoull(den.get_str()), e.p - 2, e.p);
  return detail::mulmod(s, dinv, e.p);
}

namespace detail {
using ModPoly = std::vector<std::uint64_t>;
inline void mod_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline ModPoly mod_rem(ModPoly a, const ModPoly& b, std::uint64_t p) {
  const std::uint64_t inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const std::uint64_t t = mulmod(a.back(), inv, p);
    const std::size_t s = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + s] = (a[i + s] + p - mulmod(t, b[i], p)) % p;
    a.pop_back();
    mod_trim(a);
  }
  return a;
}
}  // namespace detail

/// Degree of gcd(f mod P, g mod P), or -1 if a leading coefficient vanishes mod P.
inline long mod_gcd_degree(const KPoly& f, const KPoly& g, const PrimeEmbedding& e) {
  auto red = [&](const KPoly& x) {
    detail::ModPoly r;
    for (const auto& c : x.coeffs()) r.push_back(reduce_mod(c, e));
    return r;
  };
  detail::ModPoly a = red(f), b = red(g);
  if (a.size() != f.coeffs().size() || b.size() != g.coeffs().size()) return -1;
  while (!b.empty()) {
    detail::ModPoly r = detail::mod_rem(a, b, e.p);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<long>(a.size()) - 1;
}

/// Certificate that f has no repeated factor over K_N: some degree-one prime ideal
/// keeps deg f and makes gcd(f, f') trivial, so the discriminant of f is nonzero.
struct SquareFreeCertificate {
  bool certified = false;
  std::uint64_t p = 0, root = 0;
};
inline SquareFreeCertificate square_free_certificate(const KPoly& f, int attempts = 4) {
  for (int k = 0; k < attempts; ++k) {
    const auto e = prime_embedding(f.level(), k);
    try {
      if (mod_gcd_degree(f, f.derivative(), e) == 0) return {true, e.p, e.root};
    } catch (const std::domain_error&) {
    }
  }
  return {};
}

/// Complex roots under the standard embedding: companion-matrix eigenvalues, each polished by Newton steps.
inline std::vector<std::complex<double>> numeric_roots(const KPoly& f) {
  if (f.degree() < 1) return {};
  const auto n = static_cast<Eigen::Index>(f.degree());
  std::vector<std::complex<double>> c;
  for (const auto& x : f.coeffs()) c.push_back(x.to_complex());
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) comp(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  const Eigen::VectorXcd ev = Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(comp, false).eigenvalues();
  const KPoly df = f.derivative();
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < n; ++i) {
    std::complex<double> z = ev(i);
    for (int it = 0; it < 8; ++it) {
      const std::complex<double> d = df.eval(z);
      if (std::abs(d) == 0.0) break;
      const std::complex<double> step = f.eval(z) / d;
      z -= step;
      if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    out.push_back(z);
  }
  return out;
}

}  // namespace genlambda
