#pragma once

// Exact arithmetic in the cyclotomic field K_N = Q(zeta_N), zeta_N = exp(2 pi i / N),
// in the power basis 1, zeta, ..., zeta^(phi(N)-1).

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "genlambda/arith.hpp"

namespace genlambda {

class level_mismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Per-level data: the cyclotomic polynomial and the images of zeta^k, 0 <= k < N,
/// in the power basis. Created once per level and never mutated afterwards.
class CycContext {
 public:
  static const CycContext& get(int level) {
    if (level < 1) throw std::invalid_argument("CycContext: level must be >= 1");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<const CycContext>> registry;
    std::lock_guard lock(mu);
    auto& slot = registry[level];
    if (!slot) slot.reset(new CycContext(level));
    return *slot;
  }

  int level() const { return level_; }
  int degree() const { return degree_; }

  /// Coefficients of Phi_N, lowest degree first (monic, length degree()+1).
  const std::vector<i64>& phi_poly() const { return phi_; }

  /// zeta^k expressed in the power basis, k taken mod N.
  const std::vector<i64>& power(i64 k) const { return powers_[static_cast<std::size_t>(mod(k, level_))]; }

 private:
  explicit CycContext(int level) : level_(level) {
    phi_ = cyclotomic_polynomial(level);
    degree_ = static_cast<int>(phi_.size()) - 1;
    powers_.assign(static_cast<std::size_t>(level), std::vector<i64>(static_cast<std::size_t>(degree_), 0));
    std::vector<i64> cur(static_cast<std::size_t>(degree_), 0);
    cur[0] = 1;
    if (degree_ == 0) throw std::logic_error("CycContext: degenerate degree");
    for (int k = 0; k < level; ++k) {
      powers_[static_cast<std::size_t>(k)] = cur;
      // multiply by zeta and fold the zeta^degree term back with Phi_N
      i64 top = cur[static_cast<std::size_t>(degree_ - 1)];
      for (int i = degree_ - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      cur[0] = 0;
      for (int i = 0; i < degree_; ++i) cur[static_cast<std::size_t>(i)] -= top * phi_[static_cast<std::size_t>(i)];
    }
  }

  // Phi_N = prod_{d | N} (x^d - 1)^{mu(N/d)}
  static std::vector<i64> cyclotomic_polynomial(int n) {
    std::vector<i64> num{1}, den{1};
    auto mul_xd_minus_1 = [](const std::vector<i64>& p, i64 d) {
      std::vector<i64> r(p.size() + static_cast<std::size_t>(d), 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        r[i + static_cast<std::size_t>(d)] += p[i];
        r[i] -= p[i];
      }
      return r;
    };
    for (i64 d : divisors(n)) {
      int m = moebius(n / d);
      if (m == 1) num = mul_xd_minus_1(num, d);
      if (m == -1) den = mul_xd_minus_1(den, d);
    }
    // exact division num / den; den is monic up to sign
    std::size_t dn = den.size() - 1;
    std::vector<i64> q(num.size() - dn, 0);
    i64 lead = den.back();
    for (std::size_t k = q.size(); k-- > 0;) {
      i64 c = num[k + dn] / lead;
      q[k] = c;
      for (std::size_t i = 0; i <= dn; ++i) num[k + i] -= c * den[i];
    }
    if (q.back() < 0)
      for (auto& c : q) c = -c;
    return q;
  }

  int level_;
  int degree_ = 0;
  std::vector<i64> phi_;
  std::vector<std::vector<i64>> powers_;
};

/// Element of K_N. Stored as an integer numerator vector over a single positive
/// denominator with gcd(content, den) = 1, so equality is structural.
class CycNum {
 public:
  CycNum() = default;

  explicit CycNum(int level) : ctx_(&CycContext::get(level)), num_(static_cast<std::size_t>(ctx_->degree())), den_(1) {}

  static CycNum zero(int level) { return CycNum(level); }

  static CycNum from_int(int level, const mpz_class& v) {
    CycNum r(level);
    r.num_[0] = v;
    return r;
  }
  static CycNum from_int(int level, i64 v) { return from_int(level, mpz_class(static_cast<long>(v))); }
  static CycNum one(int level) { return from_int(level, 1); }

  static CycNum from_rational(int level, const mpq_class& v) {
    CycNum r(level);
    r.num_[0] = v.get_num();
    r.den_ = v.get_den();
    r.normalize();
    return r;
  }

  static CycNum from_coords(int level, const std::vector<mpq_class>& coords) {
    CycNum r(level);
    if (coords.size() != r.num_.size()) throw std::invalid_argument("CycNum: coords length must equal phi(N)");
    mpz_class l = 1;
    for (const auto& c : coords) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    for (std::size_t i = 0; i < coords.size(); ++i) r.num_[i] = coords[i].get_num() * (l / coords[i].get_den());
    r.den_ = l;
    r.normalize();
    return r;
  }

  /// zeta^k for any integer k.
  static CycNum zeta_pow(int level, i64 k) {
    CycNum r(level);
    const auto& p = r.ctx_->power(k);
    for (std::size_t i = 0; i < p.size(); ++i) r.num_[i] = static_cast<long>(p[i]);
    return r;
  }
  static CycNum zeta(int level) { return zeta_pow(level, 1); }

  int level() const { return ctx_ ? ctx_->level() : 0; }
  int degree() const { return ctx_->degree(); }
  const CycContext& context() const { return *ctx_; }

  mpq_class coord(std::size_t i) const {
    mpq_class q(num_.at(i), den_);
    q.canonicalize();
    return q;
  }
  std::vector<mpq_class> coords() const {
    std::vector<mpq_class> out;
    out.reserve(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coord(i));
    return out;
  }
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const {
    for (const auto& c : num_)
      if (sgn(c) != 0) return false;
    return true;
  }
  bool is_integral() const { return den_ == 1; }
  bool is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
      if (sgn(num_[i]) != 0) return false;
    return true;
  }
  bool is_one() const { return is_rational() && den_ == 1 && num_[0] == 1; }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.level() == b.level() && a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  CycNum operator-() const {
    CycNum r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
  }

  CycNum& operator+=(const CycNum& b) { return add_scaled(b, 1); }
  CycNum& operator-=(const CycNum& b) { return add_scaled(b, -1); }
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }
  CycNum& operator/=(const CycNum& b) { return *this = *this * b.inv(); }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }

  CycNum& operator*=(const mpq_class& s) {
    if (sgn(s) == 0) return *this = CycNum(level());
    for (auto& c : num_) c *= s.get_num();
    den_ *= s.get_den();
    normalize();
    return *this;
  }
  friend CycNum operator*(CycNum a, const mpq_class& s) { return a *= s; }
  friend CycNum operator*(const mpq_class& s, CycNum a) { return a *= s; }
  friend CycNum operator*(CycNum a, i64 s) { return a *= mpq_class(static_cast<long>(s)); }
  friend CycNum operator*(i64 s, CycNum a) { return a *= mpq_class(static_cast<long>(s)); }

  /// Multiplicative inverse via the extended Euclidean algorithm with Phi_N over Q.
  CycNum inv() const;

  /// The automorphism zeta -> zeta^ell, gcd(ell, N) = 1.
  CycNum sigma(i64 ell) const {
    int n = level();
    if (gcd(ell, n) != 1) throw std::domain_error("sigma: ell must be coprime to N");
    std::vector<mpz_class> acc(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < num_.size(); ++i) acc[static_cast<std::size_t>(mod(static_cast<i64>(i) * ell, n))] += num_[i];
    return fold(*ctx_, acc, den_);
  }
  CycNum conj() const { return sigma(level() - 1); }

  /// this * zeta^m, computed by shifting exponents.
  CycNum times_zeta_pow(i64 m) const {
    int n = level();
    if (mod(m, n) == 0) return *this;
    std::vector<mpz_class> acc(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < num_.size(); ++i) acc[static_cast<std::size_t>(mod(static_cast<i64>(i) + m, n))] += num_[i];
    return fold(*ctx_, acc, den_);
  }

  CycNum pow(i64 e) const {
    if (e < 0) return inv().pow(-e);
    CycNum result = one(level()), base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  /// Value under zeta -> exp(2 pi i / N).
  std::complex<double> to_complex() const {
    std::complex<double> s = 0;
    const double n = level();
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (sgn(num_[i]) == 0) continue;
      double c = coord(i).get_d();
      double ang = 2.0 * M_PI * static_cast<double>(i) / n;
      s += c * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (sgn(num_[i]) == 0) continue;
      mpq_class c = coord(i);
      if (!first) os << (sgn(c) < 0 ? " - " : " + ");
      else if (sgn(c) < 0) os << "-";
      mpq_class a = abs(c);
      if (i == 0) os << a.get_str();
      else {
        if (a != 1) os << a.get_str() << "*";
        os << "z";
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }

  // Folds a coefficient vector over zeta^0 .. zeta^(m-1) (any m) into the power basis.
  static CycNum fold(const CycContext& ctx, std::vector<mpz_class>& acc, const mpz_class& den) {
    CycNum r;
    r.ctx_ = &ctx;
    auto phi = static_cast<std::size_t>(ctx.degree());
    r.num_.assign(phi, mpz_class(0));
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (sgn(acc[k]) == 0) continue;
      if (k < phi) {
        r.num_[k] += acc[k];
        continue;
      }
      const auto& p = ctx.power(static_cast<i64>(k));
      for (std::size_t i = 0; i < phi; ++i) {
        if (p[i] > 0) mpz_addmul_ui(r.num_[i].get_mpz_t(), acc[k].get_mpz_t(), static_cast<unsigned long>(p[i]));
        else if (p[i] < 0) mpz_submul_ui(r.num_[i].get_mpz_t(), acc[k].get_mpz_t(), static_cast<unsigned long>(-p[i]));
      }
    }
    r.den_ = den;
    r.normalize();
    return r;
  }

 private:
  friend class CycAccumulator;

  void check_level(const CycNum& b) const {
    if (level() != b.level())
      throw level_mismatch("CycNum: level mismatch (" + std::to_string(level()) + " vs " + std::to_string(b.level()) + ")");
  }

  CycNum& add_scaled(const CycNum& b, int sign) {
    check_level(b);
    if (den_ == b.den_) {
      for (std::size_t i = 0; i < num_.size(); ++i) {
        if (sign > 0) num_[i] += b.num_[i];
        else num_[i] -= b.num_[i];
      }
    } else {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), b.den_.get_mpz_t());
      mpz_class sa = l / den_, sb = l / b.den_;
      for (std::size_t i = 0; i < num_.size(); ++i) {
        num_[i] *= sa;
        if (sign > 0) mpz_addmul(num_[i].get_mpz_t(), b.num_[i].get_mpz_t(), sb.get_mpz_t());
        else mpz_submul(num_[i].get_mpz_t(), b.num_[i].get_mpz_t(), sb.get_mpz_t());
      }
      den_ = l;
    }
    normalize();
    return *this;
  }

  void normalize() {
    if (den_ == 1) return;
    mpz_class g = den_;
    for (const auto& c : num_) {
      if (g == 1) break;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g != 1) {
      for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }

  const CycContext* ctx_ = nullptr;
  std::vector<mpz_class> num_;
  mpz_class den_{1};
};

/// Accumulates sums of products of CycNum values over a running common
/// denominator, folding and normalizing only once at the end.
class CycAccumulator {
 public:
  explicit CycAccumulator(const CycContext& ctx)
      : ctx_(&ctx), acc_(static_cast<std::size_t>(2 * ctx.degree() - 1)), den_(0) {}

  void add_product(const CycNum& a, const CycNum& b) {
    mpz_mul(tden_.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
    const bool unit = align(tden_);
    const auto phi = a.num_.size();
    for (std::size_t i = 0; i < phi; ++i) {
      if (sgn(a.num_[i]) == 0) continue;
      const mpz_class* ai = &a.num_[i];
      if (!unit) {
        mpz_mul(tmp_.get_mpz_t(), a.num_[i].get_mpz_t(), scale_.get_mpz_t());
        ai = &tmp_;
      }
      for (std::size_t j = 0; j < phi; ++j) {
        if (sgn(b.num_[j]) == 0) continue;
        mpz_addmul(acc_[i + j].get_mpz_t(), ai->get_mpz_t(), b.num_[j].get_mpz_t());
      }
    }
  }

  void add(const CycNum& a, int sign = 1) {
    const bool unit = align(a.den_);
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
      if (sgn(a.num_[i]) == 0) continue;
      if (unit) {
        if (sign > 0) acc_[i] += a.num_[i];
        else acc_[i] -= a.num_[i];
      } else {
        if (sign > 0) mpz_addmul(acc_[i].get_mpz_t(), a.num_[i].get_mpz_t(), scale_.get_mpz_t());
        else mpz_submul(acc_[i].get_mpz_t(), a.num_[i].get_mpz_t(), scale_.get_mpz_t());
      }
    }
  }

  CycNum take() {
    if (den_ == 0) den_ = 1;
    CycNum r = CycNum::fold(*ctx_, acc_, den_);
    for (auto& c : acc_) c = 0;
    den_ = 0;
    return r;
  }

 private:
  // Brings the accumulator onto a denominator divisible by d; afterwards a term
  // with denominator d must be scaled by scale_ (returns true when that is 1).
  bool align(const mpz_class& d) {
    if (den_ == 0) {
      den_ = d;
      return true;
    }
    if (den_ == d) return true;
    if (mpz_divisible_p(den_.get_mpz_t(), d.get_mpz_t())) {
      mpz_divexact(scale_.get_mpz_t(), den_.get_mpz_t(), d.get_mpz_t());
      return false;
    }
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), d.get_mpz_t());
    mpz_class up = l / den_;
    for (auto& c : acc_)
      if (sgn(c) != 0) c *= up;
    den_ = l;
    mpz_divexact(scale_.get_mpz_t(), den_.get_mpz_t(), d.get_mpz_t());
    return scale_ == 1;
  }

  const CycContext* ctx_;
  std::vector<mpz_class> acc_;
  mpz_class den_, tden_, scale_, tmp_;
};

inline CycNum operator*(const CycNum& a, const CycNum& b) {
  a.check_level(b);
  CycAccumulator acc(a.context());
  acc.add_product(a, b);
  return acc.take();
}

namespace detail {

using QPoly = std::vector<mpq_class>;  // lowest degree first

inline void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline QPoly qpoly_sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly r = a;
  if (q.empty() || b.empty()) return r;
  if (r.size() < q.size() + b.size() - 1) r.resize(q.size() + b.size() - 1);
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
  trim(r);
  return r;
}

inline std::pair<QPoly, QPoly> qpoly_divmod(QPoly a, const QPoly& b) {
  QPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpq_class(0));
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    mpq_class c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

}  // namespace detail

inline CycNum CycNum::inv() const {
  if (is_zero()) throw std::domain_error("CycNum::inv: division by zero");
  const int n = level();
  detail::QPoly a = coords();
  detail::trim(a);
  detail::QPoly m;
  for (i64 c : ctx_->phi_poly()) m.emplace_back(static_cast<long>(c));
  // invariant: s_i * a == r_i (mod Phi_N)
  detail::QPoly r0 = m, r1 = a, s0, s1{mpq_class(1)};
  while (r1.size() > 1) {
    auto [q, r] = detail::qpoly_divmod(r0, r1);
    detail::QPoly s = detail::qpoly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw std::logic_error("CycNum::inv: zero divisor (Phi_N reducible?)");
  mpq_class c = 1 / r1[0];
  std::vector<mpq_class> out(static_cast<std::size_t>(degree()), mpq_class(0));
  auto [q, rem] = detail::qpoly_divmod(s1, m);
  (void)q;
  for (std::size_t i = 0; i < rem.size(); ++i) out[i] = rem[i] * c;
  return from_coords(n, out);
}

// Named operations.

enum class CycOp { add, sub, mul };

inline CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op) {
  switch (op) {
    case CycOp::add: return a + b;
    case CycOp::sub: return a - b;
    case CycOp::mul: return a * b;
  }
  throw std::invalid_argument("cyc_arith: bad op");
}
inline CycNum cyc_inv(const CycNum& a) { return a.inv(); }
inline CycNum sigma_ell(const CycNum& a, i64 ell) { return a.sigma(ell); }
inline std::complex<double> embed_complex(const CycNum& a) { return a.to_complex(); }
inline bool is_integral(const CycNum& a) { return a.is_integral(); }

}  // namespace genlambda
