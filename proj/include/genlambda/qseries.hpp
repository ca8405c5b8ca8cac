#pragma once

// Truncated Laurent series in q = exp(2 pi i tau / N) with K_N coefficients.
//
// A QSeries knows every coefficient below prec(): those below ord() are zero,
// those in [ord(), prec()) are stored. Operations propagate precision with the
// usual rules and never invent coefficients beyond what the inputs determine.

#include <algorithm>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "genlambda/cyclotomic.hpp"
#include "genlambda/parallel.hpp"

namespace genlambda {

class precision_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QSeries {
 public:
  QSeries() = default;

  /// Coefficients for exponents ord, ord+1, ..., ord+coeffs.size()-1; prec is ord+coeffs.size().
  QSeries(int level, i64 ord, std::vector<CycNum> coeffs)
      : level_(level), ord_(ord), prec_(ord + static_cast<i64>(coeffs.size())), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
      if (c.level() != level_) throw level_mismatch("QSeries: coefficient level differs from series level");
    normalize();
  }

  static QSeries zero(int level, i64 prec) {
    QSeries s;
    s.level_ = level;
    s.ord_ = s.prec_ = prec;
    return s;
  }
  static QSeries monomial(const CycNum& c, i64 exponent, i64 prec) {
    if (prec <= exponent) return zero(c.level(), prec);
    std::vector<CycNum> cs(static_cast<std::size_t>(prec - exponent), CycNum(c.level()));
    cs[0] = c;
    return QSeries(c.level(), exponent, std::move(cs));
  }
  static QSeries constant(const CycNum& c, i64 prec) { return monomial(c, 0, prec); }

  int level() const { return level_; }
  i64 ord() const { return ord_; }
  i64 prec() const { return prec_; }
  const std::vector<CycNum>& coeffs() const { return coeffs_; }

  /// True when every coefficient below prec() is zero.
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of q^e; e must lie below prec().
  CycNum coeff(i64 e) const {
    if (e >= prec_) throw precision_error("QSeries::coeff: exponent " + std::to_string(e) + " beyond precision " + std::to_string(prec_));
    if (e < ord_) return CycNum(level_);
    return coeffs_[static_cast<std::size_t>(e - ord_)];
  }
  const CycNum& leading() const {
    if (is_zero()) throw precision_error("QSeries: no nonzero coefficient within the window");
    return coeffs_.front();
  }

  /// Discards coefficients at exponents >= new_prec (new_prec <= prec()).
  QSeries truncate(i64 new_prec) const {
    if (new_prec > prec_) throw precision_error("QSeries::truncate: cannot extend precision");
    if (new_prec <= ord_) return zero(level_, new_prec);
    return QSeries(level_, ord_, std::vector<CycNum>(coeffs_.begin(), coeffs_.begin() + (new_prec - ord_)));
  }

  QSeries operator-() const {
    QSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b, 1); }
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return add(a, b, -1); }
  QSeries& operator+=(const QSeries& b) { return *this = add(*this, b, 1); }
  QSeries& operator-=(const QSeries& b) { return *this = add(*this, b, -1); }

  friend QSeries operator*(const QSeries& a, const QSeries& b) { return multiply(a, b); }
  QSeries& operator*=(const QSeries& b) { return *this = multiply(*this, b); }

  friend QSeries operator*(const QSeries& a, const CycNum& c) {
    a.check_level(c.level());
    if (c.is_zero()) return zero(a.level_, a.prec_);
    QSeries r = a;
    for (auto& x : r.coeffs_) x = x * c;
    return r;
  }
  friend QSeries operator*(const CycNum& c, const QSeries& a) { return a * c; }
  friend QSeries operator*(const QSeries& a, const mpq_class& c) {
    if (sgn(c) == 0) return zero(a.level_, a.prec_);
    QSeries r = a;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }
  friend QSeries operator*(const QSeries& a, i64 c) { return a * mpq_class(static_cast<long>(c)); }
  friend QSeries operator*(i64 c, const QSeries& a) { return a * mpq_class(static_cast<long>(c)); }

  /// Adds a constant (an exact series at any precision).
  friend QSeries operator+(const QSeries& a, const CycNum& c) { return a + constant(c, std::max<i64>(a.prec_, 1)); }
  friend QSeries operator-(const QSeries& a, const CycNum& c) { return a + constant(-c, std::max<i64>(a.prec_, 1)); }

  /// Multiplicative inverse; the relative precision prec()-ord() is preserved.
  QSeries inv() const {
    if (is_zero()) throw precision_error("QSeries::inv: zero leading coefficient (series vanishes within window)");
    const std::size_t n = coeffs_.size();
    const CycNum c0inv = coeffs_[0].inv();
    std::vector<CycNum> b;
    b.reserve(n);
    b.push_back(c0inv);
    CycAccumulator acc(coeffs_[0].context());
    for (std::size_t m = 1; m < n; ++m) {
      for (std::size_t j = 1; j <= m; ++j)
        if (!coeffs_[j].is_zero() && !b[m - j].is_zero()) acc.add_product(coeffs_[j], b[m - j]);
      b.push_back(-(acc.take() * c0inv));
    }
    return QSeries(level_, -ord_, std::move(b));
  }
  friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inv(); }

  QSeries pow(i64 e) const {
    if (e < 0) return inv().pow(-e);
    QSeries result = constant(CycNum::one(level_), std::max<i64>(prec_ - ord_, 1)), base = *this;
    bool first = true;
    while (e > 0) {
      if (e & 1) {
        result = first ? base : result * base;
        first = false;
      }
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  /// Coefficient-wise Galois action zeta -> zeta^ell.
  QSeries sigma(i64 ell) const {
    QSeries r = *this;
    for (auto& c : r.coeffs_) c = c.sigma(ell);
    return r;
  }

  /// The substitution q -> zeta^i q, i.e. tau -> tau + i.
  QSeries twist(i64 i) const {
    QSeries r = *this;
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = r.coeffs_[k].times_zeta_pow(i * (ord_ + static_cast<i64>(k)));
    return r;
  }

  /// Keeps only exponents divisible by step.
  QSeries grid_part(i64 step) const {
    QSeries r = *this;
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k)
      if (mod(ord_ + static_cast<i64>(k), step) != 0) r.coeffs_[k] = CycNum(level_);
    r.normalize();
    return r;
  }

  bool supported_on_grid(i64 step) const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (mod(ord_ + static_cast<i64>(k), step) != 0 && !coeffs_[k].is_zero()) return false;
    return true;
  }

  /// Numerical value of the truncated sum at a complex q.
  std::complex<double> evaluate(std::complex<double> q) const {
    std::complex<double> s = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) s = s * q + coeffs_[k].to_complex();
    return s * std::pow(q, static_cast<double>(ord_));
  }

  std::string to_string(std::size_t max_terms = 8) const {
    std::string out;
    std::size_t shown = 0;
    for (std::size_t k = 0; k < coeffs_.size() && shown < max_terms; ++k) {
      if (coeffs_[k].is_zero()) continue;
      if (shown++) out += " + ";
      out += "(" + coeffs_[k].to_string() + ")*q^" + std::to_string(ord_ + static_cast<i64>(k));
    }
    if (!shown) out = "0";
    return out + " + O(q^" + std::to_string(prec_) + ")";
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.level_ == b.level_ && a.ord_ == b.ord_ && a.prec_ == b.prec_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_level(int other) const {
    if (level_ != other) throw level_mismatch("QSeries: level mismatch");
  }

  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      ord_ += static_cast<i64>(lead);
    }
  }

  static QSeries add(const QSeries& a, const QSeries& b, int sign) {
    a.check_level(b.level_);
    const i64 prec = std::min(a.prec_, b.prec_);
    const i64 ord = std::min(a.ord_, b.ord_);
    if (prec <= ord) return zero(a.level_, prec);
    std::vector<CycNum> cs;
    cs.reserve(static_cast<std::size_t>(prec - ord));
    for (i64 e = ord; e < prec; ++e) {
      const bool in_a = e >= a.ord_, in_b = e >= b.ord_;
      if (in_a && in_b) cs.push_back(sign > 0 ? a.coeffs_[static_cast<std::size_t>(e - a.ord_)] + b.coeffs_[static_cast<std::size_t>(e - b.ord_)]
                                              : a.coeffs_[static_cast<std::size_t>(e - a.ord_)] - b.coeffs_[static_cast<std::size_t>(e - b.ord_)]);
      else if (in_a) cs.push_back(a.coeffs_[static_cast<std::size_t>(e - a.ord_)]);
      else if (in_b) cs.push_back(sign > 0 ? b.coeffs_[static_cast<std::size_t>(e - b.ord_)] : -b.coeffs_[static_cast<std::size_t>(e - b.ord_)]);
      else cs.emplace_back(a.level_);
    }
    return QSeries(a.level_, ord, std::move(cs));
  }

  static QSeries multiply(const QSeries& a, const QSeries& b) {
    a.check_level(b.level_);
    const i64 prec = std::min(a.prec_ + b.ord_, b.prec_ + a.ord_);
    const i64 ord = a.ord_ + b.ord_;
    if (a.is_zero() || b.is_zero() || prec <= ord) return zero(a.level_, prec);
    const auto len = static_cast<std::size_t>(prec - ord);
    std::vector<std::size_t> nza, nzb;
    for (std::size_t i = 0; i < std::min(len, a.coeffs_.size()); ++i)
      if (!a.coeffs_[i].is_zero()) nza.push_back(i);
    for (std::size_t j = 0; j < std::min(len, b.coeffs_.size()); ++j)
      if (!b.coeffs_[j].is_zero()) nzb.push_back(j);
    const CycContext& ctx = a.coeffs_[0].context();
    std::vector<CycAccumulator> acc(len, CycAccumulator(ctx));
    for (std::size_t i : nza)
      for (std::size_t j : nzb) {
        if (i + j >= len) break;
        acc[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
      }
    std::vector<CycNum> cs;
    cs.reserve(len);
    for (auto& x : acc) cs.push_back(x.take());
    return QSeries(a.level_, ord, std::move(cs));
  }

  int level_ = 0;
  i64 ord_ = 0;
  i64 prec_ = 0;
  std::vector<CycNum> coeffs_;
};

// Named operations.

inline QSeries qs_mul(const QSeries& a, const QSeries& b) { return a * b; }
inline QSeries qs_inv(const QSeries& a) { return a.inv(); }

inline i64 qs_order(const QSeries& a) {
  if (a.is_zero()) throw precision_error("qs_order: series vanishes on its whole window (insufficient precision)");
  return a.ord();
}

struct AgreeResult {
  bool agree = false;
  i64 width = 0;           // number of exponents compared
  i64 first_mismatch = 0;  // meaningful when !agree
};

/// Compares two series on every exponent below min(prec). Exponents below both
/// orders are zero on both sides; the reported width starts at the lower order.
inline AgreeResult qs_agree(const QSeries& a, const QSeries& b) {
  if (a.level() != b.level()) throw level_mismatch("qs_agree: level mismatch");
  const i64 top = std::min(a.prec(), b.prec());
  const i64 bottom = std::min(a.ord(), b.ord());
  if (top <= bottom) throw precision_error("qs_agree: empty intersection of windows");
  AgreeResult r{true, top - bottom, 0};
  for (i64 e = bottom; e < top; ++e)
    if (a.coeff(e) != b.coeff(e)) return {false, top - bottom, e};
  return r;
}

/// Product of many series with a fixed balanced association order.
inline QSeries product_tree(std::vector<QSeries> factors) {
  return tree_reduce(std::move(factors), [](const QSeries& x, const QSeries& y) { return x * y; });
}

}  // namespace genlambda
