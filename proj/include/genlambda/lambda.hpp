#pragma once

// q-expansions of the generalized lambda function Lambda(tau; Q1, Q2),
// of Lambda o A for A in SL2(Z), and of the auxiliary quotient W.

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "genlambda/forms.hpp"

namespace genlambda {

/// Memoized e_series; entries are immutable once inserted.
inline QSeries e_series_cached(const EIndex& idx, i64 n, i64 prec) {
  static std::mutex mu;
  static std::map<std::tuple<i64, i64, i64, i64>, QSeries> cache;
  const auto key = std::make_tuple(n, idx.r, idx.s, prec);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  QSeries s = e_series(idx, n, prec);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(s)).first->second;
}

/// Ordered pair (Q1, Q2) of vectors in (Z/N)^2 forming a basis.
struct BasisPair {
  i64 r1 = 1, s1 = 0, r2 = 0, s2 = 1;

  i64 det(i64 n) const { return mod(r1 * s2 - s1 * r2, n); }
  void check(i64 n) const {
    if (gcd(det(n), n) != 1) throw std::domain_error("BasisPair: determinant not invertible mod N");
  }
  /// The pair (Q1 A, Q2 A) for row vectors Q1, Q2.
  BasisPair times(const SL2Mat& m) const {
    return {r1 * m.a + s1 * m.c, r1 * m.b + s1 * m.d, r2 * m.a + s2 * m.c, r2 * m.b + s2 * m.d};
  }
};

/// The pair ((1,0), (0,k)) defining Lambda_k.
inline BasisPair lambda_k_basis(i64 k) { return {1, 0, 0, k}; }

/// (E(n1) - E(n2)) / (E(d1) - E(d2)) with every coefficient below prec exact.
inline QSeries e_difference_ratio(const EIndex& n1, const EIndex& n2, const EIndex& d1, const EIndex& d2, i64 n, i64 prec) {
  const Theta tn = leading_theta(n1, n2, n), td = leading_theta(d1, d2, n);
  const i64 order = tn.order - td.order;
  if (prec <= order) throw precision_error("e_difference_ratio: precision " + std::to_string(prec) + " does not exceed the order " + std::to_string(order));
  const i64 pe = prec - order + std::max(tn.order, td.order);
  const QSeries num = e_series_cached(n1, n, pe) - e_series_cached(n2, n, pe);
  const QSeries den = e_series_cached(d1, n, pe) - e_series_cached(d2, n, pe);
  if (qs_order(num) != tn.order || num.leading() != tn.theta || qs_order(den) != td.order || den.leading() != td.theta)
    throw std::logic_error("e_difference_ratio: leading term disagrees with the theta table");
  QSeries r = num / den;
  if (r.prec() != prec) throw std::logic_error("e_difference_ratio: unexpected precision");
  return r;
}

/// Lambda(tau; Q1, Q2) = (E(Q1) - E(Q1+Q2)) / (E(Q2) - E(Q1+Q2)).
inline QSeries lambda_basis_series(const BasisPair& b, i64 n, i64 prec) {
  b.check(n);
  const EIndex q1 = EIndex::make(b.r1, b.s1, n), q2 = EIndex::make(b.r2, b.s2, n);
  const EIndex q12 = EIndex::make(b.r1 + b.r2, b.s1 + b.s2, n);
  return e_difference_ratio(q1, q12, q2, q12, n, prec);
}

/// Lambda o A = Lambda(tau; (a,b), (c,d)).
inline QSeries lambda_series(const SL2Mat& m, i64 n, i64 prec) {
  return lambda_basis_series(BasisPair{}.times(m), n, prec);
}

/// Lambda_k o A = Lambda(tau; (1,0)A, (0,k)A).
inline QSeries lambda_k_series(i64 k, const SL2Mat& m, i64 n, i64 prec) {
  return lambda_basis_series(lambda_k_basis(k).times(m), n, prec);
}

/// Lambda(tau; (0,1), (1,0)) of level 2, as a series in q = exp(2 pi i tau / N) for even N:
/// the division points 1/2, tau/2, (1+tau)/2 carry the level-N indices (0,N/2), (N/2,0), (N/2,N/2).
/// Equals (lambda - 1)/lambda for the classical lambda = 16 h - 128 h^2 + ...
inline QSeries lambda_level_two_series(i64 n, i64 prec) {
  if (n % 2 != 0) throw std::invalid_argument("lambda_level_two_series: needs an even level");
  const i64 h = n / 2;
  const EIndex a = EIndex::make(0, h, n), b = EIndex::make(h, 0, n), ab = EIndex::make(h, h, n);
  return e_difference_ratio(a, ab, b, ab, n, prec);
}

/// W = (E(r1,s1) - E(r2,s2)) / (E(r1,-s1) - E(r2,-s2)).
inline QSeries w_series(const EIndex& i1, const EIndex& i2, i64 n, i64 prec) {
  return e_difference_ratio(i1, i2, EIndex::make(i1.r, -i1.s, n), EIndex::make(i2.r, -i2.s, n), n, prec);
}

/// Leading coefficient of W by the case table ({r2} >= {r1} after ordering).
inline CycNum w_leading_coefficient(const EIndex& i1, const EIndex& i2, i64 n) {
  if (equal_up_to_sign(i1, i2, n)) throw std::domain_error("w_leading_coefficient: indices agree up to sign");
  auto [b1, m1] = brace_mu(i1.r, n);
  auto [b2, m2] = brace_mu(i2.r, n);
  EIndex x = i1, y = i2;
  if (b1 > b2) {
    std::swap(x, y);
    std::swap(b1, b2);
    std::swap(m1, m2);
  }
  const int lv = static_cast<int>(n);
  if (b1 == b2 && b1 != 0 && 2 * b1 != n) return -CycNum::zeta_pow(lv, m1 * x.s + m2 * y.s);
  if (b2 > b1 && b1 != 0) return CycNum::zeta_pow(lv, 2 * m1 * x.s);
  return CycNum::one(lv);
}

}  // namespace genlambda
