#pragma once

// Exact q-expansions of the basic modular objects at level N:
// the weight-2 division forms E(tau; r, s), the invariant j, powers of the
// eta quotient eta(tau)/eta(N tau) for N = 3, 4, and the classical lambda.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genlambda/modgroup.hpp"
#include "genlambda/qseries.hpp"

namespace genlambda {

/// Index (r, s) of E(tau; r, s), reduced mod N and not (0, 0).
struct EIndex {
  i64 r = 0, s = 0;

  static EIndex make(i64 r, i64 s, i64 n) {
    EIndex e{mod(r, n), mod(s, n)};
    if (e.r == 0 && e.s == 0) throw std::domain_error("EIndex: (r, s) = (0, 0) mod N");
    return e;
  }
  friend bool operator==(const EIndex&, const EIndex&) = default;
};

inline bool equal_up_to_sign(const EIndex& x, const EIndex& y, i64 n) {
  return (x.r == y.r && x.s == y.s) || (mod(-x.r, n) == y.r && mod(-x.s, n) == y.s);
}

namespace detail {

// Integer power series in one variable x, lowest degree first.
using ZSeries = std::vector<mpz_class>;

inline ZSeries z_mul(const ZSeries& a, const ZSeries& b, std::size_t len) {
  ZSeries r(len);
  for (std::size_t i = 0; i < std::min(len, a.size()); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
      if (sgn(b[j]) != 0) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

// Inverse of a series with constant term 1.
inline ZSeries z_inv(const ZSeries& a, std::size_t len) {
  if (a.empty() || a[0] != 1) throw std::logic_error("z_inv: constant term must be 1");
  ZSeries b(len);
  if (len) b[0] = 1;
  for (std::size_t m = 1; m < len; ++m) {
    mpz_class s = 0;
    for (std::size_t j = 1; j <= m && j < a.size(); ++j) s += a[j] * b[m - j];
    b[m] = -s;
  }
  return b;
}

inline ZSeries z_pow(ZSeries a, unsigned e, std::size_t len) {
  ZSeries r(len);
  if (len) r[0] = 1;
  while (e) {
    if (e & 1) r = z_mul(r, a, len);
    e >>= 1;
    if (e) a = z_mul(a, a, len);
  }
  return r;
}

// prod_{n >= 1} (1 - x^(step n)) truncated to len terms.
inline ZSeries euler_product(std::size_t step, std::size_t len) {
  ZSeries p(len);
  if (len) p[0] = 1;
  for (std::size_t n = step; n < len; n += step)
    for (std::size_t k = len; k-- > n;) p[k] -= p[k - n];
  return p;
}

// Embeds sum_k z[k] x^(k + shift), x = q^scale, into a level-N series with precision prec.
inline QSeries embed_zseries(const ZSeries& z, i64 shift, i64 scale, int level, i64 prec) {
  const i64 lo = shift * scale;
  if (prec <= lo) return QSeries::zero(level, prec);
  std::vector<CycNum> cs(static_cast<std::size_t>(prec - lo), CycNum(level));
  for (std::size_t k = 0; k < z.size(); ++k) {
    i64 e = (static_cast<i64>(k) + shift) * scale;
    if (e >= prec) break;
    cs[static_cast<std::size_t>(e - lo)] = CycNum::from_int(level, z[k]);
  }
  // every x-power below prec must be covered by z
  if ((static_cast<i64>(z.size()) + shift) * scale < prec) throw std::logic_error("embed_zseries: series too short");
  return QSeries(level, lo, std::move(cs));
}

}  // namespace detail

/// Exact expansion of E(tau; r, s) with every exponent below prec.
inline QSeries e_series(const EIndex& idx, i64 n, i64 prec) {
  if (idx.r == 0 && idx.s == 0) throw std::domain_error("e_series: index (0, 0)");
  if (prec < 1) throw std::invalid_argument("e_series: prec must be at least 1");
  const auto [br, m] = brace_mu(idx.r, n);
  const i64 w = mod(m * idx.s, n);  // omega = zeta^w
  // coefficient of q^e as integer weights on zeta^0 .. zeta^(N-1)
  std::vector<std::vector<i64>> slots(static_cast<std::size_t>(prec), std::vector<i64>(static_cast<std::size_t>(n), 0));
  auto put = [&](i64 e, i64 zeta_exp, i64 weight) {
    if (e < prec) slots[static_cast<std::size_t>(e)][static_cast<std::size_t>(mod(zeta_exp, n))] += weight;
  };
  if (br != 0)
    for (i64 k = 1; k * br < prec; ++k) put(k * br, k * w, k);
  for (i64 k = 1; k * (n - br) < prec; ++k)
    for (i64 j = 1; j * k * n - k * br < prec; ++j) {
      const i64 base = j * k * n;
      put(base + k * br, k * w, k);
      put(base - k * br, -k * w, k);
      put(base, 0, -2 * k);
    }
  const CycContext& ctx = CycContext::get(static_cast<int>(n));
  std::vector<CycNum> cs;
  cs.reserve(static_cast<std::size_t>(prec));
  const mpz_class one = 1;
  for (auto& sl : slots) {
    std::vector<mpz_class> acc(sl.size());
    for (std::size_t k = 0; k < sl.size(); ++k) acc[k] = static_cast<long>(sl[k]);
    cs.push_back(CycNum::fold(ctx, acc, one));
  }
  if (br == 0) {
    const CycNum om = CycNum::zeta_pow(static_cast<int>(n), w);
    const CycNum d = CycNum::one(static_cast<int>(n)) - om;
    cs[0] += om / (d * d);
  }
  return QSeries(static_cast<int>(n), 0, std::move(cs));
}

/// (r, s) -> (a r + c s, b r + d s): the index of E[A]_2.
inline EIndex e_transform(const EIndex& idx, const SL2Mat& m, i64 n) {
  return EIndex::make(m.a * idx.r + m.c * idx.s, m.b * idx.r + m.d * idx.s, n);
}

struct Theta {
  CycNum theta;
  i64 order;
};

/// Leading term of E(tau; idx1) - E(tau; idx2) = theta q^order (1 + O(q)).
/// Requires both indices nonzero and idx1 != +-idx2 mod N.
inline Theta leading_theta(const EIndex& i1, const EIndex& i2, i64 n) {
  if ((i1.r == 0 && i1.s == 0) || (i2.r == 0 && i2.s == 0)) throw std::domain_error("leading_theta: zero index");
  if (equal_up_to_sign(i1, i2, n)) throw std::domain_error("leading_theta: indices agree up to sign");
  const auto [b1, m1] = brace_mu(i1.r, n);
  const auto [b2, m2] = brace_mu(i2.r, n);
  if (b1 > b2) {
    Theta t = leading_theta(i2, i1, n);
    return {-t.theta, t.order};
  }
  const int lv = static_cast<int>(n);
  const CycNum one = CycNum::one(lv);
  const CycNum w1 = CycNum::zeta_pow(lv, m1 * i1.s), w2 = CycNum::zeta_pow(lv, m2 * i2.s);
  if (b1 == b2) {
    if (b1 == 0) {
      const CycNum d1 = one - w1, d2 = one - w2;
      return {(w1 - w2) * (one - w1 * w2) / (d1 * d1 * d2 * d2), b1};
    }
    if (2 * b1 == n) return {-((w1 - w2) * (one - w1 * w2)) / (w1 * w2), b1};
    return {w1 - w2, b1};
  }
  if (b1 == 0) {
    const CycNum d1 = one - w1;
    return {w1 / (d1 * d1), b1};
  }
  return {w1, b1};
}

/// Expansion of j = E4^3 / Delta in q = exp(2 pi i tau / N); supported on multiples of N.
inline QSeries j_series(i64 n, i64 prec) {
  if (prec < -n + 1) throw std::invalid_argument("j_series: prec must be at least 1 - N");
  // x = q^N; need x^k for k from -1 up to floor((prec - 1) / N)
  const i64 kmax = (prec - 1 >= 0) ? (prec - 1) / n : -1;
  const auto len = static_cast<std::size_t>(kmax + 2);
  detail::ZSeries e4(len);
  e4[0] = 1;
  for (std::size_t k = 1; k < len; ++k) {
    mpz_class s3 = 0;
    for (std::size_t dd = 1; dd <= k; ++dd)
      if (k % dd == 0) s3 += mpz_class(static_cast<unsigned long>(dd)) * dd * dd;
    e4[k] = 240 * s3;
  }
  const auto eta24 = detail::z_pow(detail::euler_product(1, len), 24, len);
  const auto jx = detail::z_mul(detail::z_pow(e4, 3, len), detail::z_inv(eta24, len), len);
  return detail::embed_zseries(jx, -1, n, static_cast<int>(n), prec);
}

/// Expansion of (eta(tau)/eta(N tau))^(24/(N-1)) for N = 3, 4.
inline QSeries g_pow_series(i64 n, i64 prec) {
  if (n != 3 && n != 4) throw std::invalid_argument("g_pow_series: only N = 3, 4 are supported");
  const unsigned e = static_cast<unsigned>(24 / (n - 1));
  const i64 kmax = (prec - 1 >= -n) ? (prec - 1) / n + 1 : 0;
  const auto len = static_cast<std::size_t>(std::max<i64>(kmax + 1, 1));
  const auto num = detail::z_pow(detail::euler_product(1, len), e, len);
  const auto den = detail::z_pow(detail::euler_product(static_cast<std::size_t>(n), len), e, len);
  return detail::embed_zseries(detail::z_mul(num, detail::z_inv(den, len), len), -1, n, static_cast<int>(n), prec);
}

/// Classical lambda = 16 h prod ((1 + h^(2n)) / (1 + h^(2n-1)))^8 with h = q^(N/2); N even.
inline QSeries lambda_classical_series(i64 n, i64 prec) {
  if (n % 2 != 0) throw std::invalid_argument("lambda_classical_series: needs an even level (h = q^(N/2))");
  const i64 half = n / 2;
  const i64 kmax = (prec - 1) / half;  // h^k with k * half < prec
  const auto len = static_cast<std::size_t>(std::max<i64>(kmax, 1));
  detail::ZSeries num(len), den(len);
  num[0] = den[0] = 1;
  for (std::size_t k = 1; k < len; ++k) {
    // (1 + h^k) into num for even k, into den for odd k
    auto& p = (k % 2 == 0) ? num : den;
    for (std::size_t i = len; i-- > k;) p[i] += p[i - k];
  }
  auto s = detail::z_pow(detail::z_mul(num, detail::z_inv(den, len), len), 8, len);
  for (auto& c : s) c *= 16;
  return detail::embed_zseries(s, 1, half, static_cast<int>(n), prec);
}

}  // namespace genlambda
