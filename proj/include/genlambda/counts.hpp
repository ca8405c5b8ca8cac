#pragma once

// Counting formulas: the sums I_k(L, M), J_k(L, M) by enumeration and in
// closed form, the degrees ell_N = [A(N) : K_N(Lambda)] and the pole count t_N
// by three routes, and the degree of the ray class field over H(zeta).

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "genlambda/modgroup.hpp"

namespace genlambda {

enum class SumKind { I, J };

/// Raised when a closed form is requested outside the branches where it is established.
class branch_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {
inline void check_sum_args(i64 k, i64 l, i64 m) {
  if (k != 0 && k != 1) throw std::invalid_argument("sum: k must be 0 or 1");
  if (m < 1 || l < 1 || m % l != 0) throw std::invalid_argument("sum: need L | M, M >= 1");
}
inline int omega(i64 n) { return static_cast<int>(prime_divisors(n).size()); }
}  // namespace detail

/// Sum of t^k over 0 < t < M/2 with gcd(t, L) = 1 (kind I), additionally t = -M mod 3 (kind J).
inline i64 sum_enum(SumKind kind, i64 k, i64 l, i64 m) {
  detail::check_sum_args(k, l, m);
  i64 s = 0;
  for (i64 t = 1; 2 * t < m; ++t) {
    if (gcd(t, l) != 1) continue;
    if (kind == SumKind::J && mod(t + m, 3) != 0) continue;
    s += (k == 0) ? 1 : t;
  }
  return s;
}

/// Closed-form value; throws branch_error when (kind, k, L, M) lies outside every known branch.
inline i64 sum_closed(SumKind kind, i64 k, i64 l, i64 m) {
  detail::check_sum_args(k, l, m);
  const i64 ls = radical(l);
  const i64 ph = totient(ls);
  const int ell = detail::omega(l);
  const i64 sign = (ell % 2 == 0) ? 1 : -1;
  auto exact = [](i64 num, i64 den) {
    if (num % den != 0) throw std::logic_error("sum_closed: non-integral closed form");
    return num / den;
  };
  if (kind == SumKind::I) {
    if (k == 0) {
      if (ls == 1) return (m % 2 == 0) ? (m - 2) / 2 : (m - 1) / 2;
      if (ls == 2 && mod(m, 4) == 2) return (m - 2) / 4;
      return exact(m * ph, 2 * ls);
    }
    if (m <= 2) return 0;
    if (ls == 1) return (m % 2 == 1) ? (m * m - 1) / 8 : m * (m - 2) / 8;
    if (ls == 2) {
      if (mod(m, 4) == 0) return (m / 4) * (m / 4);
      return ((m - 2) / 4) * ((m - 2) / 4);
    }
    i64 eps = 0;
    if (m % 2 == 1) eps = 1;
    else if (mod(m, 4) == 2 && ls % 2 == 0) eps = 2;
    return exact(ph * (m * m / ls - sign * eps), 8);
  }
  // kind J
  if (mod(m, 3) == 0 && mod(l, 3) == 0) return 0;
  if (mod(m, 3) == 0) throw branch_error("sum_closed: J with M = 0 mod 3 and L != 0 mod 3 has no closed form");
  if (k == 1) {
    if (ls > 2) {
      i64 eps = 0;
      if (m % 2 == 1) eps = 1;
      else if (mod(m, 4) == 2 && ls % 2 == 0) eps = 2;
      return exact(ph * (m * m / ls + sign * (8 - 9 * eps)), 24);
    }
    if (ls == 2) {
      if (mod(m, 4) == 2) return exact(m * m - 12 * m + 20, 48);
      return exact(m * m - 16, 48);
    }
    throw branch_error("sum_closed: J_1 needs L* >= 2");
  }
  if (ls > 2) {
    bool none_one_mod_3 = true;
    for (i64 p : prime_divisors(ls))
      if (mod(p, 3) == 1) none_one_mod_3 = false;
    const i64 eps = none_one_mod_3 ? 1 : 0;
    const i64 legendre = (mod(m, 3) == 1) ? 1 : -1;
    return exact(m * ph / ls - legendre * ipow(2, ell) * eps, 6);
  }
  throw branch_error("sum_closed: J_0 needs L* > 2");
}

/// Closed form where one is established, enumeration otherwise.
inline i64 sum_best(SumKind kind, i64 k, i64 l, i64 m) {
  try {
    return sum_closed(kind, k, l, m);
  } catch (const branch_error&) {
    return sum_enum(kind, k, l, m);
  }
}

enum class CountRoute { enumeration, prop_sums, prime_power };

struct EllT {
  i64 ell = 0, t = 0;
  friend bool operator==(const EllT&, const EllT&) = default;
};

/// ell_N and t_N by the requested route.
inline EllT ell_t(i64 n, CountRoute route) {
  if (n < 3) throw std::invalid_argument("ell_t: N must be at least 3");
  switch (route) {
    case CountRoute::enumeration: {
      EllT r;
      for (const auto& c : cusp_reps(n)) {
        const i64 v = nu(c.matrix, n);
        if (v < 0) {
          r.ell -= v;
          ++r.t;
        }
      }
      return r;
    }
    case CountRoute::prop_sums: {
      EllT r{sum_best(SumKind::I, 1, n, n), sum_best(SumKind::I, 0, n, n)};
      for (i64 a = 1; 3 * a < n; ++a) {
        r.ell += 2 * sum_best(SumKind::I, 1, gcd(a, n), n - 3 * a);
        r.t += 2 * sum_best(SumKind::I, 0, gcd(a, n), n - 3 * a);
      }
      if (n % 3 == 0) {
        r.ell += 3 * (sum_best(SumKind::I, 1, n / 3, n / 3) - sum_best(SumKind::J, 1, n / 3, n / 3));
        r.t += sum_best(SumKind::I, 0, n / 3, n / 3) - sum_best(SumKind::J, 0, n / 3, n / 3);
      } else {
        r.ell += sum_best(SumKind::J, 1, n, n);
        r.t += sum_best(SumKind::J, 0, n, n);
      }
      return r;
    }
    case CountRoute::prime_power: {
      int m = 0;
      const i64 p = prime_power_base(n, &m);
      if (p == 0) throw std::domain_error("ell_t: prime_power route needs a prime power N");
      auto to_int = [](const mpq_class& q) {
        if (q.get_den() != 1) throw std::logic_error("ell_t: non-integral prime power formula");
        return static_cast<i64>(q.get_num().get_si());
      };
      auto pw = [p](int e) { return mpq_class(static_cast<long>(ipow(p, e))); };
      if (p == 2) {
        const mpq_class sg = (m % 2 == 0) ? 1 : -1;
        return {to_int((pw(3 * m - 4) - sg) / 3), to_int((3 * pw(2 * m - 3) - pw(m - 1) - sg) / 3)};
      }
      if (p == 3) {
        if (m == 1) return {1, 1};
        return {to_int(2 * pw(3 * m - 4)), to_int(4 * pw(2 * m - 3) - 2 * pw(m - 2))};
      }
      mpq_class t = (pw(2 * m) - pw(2 * m - 2) - 2 * pw(m) + 2 * pw(m - 1)) / 6;
      mpq_class l = (pw(3 * m) - pw(3 * m - 2)) / 36;
      const mpq_class pp = mpq_class(static_cast<long>(p));
      if (mod(p, 3) == 1) {
        l += (pp - 1) / 9;
      } else if (m % 2 == 1) {
        t += mpq_class(1, 3);
        l += (pp + 1) / 9;
      } else {
        t -= mpq_class(1, 3);
        l -= (pp + 1) / 9;
      }
      return {to_int(l), to_int(t)};
    }
  }
  throw std::invalid_argument("ell_t: unknown route");
}

struct CountReport {
  i64 n = 0, d_n = 0, cusp_count = 0;
  EllT enumerated, prop_sums;
  std::optional<EllT> prime_power;
  bool prop_claimed = true;  // false for N = 6
  bool agree = true;
};

inline CountReport count_report(i64 n) {
  CountReport r;
  r.n = n;
  r.d_n = d_n(n);
  r.cusp_count = r.d_n / n;
  r.enumerated = ell_t(n, CountRoute::enumeration);
  r.prop_sums = ell_t(n, CountRoute::prop_sums);
  r.prop_claimed = n != 6;
  if (prime_power_base(n, nullptr) != 0) r.prime_power = ell_t(n, CountRoute::prime_power);
  r.agree = (!r.prop_claimed || r.enumerated == r.prop_sums) && (!r.prime_power || *r.prime_power == r.enumerated);
  return r;
}

/// Kronecker symbol (D / p) for a prime p.
inline int kronecker_symbol(i64 d, i64 p) { return kronecker_prime(d, p); }

inline bool is_fundamental_discriminant(i64 d) {
  if (d >= 0) return false;
  auto squarefree = [](i64 x) {
    for (auto [p, e] : factor(x < 0 ? -x : x))
      if (e > 1) return false;
    return true;
  };
  if (mod(d, 4) == 1) return squarefree(d);
  if (mod(d, 4) != 0) return false;
  const i64 m = d / 4;
  return (mod(m, 4) == 2 || mod(m, 4) == 3) && squarefree(m);
}

/// Q(sqrt D) is contained in Q(zeta_m) iff |D| divides m.
inline bool quadratic_in_cyclotomic(i64 d, i64 m) { return m % (d < 0 ? -d : d) == 0; }

/// [ray class field mod N : H(zeta_N)] for the imaginary quadratic field of discriminant D.
inline mpq_class ray_class_degree(i64 d, i64 n) {
  if (n < 1) throw std::invalid_argument("ray_class_degree: N must be positive");
  if (!is_fundamental_discriminant(d)) throw std::domain_error("ray_class_degree: D must be a fundamental imaginary quadratic discriminant");
  if (d == -3 || d == -4) throw std::domain_error("ray_class_degree: D = -3, -4 are excluded");
  mpq_class base = static_cast<long>(n);
  bool in_component = false;
  for (auto [p, e] : factor(n)) {
    base *= 1 - mpq_class(kronecker_symbol(d, p), static_cast<long>(p));
    if (quadratic_in_cyclotomic(d, ipow(p, e))) in_component = true;
  }
  if (in_component) return base;
  int r = 0;
  for (i64 p : prime_divisors(gcd(d < 0 ? -d : d, n)))
    if (p != 2) ++r;
  int s = r;
  if (mod(n, 8) == 4 && mod(d, 8) == 4) s = r + 1;
  if (mod(n, 8) == 0 && mod(d, 2) == 0) s = r + 1;
  mpq_class two_s = 1;
  for (int i = 0; i < s; ++i) two_s *= 2;
  if (quadratic_in_cyclotomic(d, n)) return two_s * base;
  return two_s * base / 2;
}

}  // namespace genlambda
