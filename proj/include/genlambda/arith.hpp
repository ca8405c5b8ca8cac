#pragma once

// Small-integer number theory used throughout: residues, gcd, factorization,
// arithmetic functions and the Kronecker symbol.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace genlambda {

using i64 = std::int64_t;

/// Residue of x modulo n in [0, n).
constexpr i64 mod(i64 x, i64 n) {
  i64 r = x % n;
  return r < 0 ? r + n : r;
}

constexpr i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

constexpr i64 gcd(i64 a, i64 b, i64 c) { return std::gcd(std::gcd(a, b), c); }

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
constexpr std::tuple<i64, i64, i64> ext_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    i64 q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_x, x) = std::make_pair(x, old_x - q * x);
    std::tie(old_y, y) = std::make_pair(y, old_y - q * y);
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

/// Inverse of a modulo n; throws if gcd(a, n) != 1.
inline i64 inv_mod(i64 a, i64 n) {
  auto [g, x, y] = ext_gcd(mod(a, n), n);
  (void)y;
  if (g != 1) throw std::domain_error("inv_mod: element not invertible");
  return mod(x, n);
}

/// Prime factorization as (prime, exponent) pairs in increasing order.
inline std::vector<std::pair<i64, int>> factor(i64 n) {
  if (n <= 0) throw std::invalid_argument("factor: n must be positive");
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<i64> prime_divisors(i64 n) {
  std::vector<i64> ps;
  for (auto [p, e] : factor(n)) ps.push_back(p);
  return ps;
}

inline std::vector<i64> divisors(i64 n) {
  std::vector<i64> ds{1};
  for (auto [p, e] : factor(n)) {
    std::size_t cur = ds.size();
    i64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < cur; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline i64 totient(i64 n) {
  i64 r = n;
  for (i64 p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

inline int moebius(i64 n) {
  int m = 1;
  for (auto [p, e] : factor(n)) {
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}

/// Product of the distinct primes dividing n (the radical, written n* in the literature).
inline i64 radical(i64 n) {
  i64 r = 1;
  for (i64 p : prime_divisors(n)) r *= p;
  return r;
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

/// Single prime p with n = p^m, or 0 when n is not a prime power (n >= 2).
inline i64 prime_power_base(i64 n, int* exponent = nullptr) {
  if (n < 2) return 0;
  auto f = factor(n);
  if (f.size() != 1) return 0;
  if (exponent) *exponent = f[0].second;
  return f[0].first;
}

/// Kronecker symbol (d / p) for a prime p; p = 2 uses the d mod 8 table.
inline int kronecker_prime(i64 d, i64 p) {
  if (!is_prime(p)) throw std::invalid_argument("kronecker_prime: p must be prime");
  if (p == 2) {
    if (d % 2 == 0) return 0;
    i64 r = mod(d, 8);
    return (r == 1 || r == 7) ? 1 : -1;
  }
  i64 a = mod(d, p);
  if (a == 0) return 0;
  // Euler's criterion with square-and-multiply.
  i64 e = (p - 1) / 2, result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

/// Integer power with overflow left to the caller (all uses are tiny).
constexpr i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace genlambda
