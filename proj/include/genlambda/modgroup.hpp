#pragma once

// Combinatorics of the principal congruence subgroup Gamma(N): the bracket
// functions {x} and mu(x), cusp representatives, lifts to SL2(Z), the
// transversal of +-Gamma(N) in SL2(Z) and the order formula for Lambda o A.

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genlambda/arith.hpp"

namespace genlambda {

struct BraceMu {
  i64 brace;
  int mu;
  friend bool operator==(const BraceMu&, const BraceMu&) = default;
};

/// {x} in [0, N/2] and mu(x) = +-1 with x = mu(x) {x} mod N (mu = 1 when 2x = 0 mod N).
inline BraceMu brace_mu(i64 x, i64 n) {
  if (n <= 2) throw std::invalid_argument("brace_mu: N must exceed 2");
  const i64 r = mod(x, n);
  if (r == 0 || 2 * r == n) return {r, 1};
  if (2 * r < n) return {r, 1};
  return {n - r, -1};
}
inline i64 brace(i64 x, i64 n) { return brace_mu(x, n).brace; }
inline int mu(i64 x, i64 n) { return brace_mu(x, n).mu; }

/// Integer 2x2 matrix of determinant 1, viewed at level N.
struct SL2Mat {
  i64 a = 1, b = 0, c = 0, d = 1;

  SL2Mat() = default;
  SL2Mat(i64 a_, i64 b_, i64 c_, i64 d_) : a(a_), b(b_), c(c_), d(d_) {
    if (a * d - b * c != 1) throw std::invalid_argument("SL2Mat: determinant must be 1");
  }

  static SL2Mat identity() { return {}; }
  static SL2Mat T() { return {1, 1, 0, 1}; }
  static SL2Mat S() { return {0, 1, -1, 0}; }
  static SL2Mat T_pow(i64 i) { return {1, i, 0, 1}; }

  friend SL2Mat operator*(const SL2Mat& x, const SL2Mat& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  SL2Mat operator-() const { return {-a, -b, -c, -d}; }

  /// Entries reduced into [0, N).
  std::array<i64, 4> residue(i64 n) const { return {mod(a, n), mod(b, n), mod(c, n), mod(d, n)}; }

  friend bool operator==(const SL2Mat&, const SL2Mat&) = default;

  std::string to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," + std::to_string(d) + ")";
  }
};

/// A matrix of determinant 1 whose first column is congruent to (a, c) mod N.
/// The bottom-left entry is c mod N, replaced by N when c = 0 mod N and a != 1 mod N;
/// the top-left entry is the first a + tN (t = 0, 1, ...) coprime to it.
inline SL2Mat lift_to_sl2(i64 a, i64 c, i64 n) {
  if (n < 1) throw std::invalid_argument("lift_to_sl2: N must be positive");
  if (gcd(a, c, n) != 1) throw std::domain_error("lift_to_sl2: gcd(a, c, N) must be 1");
  const i64 ar = mod(a, n);
  i64 c0 = mod(c, n);
  if (c0 == 0 && (ar != mod(1, n) || n == 1)) c0 = n;
  if (c0 == 0) return SL2Mat::identity();
  i64 a0 = ar;
  while (gcd(a0, c0) != 1) a0 += n;
  auto [g, x, y] = ext_gcd(a0, c0);
  (void)g;  // a0*x + c0*y = 1, so (a0, -y; c0, x) has determinant 1
  return {a0, -y, c0, x};
}

/// Any lift of a residue matrix (a b; c d) with ad - bc = 1 mod N.
inline SL2Mat lift_matrix(i64 a, i64 b, i64 c, i64 d, i64 n) {
  if (mod(a * d - b * c, n) != mod(1, n)) throw std::domain_error("lift_matrix: determinant must be 1 mod N");
  SL2Mat m = lift_to_sl2(a, c, n);
  // target = m * T^t mod N with t = (m^-1 target)_{12}
  const i64 t = mod(m.d * b - m.b * d, n);
  return m * SL2Mat::T_pow(t);
}

enum class CuspClass { S1, S2 };

struct CuspRep {
  i64 a = 0, c = 0;  // canonical residues in [0, N)
  CuspClass cls = CuspClass::S2;
  SL2Mat matrix;
  bool primary = true;  // for S1: whether this member owns the lifted matrix
  int partner = -1;     // index of the paired S1 class, -1 for S2
};

inline std::pair<i64, i64> canonical_pair(i64 a, i64 c, i64 n) {
  std::pair<i64, i64> p{mod(a, n), mod(c, n)}, q{mod(-a, n), mod(-c, n)};
  return std::min(p, q);
}

/// Which member of a S1 pair receives the lifted matrix; the other gets the partner construction.
enum class PairConvention { smaller_primary, larger_primary };

/// Inequivalent cusps of Gamma(N) as canonical pairs (a, c), with fixed matrices.
/// S1 pairs {(a,c),(c,a)} get A = lift(a, c) on the chosen member and
/// A' = (z, -w; x, -y) on the other, where A = (x, y; z, w).
inline std::vector<CuspRep> cusp_reps(i64 n, PairConvention conv = PairConvention::smaller_primary) {
  if (n < 3) throw std::invalid_argument("cusp_reps: N must be at least 3");
  std::vector<CuspRep> reps;
  for (i64 a = 0; a < n; ++a)
    for (i64 c = 0; c < n; ++c) {
      if (gcd(a, c, n) != 1) continue;
      if (canonical_pair(a, c, n) != std::make_pair(a, c)) continue;
      CuspRep r;
      r.a = a;
      r.c = c;
      r.cls = (mod(a - c, n) == 0 || mod(a + c, n) == 0) ? CuspClass::S2 : CuspClass::S1;
      reps.push_back(r);
    }
  auto index_of = [&](std::pair<i64, i64> p) {
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (reps[i].a == p.first && reps[i].c == p.second) return static_cast<int>(i);
    throw std::logic_error("cusp_reps: partner not found");
  };
  for (std::size_t i = 0; i < reps.size(); ++i) {
    auto& r = reps[i];
    if (r.cls == CuspClass::S2) {
      r.matrix = lift_to_sl2(r.a, r.c, n);
      continue;
    }
    r.partner = index_of(canonical_pair(r.c, r.a, n));
    const bool smaller = static_cast<std::size_t>(r.partner) > i;
    r.primary = (conv == PairConvention::smaller_primary) ? smaller : !smaller;
  }
  for (auto& r : reps) {
    if (r.cls != CuspClass::S1 || !r.primary) continue;
    r.matrix = lift_to_sl2(r.a, r.c, n);
    const SL2Mat& m = r.matrix;
    reps[static_cast<std::size_t>(r.partner)].matrix = SL2Mat(m.c, -m.d, m.a, -m.b);
  }
  return reps;
}

/// Index [SL2(Z) : +-Gamma(N)] = (N^3/2) prod_{p | N} (1 - p^-2), N >= 3.
inline i64 d_n(i64 n) {
  if (n < 3) throw std::invalid_argument("d_n: N must be at least 3");
  i64 v = n * n * n;
  for (i64 p : prime_divisors(n)) v = v / (p * p) * (p * p - 1);
  return v / 2;
}

/// Order of the q-expansion of Lambda o A, from the first column of A mod N.
inline i64 nu_first_column(i64 a, i64 c, i64 n) {
  const i64 ba = brace(a, n), bc = brace(c, n), bac = brace(a + c, n);
  return std::min(ba, bac) - std::min(bc, bac);
}
inline i64 nu(const SL2Mat& m, i64 n) { return nu_first_column(m.a, m.c, n); }

struct TransversalEntry {
  SL2Mat matrix;  // A T^i
  int cusp = 0;   // index into cusp_reps
  i64 shift = 0;  // i
};

/// The d_N matrices A T^i, A running over the fixed cusp matrices, 0 <= i < N.
inline std::vector<TransversalEntry> transversal(i64 n, PairConvention conv = PairConvention::smaller_primary) {
  const auto reps = cusp_reps(n, conv);
  std::vector<TransversalEntry> out;
  out.reserve(reps.size() * static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < reps.size(); ++k)
    for (i64 i = 0; i < n; ++i) out.push_back({reps[k].matrix * SL2Mat::T_pow(i), static_cast<int>(k), i});
  return out;
}

}  // namespace genlambda
