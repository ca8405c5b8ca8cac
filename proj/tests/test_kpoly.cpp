#include <gtest/gtest.h>

#include <random>

#include "genlambda/kpoly.hpp"

using namespace genlambda;

namespace {

CycNum random_cyc(int n, std::mt19937& rng, int range = 5) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<mpq_class> c(static_cast<std::size_t>(CycContext::get(n).degree()));
  for (auto& x : c) x = mpq_class(d(rng), 1 + (d(rng) + range) % 3);
  return CycNum::from_coords(n, c);
}

KPoly random_poly(int n, int deg, std::mt19937& rng) {
  std::vector<CycNum> c;
  for (int i = 0; i <= deg; ++i) c.push_back(random_cyc(n, rng));
  if (c.back().is_zero()) c.back() = CycNum::one(n);
  return KPoly(n, c);
}

}  // namespace

TEST(KPoly, ArithmeticMatchesEmbedding) {
  std::mt19937 rng(11);
  for (int n : {3, 5, 8}) {
    for (int trial = 0; trial < 10; ++trial) {
      const KPoly a = random_poly(n, trial % 4 + 1, rng), b = random_poly(n, trial % 3, rng);
      const std::complex<double> z(0.3 + 0.1 * trial, -0.7);
      EXPECT_LT(std::abs((a * b).eval(z) - a.eval(z) * b.eval(z)), 1e-9);
      EXPECT_LT(std::abs((a + b).eval(z) - a.eval(z) - b.eval(z)), 1e-9);
      EXPECT_LT(std::abs(a.pow(3).eval(z) - std::pow(a.eval(z), 3)), 1e-7);
    }
  }
}

TEST(KPoly, DivisionIdentity) {
  std::mt19937 rng(5);
  for (int n : {4, 7}) {
    for (int trial = 0; trial < 8; ++trial) {
      const KPoly a = random_poly(n, 6, rng), b = random_poly(n, 1 + trial % 4, rng);
      auto [q, r] = divmod(a, b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
    }
  }
}

TEST(KPoly, GcdOfConstructedProducts) {
  std::mt19937 rng(17);
  const int n = 5;
  const KPoly g = random_poly(n, 2, rng).monic();
  const KPoly a = g * random_poly(n, 3, rng), b = g * KPoly::linear_root(CycNum::from_int(n, 19));
  const KPoly h = kpoly_gcd(a, b);
  // h is monic and divides both; g divides h
  EXPECT_TRUE(h.lead().is_one());
  EXPECT_TRUE(divmod(a, h).second.is_zero());
  EXPECT_TRUE(divmod(b, h).second.is_zero());
  EXPECT_TRUE(divmod(h, g).second.is_zero());
}

TEST(KPoly, YunRecoversMultiplicities) {
  const int n = 3;
  const CycNum z = CycNum::zeta(n);
  const KPoly p1 = KPoly::linear_root(z), p2 = KPoly::linear_root(CycNum::from_int(n, 2)), p3 = KPoly::linear_root(-z - CycNum::one(n));
  const KPoly f = p1 * p2.pow(2) * p3.pow(3);
  const auto parts = yun_decomposition(f * CycNum::from_int(n, 7));
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], p1);
  EXPECT_EQ(parts[1], p2);
  EXPECT_EQ(parts[2], p3);
}

TEST(KPoly, ExactKthRoot) {
  std::mt19937 rng(23);
  for (int n : {3, 4, 7}) {
    const KPoly h = random_poly(n, 4, rng).monic();
    for (unsigned k : {2u, 3u}) {
      const auto r = exact_kth_root(h.pow(k), k);
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(*r, h);
    }
    const KPoly not_square = h.pow(2) + KPoly::constant(CycNum::one(n));
    EXPECT_FALSE(exact_kth_root(not_square, 2).has_value());
  }
}

TEST(KPoly, SquareFreeCertificate) {
  const int n = 4;
  const KPoly a = KPoly::linear_root(CycNum::zeta(n)) * KPoly::linear_root(CycNum::from_int(n, 3));
  EXPECT_TRUE(square_free_certificate(a).certified);
  EXPECT_FALSE(square_free_certificate(a * KPoly::linear_root(CycNum::zeta(n))).certified);
}

TEST(KPoly, PrimeEmbeddingIsRingMap) {
  std::mt19937 rng(3);
  const int n = 7;
  const auto e = prime_embedding(n);
  EXPECT_EQ(e.p % static_cast<std::uint64_t>(n), 1u);
  for (int t = 0; t < 20; ++t) {
    const CycNum a = random_cyc(n, rng), b = random_cyc(n, rng);
    try {
      const auto ra = reduce_mod(a, e), rb = reduce_mod(b, e);
      EXPECT_EQ(reduce_mod(a * b, e), detail::mulmod(ra, rb, e.p));
      EXPECT_EQ(reduce_mod(a + b, e), (ra + rb) % e.p);
    } catch (const std::domain_error&) {
    }
  }
}

TEST(KPoly, NumericRootsOfConstructedProduct) {
  const int n = 8;
  std::vector<CycNum> roots{CycNum::zeta(n), CycNum::zeta_pow(n, 3) + CycNum::one(n), CycNum::from_rational(n, mpq_class(-5, 2))};
  KPoly f = KPoly::constant(CycNum::from_int(n, 3));
  for (const auto& r : roots) f = f * KPoly::linear_root(r);
  const auto found = numeric_roots(f);
  ASSERT_EQ(found.size(), roots.size());
  for (const auto& r : roots) {
    double best = 1e9;
    for (auto z : found) best = std::min(best, std::abs(z - r.to_complex()));
    EXPECT_LT(best, 1e-12);
  }
}

TEST(KPoly, ConjugateIsCoefficientwise) {
  const int n = 5;
  const KPoly f(n, {CycNum::zeta(n), CycNum::one(n), CycNum::zeta_pow(n, 2)});
  const KPoly g = f.conj();
  const std::complex<double> x(0.4, 0.0);
  EXPECT_LT(std::abs(g.eval(x) - std::conj(f.eval(x))), 1e-12);
}
