#include <gtest/gtest.h>

#include "genlambda/lambda.hpp"

using namespace genlambda;

namespace {

CycNum c(int n, i64 v) { return CycNum::from_int(n, v); }

}  // namespace

TEST(Lambda, IdentityLeadingTerm) {
  const QSeries l3 = lambda_series(SL2Mat::identity(), 3, 20);
  EXPECT_EQ(qs_order(l3), 1);
  EXPECT_EQ(l3.leading(), (CycNum::zeta(3) - c(3, 1)) * 3);
  EXPECT_EQ(l3.prec(), 20);
  for (int n = 3; n <= 12; ++n) {
    const QSeries l = lambda_series(SL2Mat::identity(), n, 8);
    const CycNum u = c(n, 1) - CycNum::zeta(n);
    EXPECT_EQ(qs_order(l), 1);
    EXPECT_EQ(l.leading(), u * u * u / CycNum::zeta(n));
  }
}

TEST(Lambda, SMatrixIsInverseOfConjugate) {
  for (i64 n : {3, 4, 5, 7}) {
    const i64 p = 40;
    const QSeries ls = lambda_series(SL2Mat::S(), n, p);
    const QSeries rhs = qs_inv(lambda_series(SL2Mat::identity(), n, p + 2).sigma(n - 1));
    EXPECT_TRUE(qs_agree(ls, rhs).agree) << n;
    EXPECT_EQ(ls.prec(), p);
  }
}

TEST(Lambda, BasisSeriesExamples) {
  for (i64 n : {3, 4, 5, 8}) {
    const QSeries l = lambda_series(SL2Mat::identity(), n, 30);
    EXPECT_EQ(lambda_basis_series({1, 0, 0, 1}, n, 30), l);
    const auto r = qs_agree(lambda_basis_series({0, 1, 1, 0}, n, 30), qs_inv(lambda_series(SL2Mat::identity(), n, 32)));
    EXPECT_TRUE(r.agree);
  }
  EXPECT_THROW(lambda_basis_series({1, 0, 2, 0}, 4, 10), std::domain_error);
}

TEST(Lambda, BasisChangeLaw) {
  // Lambda(Q1, Q2) = Lambda_k o A where (Q1; Q2) = diag(1, k) A, checked through
  // the Galois route: Lambda_k o A = sigma_k(Lambda o A'), A' = (a, b k^-1; c k, d).
  for (i64 n : {5, 7, 8}) {
    for (i64 r1 = 0; r1 < n; ++r1)
      for (i64 s1 = 0; s1 < n; s1 += 2)
        for (i64 r2 = 0; r2 < n; r2 += 3)
          for (i64 s2 = 0; s2 < n; ++s2) {
            const BasisPair b{r1, s1, r2, s2};
            const i64 k = b.det(n);
            if (gcd(k, n) != 1) continue;
            const i64 ki = inv_mod(k, n);
            // A = diag(1, k^-1) (Q1; Q2)
            const SL2Mat a = lift_matrix(r1, s1, mod(r2 * ki, n), mod(s2 * ki, n), n);
            const SL2Mat ap = lift_matrix(a.a, a.b * ki, a.c * k, a.d, n);
            const QSeries lhs = lambda_basis_series(b, n, 12);
            EXPECT_EQ(lhs, lambda_k_series(k, a, n, 12));
            EXPECT_EQ(lhs, lambda_series(ap, n, 12).sigma(k));
          }
  }
}

TEST(Lambda, GaloisLaw) {
  // (Lambda o A)^sigma_k = Lambda_k o A_k, A_k = (a, b k; c k^-1, d)
  for (i64 n : {5, 7}) {
    const auto tr = transversal(n);
    for (i64 k = 1; k < n; ++k) {
      const i64 ki = inv_mod(k, n);
      for (std::size_t t = 0; t < tr.size(); t += 7) {
        const SL2Mat& a = tr[t].matrix;
        const SL2Mat ak = lift_matrix(a.a, a.b * k, a.c * ki, a.d, n);
        EXPECT_EQ(lambda_series(a, n, 16).sigma(k), lambda_k_series(k, ak, n, 16));
      }
    }
  }
}

TEST(Lambda, OrderMatchesNuFormula) {
  for (i64 n = 3; n <= 9; ++n)
    for (const auto& t : transversal(n)) EXPECT_EQ(qs_order(lambda_series(t.matrix, n, n)), nu(t.matrix, n)) << n << t.matrix.to_string();
}

TEST(Lambda, SignAndLiftInvariance) {
  for (i64 n : {4, 5, 7}) {
    for (const auto& t : transversal(n)) {
      if (t.shift % 2) continue;
      const SL2Mat& m = t.matrix;
      const QSeries l = lambda_series(m, n, 10);
      EXPECT_EQ(l, lambda_series(-m, n, 10));
      // another integer lift of the same residue matrix
      const SL2Mat g(1 + n, n, -n, 1 - n);  // in Gamma(N)
      EXPECT_EQ(l, lambda_series(m * g, n, 10));
    }
  }
}

TEST(Lambda, Integrality) {
  for (int n : {3, 4, 5, 7, 8, 9}) {
    const CycNum u = c(n, 1) - CycNum::zeta(n);
    const QSeries l = lambda_series(SL2Mat::identity(), n, 40) * (u * u * u);
    for (const auto& co : l.coeffs()) EXPECT_TRUE(is_integral(co)) << n;
  }
}

TEST(Lambda, PrecisionTooLowThrows) {
  EXPECT_THROW(lambda_series(SL2Mat::identity(), 5, 1), precision_error);
  EXPECT_NO_THROW(lambda_series(SL2Mat::S(), 5, 0));
}

TEST(Lambda, WLeadingCoefficients) {
  const CycNum z5 = CycNum::zeta(5);
  auto check = [](const EIndex& x, const EIndex& y, i64 n) {
    const QSeries w = w_series(x, y, n, 6);
    EXPECT_EQ(qs_order(w), 0);
    EXPECT_EQ(w.leading(), w_leading_coefficient(x, y, n));
    return w.leading();
  };
  EXPECT_EQ(check(EIndex::make(1, 0, 5), EIndex::make(1, 1, 5), 5), -z5);
  EXPECT_EQ(check(EIndex::make(1, 1, 5), EIndex::make(2, 0, 5), 5), z5 * z5);
  EXPECT_TRUE(check(EIndex::make(0, 1, 4), EIndex::make(1, 0, 4), 4).is_one());
  for (i64 n : {3, 4, 5, 6, 7, 8, 9})
    for (i64 r1 = 0; r1 < n; ++r1)
      for (i64 s1 = 0; s1 < n; ++s1)
        for (i64 r2 = 0; r2 < n; r2 += 2)
          for (i64 s2 = 1; s2 < n; s2 += 2) {
            if (r1 == 0 && s1 == 0) continue;
            const EIndex x = EIndex::make(r1, s1, n), y = EIndex::make(r2, s2, n);
            if (equal_up_to_sign(x, y, n)) continue;
            check(x, y, n);
          }
}
