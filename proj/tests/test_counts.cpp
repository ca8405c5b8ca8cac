#include <gtest/gtest.h>

#include "genlambda/counts.hpp"

using namespace genlambda;

TEST(Counts, SumEnumExamples) {
  EXPECT_EQ(sum_enum(SumKind::I, 1, 1, 9), 10);
  EXPECT_EQ(sum_enum(SumKind::I, 0, 5, 35), 14);
  EXPECT_EQ(sum_enum(SumKind::J, 1, 5, 5), 1);
  EXPECT_THROW(sum_enum(SumKind::I, 1, 4, 10), std::invalid_argument);
}

TEST(Counts, SumClosedExamples) {
  EXPECT_EQ(sum_closed(SumKind::I, 1, 1, 9), 10);
  EXPECT_EQ(sum_closed(SumKind::J, 0, 5, 5), 1);
  EXPECT_EQ(sum_closed(SumKind::I, 1, 6, 12), 6);
  EXPECT_EQ(sum_enum(SumKind::I, 1, 6, 12), 6);
  EXPECT_THROW(sum_closed(SumKind::J, 1, 1, 7), branch_error);
  EXPECT_THROW(sum_closed(SumKind::J, 0, 2, 8), branch_error);
  EXPECT_THROW(sum_closed(SumKind::J, 0, 2, 6), branch_error);
}

TEST(Counts, ClosedMatchesEnumerationOnEveryBranch) {
  int checked = 0;
  for (i64 m = 1; m <= 200; ++m)
    for (i64 l : divisors(m))
      for (SumKind kind : {SumKind::I, SumKind::J})
        for (i64 k : {0, 1}) {
          i64 closed = 0;
          try {
            closed = sum_closed(kind, k, l, m);
          } catch (const branch_error&) {
            // refused branches: J with L* <= 2 (except the L* = 2 remark for J_1), or M = 0 mod 3 without L = 0 mod 3
            const i64 ls = radical(l);
            EXPECT_EQ(kind, SumKind::J);
            EXPECT_TRUE((mod(m, 3) == 0 && mod(l, 3) != 0) || ls == 1 || (ls == 2 && k == 0)) << m << " " << l << " " << k;
            continue;
          }
          EXPECT_EQ(closed, sum_enum(kind, k, l, m)) << (kind == SumKind::I ? "I" : "J") << k << "(" << l << "," << m << ")";
          ++checked;
        }
  EXPECT_GT(checked, 1500);
}

TEST(Counts, DnValues) {
  EXPECT_EQ(d_n(3), 12);
  EXPECT_EQ(d_n(4), 24);
  EXPECT_EQ(d_n(5), 60);
  for (i64 n = 3; n <= 60; ++n) EXPECT_EQ(d_n(n) % 2, 0);
}

TEST(Counts, EllTExamples) {
  for (auto route : {CountRoute::enumeration, CountRoute::prop_sums, CountRoute::prime_power}) {
    EXPECT_EQ(ell_t(3, route), (EllT{1, 1}));
    EXPECT_EQ(ell_t(5, route), (EllT{4, 3}));
    EXPECT_EQ(ell_t(8, route), (EllT{11, 7}));
    EXPECT_EQ(ell_t(4, route), (EllT{1, 1}));
    EXPECT_EQ(ell_t(7, route), (EllT{10, 6}));
  }
  EXPECT_EQ(ell_t(9, CountRoute::prime_power).ell, 18);
  EXPECT_THROW(ell_t(12, CountRoute::prime_power), std::domain_error);
}

TEST(Counts, ThreeRouteAgreement) {
  for (i64 n = 3; n <= 40; ++n) {
    const EllT e = ell_t(n, CountRoute::enumeration);
    if (n != 6) EXPECT_EQ(e, ell_t(n, CountRoute::prop_sums)) << n;
    if (prime_power_base(n) != 0 && n <= 32) EXPECT_EQ(e, ell_t(n, CountRoute::prime_power)) << n;
    EXPECT_LE(e.t, d_n(n) / n);
    const CountReport r = count_report(n);
    EXPECT_TRUE(r.agree) << n;
  }
}

TEST(Counts, EllOneOnlyForThreeAndFour) {
  for (i64 n = 3; n <= 40; ++n) EXPECT_EQ(ell_t(n, CountRoute::enumeration).ell == 1, n == 3 || n == 4) << n;
}

TEST(Counts, RayClassDegreeExamples) {
  EXPECT_EQ(ray_class_degree(-11, 4), 3);
  EXPECT_EQ(ray_class_degree(-11, 3), 1);
  EXPECT_EQ(ray_class_degree(-7, 3), 2);
  EXPECT_THROW(ray_class_degree(-3, 5), std::domain_error);
  EXPECT_THROW(ray_class_degree(-4, 5), std::domain_error);
  EXPECT_THROW(ray_class_degree(-12, 5), std::domain_error);
}

TEST(Counts, RayClassDegreeAtCMFields) {
  // conductor 3: quadratic when m = -1 mod 3, degree 4 otherwise; [K(zeta_3):K] = 2
  for (i64 m : {7, 11, 19, 43, 67, 163}) {
    const mpq_class deg = ray_class_degree(-m, 3) * 2;
    EXPECT_EQ(deg, mod(m, 3) == 2 ? 2 : 4) << m;
  }
  // conductor 4: degree 3 over Q(sqrt(-m), i)
  for (i64 m : {11, 19, 43, 67, 163}) EXPECT_EQ(ray_class_degree(-m, 4), 3) << m;
}

TEST(Counts, KroneckerAtTwo) {
  EXPECT_EQ(kronecker_symbol(-7, 2), 1);
  EXPECT_EQ(kronecker_symbol(-11, 2), -1);
  EXPECT_EQ(kronecker_symbol(-8, 2), 0);
  EXPECT_EQ(kronecker_symbol(-11, 3), 1);
  EXPECT_EQ(kronecker_symbol(-7, 3), -1);
  EXPECT_EQ(kronecker_symbol(-15, 5), 0);
}
