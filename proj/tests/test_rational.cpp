#include <gtest/gtest.h>

#include "qtcat/catalan.hpp"
#include "qtcat/rational_formula.hpp"

using namespace qtcat;

namespace {
QtPoly q() { return QtPoly::q(); }
QtPoly t() { return QtPoly::t(); }
QtPoly one() { return QtPoly::constant(1); }
}  // namespace

TEST(MuData, SingleCell) {
  MuData d = mu_data(Partition({1}));
  EXPECT_EQ(d.T, one());
  EXPECT_EQ(d.B, one());
  EXPECT_EQ(d.Pi, one());
  EXPECT_EQ(d.w, (one() - t()) * (one() - q()));
}

TEST(MuData, TwoCellRow) {
  MuData d = mu_data(Partition({2}));
  EXPECT_EQ(d.T, q());
  EXPECT_EQ(d.B, one() + q());
  EXPECT_EQ(d.Pi, one() - q());
  // cell (0,0): a=1, l=0; cell (1,0): a=0, l=0
  EXPECT_EQ(d.w, (q() - t()) * (one() - q().pow(2)) * (one() - t()) * (one() - q()));
}

TEST(MuData, TransposeSwapsVariables) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      MuData a = mu_data(mu);
      MuData b = mu_data(mu.conjugate());
      EXPECT_EQ(a.T.swap_variables(), b.T);
      EXPECT_EQ(a.B.swap_variables(), b.B);
      EXPECT_EQ(a.Pi.swap_variables(), b.Pi);
      EXPECT_EQ(a.w.swap_variables(), b.w);
    }
}

TEST(MuData, RejectsEmpty) { EXPECT_THROW(mu_data(Partition{}), std::invalid_argument); }

TEST(Interpolate, RecoversPolynomial) {
  std::vector<Rational> xs{2, 3, 5, 7}, ys;
  for (const auto& x : xs) ys.push_back(3 * x * x * x - x + Rational(1, 2));
  auto c = interpolate_univariate(xs, ys);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0], Rational(1, 2));
  EXPECT_EQ(c[1], -1);
  EXPECT_EQ(c[2], 0);
  EXPECT_EQ(c[3], 3);
}

TEST(RcPoly, Examples) {
  EXPECT_EQ(rc_poly(3, 2), q().pow(3) + q().pow(2) * t() + q() * t().pow(2) + t().pow(3));
  EXPECT_EQ(rc_poly(1, 1), one());
  EXPECT_EQ(rc_poly(1, 3).eval(Integer(1), Integer(1)), 5);
}

TEST(RcPoly, MatchesPcForSmallSizes) {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(rc_poly(m, n), pc_poly(m, n)) << "m=" << m << " n=" << n;
}

TEST(RcPoly, RejectsBadInput) { EXPECT_THROW(rc_poly(0, 2), std::invalid_argument); }

TEST(RcSpecialize, TInverseQ) {
  EXPECT_EQ(rc_specialize_t_qinv(rc_poly(1, 2), 1, 2), one() + q().pow(2));
  EXPECT_EQ(q_fuss_catalan(1, 2), one() + q().pow(2));
  EXPECT_EQ(rc_specialize_t_qinv(rc_poly(1, 1), 1, 1), one());
}

TEST(RcSpecialize, TOneIsAreaGeneratingFunction) {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 5; ++n) {
      QtPoly area;
      for_each_dyck_path(m, n, [&](const DyckPath& pi) { area.add_term(pi.area(), 0, 1); });
      QtPoly rc = rc_poly(m, n);
      EXPECT_EQ(rc_specialize_t1(rc), area) << "m=" << m << " n=" << n;
      EXPECT_EQ(rc_specialize_t_qinv(rc, m, n), q_fuss_catalan(m, n)) << "m=" << m << " n=" << n;
    }
}

TEST(RcSpecialize, TwoTwoEnumeratesThreePaths) {
  QtPoly area;
  int count = 0;
  for_each_dyck_path(2, 2, [&](const DyckPath& pi) {
    area.add_term(pi.area(), 0, 1);
    ++count;
  });
  EXPECT_EQ(count, 3);
  EXPECT_EQ(rc_specialize_t1(rc_poly(2, 2)), area);
}

TEST(QFussCatalan, CatalanAtQOne) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(q_fuss_catalan(m, n).eval(Integer(1), Integer(1)), higher_catalan(m, n));
}
