#include <gtest/gtest.h>

#include "qtcat/qt_poly.hpp"

using namespace qtcat;

namespace {

QtPoly q() { return QtPoly::q(); }
QtPoly t() { return QtPoly::t(); }
QtPoly one() { return QtPoly::constant(1); }

QtPoly pc32() { return q().pow(3) + q().pow(2) * t() + q() * t().pow(2) + t().pow(3); }

}  // namespace

TEST(QtPolyAdd, CancelsOppositeTerms) {
  EXPECT_EQ((q() + t()) + (q() - t()), QtPoly::monomial(1, 0, 2));
}

TEST(QtPolyAdd, ZeroIsIdentity) {
  QtPoly p = pc32();
  EXPECT_EQ(p + QtPoly{}, p);
}

TEST(QtPolyAdd, AddsNewMonomial) {
  QtPoly p = pc32() + q() * t();
  EXPECT_EQ(p.size(), 5u);
  EXPECT_EQ(p.coeff(1, 1), 1);
}

TEST(QtPolyMul, ExpandsBinomials) {
  EXPECT_EQ((one() - q()) * (one() - t()), one() - q() - t() + q() * t());
}

TEST(QtPolyMul, OneIsIdentity) { EXPECT_EQ(pc32() * one(), pc32()); }

TEST(QtPolyMul, Convolution) {
  QtPoly p = (one() + q()) * (one() + q() + q().pow(2));
  EXPECT_EQ(p, one() + QtPoly::monomial(1, 0, 2) + QtPoly::monomial(2, 0, 2) + q().pow(3));
}

TEST(QtPolyMul, IsCommutativeAndAssociative) {
  QtPoly a = one() + QtPoly::monomial(2, 1, -3);
  QtPoly b = q() - t() * t();
  QtPoly c = pc32();
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * (b + c), a * b + a * c);
}

TEST(QtPolyModify, ReflectsQDegree) {
  QtPoly expected = one() + q() * t() + q().pow(2) * t().pow(2) + q().pow(3) * t().pow(3);
  EXPECT_EQ(pc32().modify(3), expected);
  EXPECT_EQ(one().modify(0), one());
  EXPECT_EQ(q().modify(2), q());
}

TEST(QtPolyModify, IsAnInvolution) { EXPECT_EQ(pc32().modify(5).modify(5), pc32()); }

TEST(QtPolySpecialize, TEqualsOneAndInverseQ) {
  EXPECT_EQ(pc32().at_t_one(), one() + q() + q().pow(2) + q().pow(3));
  // q^3 + q^1 + q^-1 + q^-3 shifted by 3
  EXPECT_EQ(pc32().at_t_inverse_q().shift(3, 0), one() + q().pow(2) + q().pow(4) + q().pow(6));
}

TEST(QtPolyEval, IntegerAndRational) {
  EXPECT_EQ(pc32().eval(Integer(1), Integer(1)), 4);
  EXPECT_EQ(pc32().eval(Integer(2), Integer(1)), 15);
  EXPECT_EQ(pc32().eval(Rational(1, 2), Rational(1, 2)), Rational(1, 2));
}

TEST(QtPolyDegrees, Extremes) {
  QtPoly p = QtPoly::monomial(2, 5) + QtPoly::monomial(4, 1);
  EXPECT_EQ(p.max_q_degree(), 4);
  EXPECT_EQ(p.min_q_degree(), 2);
  EXPECT_EQ(p.max_t_degree(), 5);
  EXPECT_EQ(p.min_t_degree(), 1);
}

TEST(QInt, SmallCases) {
  EXPECT_EQ(q_int(1), one());
  EXPECT_EQ(q_int(3), one() + q() + q().pow(2));
  EXPECT_EQ(q_int(5), one() + q() + q().pow(2) + q().pow(3) + q().pow(4));
}

TEST(QBinomial, SmallCases) {
  EXPECT_EQ(q_binomial(4, 2), one() + q() + QtPoly::monomial(2, 0, 2) + q().pow(3) + q().pow(4));
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(q_binomial(n, 0), one());
    EXPECT_EQ(q_binomial(n, n), one());
  }
}

TEST(QBinomial, PascalRecurrenceAndSymmetry) {
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b < a; ++b) {
      EXPECT_EQ(q_binomial(a, b), q_binomial(a - 1, b - 1) + q_binomial(a - 1, b).shift(b, 0));
      EXPECT_EQ(q_binomial(a, b), q_binomial(a, a - b));
    }
}

TEST(ExactDivide, RejectsNonMultiples) {
  EXPECT_EQ(exact_divide_q(q_int(6), q_int(3)), one() + q().pow(3));
  EXPECT_THROW(exact_divide_q(q_int(5), q_int(3)), std::exception);
}

TEST(PartitionSeries, KnownCoefficients) {
  QtSeries s = partition_product_series(8);
  EXPECT_EQ(s.coeff(0, 0), 1);
  EXPECT_EQ(s.coeff(4, 2), 2);
  for (int a = 1; a <= 8; ++a) EXPECT_EQ(s.coeff(a, 1), 1);
  // every partition of 8 counted once across t-degrees
  Integer total = 0;
  for (int b = 0; b <= 8; ++b) total += s.coeff(8, b);
  EXPECT_EQ(total, 22);
}

TEST(PartitionSeries, TruncationOrderZero) {
  QtSeries s = partition_product_series(0);
  EXPECT_EQ(s.terms().size(), 1u);
  EXPECT_EQ(s.coeff(0, 0), 1);
}

TEST(QtPolyJson, CanonicalFormRoundTrips) {
  QtPoly p = pc32() + QtPoly::monomial(1, 1, Integer("123456789012345678901234567890"));
  nlohmann::json j = to_json(p);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j[0]["q"], 0);
  EXPECT_EQ(j[0]["t"], 3);
  EXPECT_TRUE(j[0]["c"].is_string());
  for (std::size_t i = 1; i < j.size(); ++i)
    EXPECT_LT(std::make_pair(j[i - 1]["q"].get<int>(), j[i - 1]["t"].get<int>()), std::make_pair(j[i]["q"].get<int>(), j[i]["t"].get<int>()));
  EXPECT_EQ(qtpoly_from_json(j), p);
  EXPECT_EQ(to_json(qtpoly_from_json(j)).dump(), j.dump());
}

TEST(QtPolyJson, RejectsNonArray) { EXPECT_THROW(qtpoly_from_json(nlohmann::json::object()), std::invalid_argument); }

TEST(QtPolyString, Readable) {
  EXPECT_FALSE(pc32().to_string().empty());
  EXPECT_EQ(QtPoly{}.to_string(), "0");
}
