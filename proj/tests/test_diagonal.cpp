#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "qtcat/catalan.hpp"
#include "qtcat/diagonal_module.hpp"
#include "qtcat/lemmas.hpp"

using namespace qtcat;

namespace {

PointSet ps(std::vector<Point> pts) { return PointSet(std::move(pts)); }

MultiPoly x(int n, int i) { return MultiPoly::x(n, i); }
MultiPoly y(int n, int i) { return MultiPoly::y(n, i); }

}  // namespace

TEST(PointSet, SortsAndRejectsDuplicates) {
  PointSet d = ps({{0, 1}, {0, 0}, {1, 0}});
  EXPECT_EQ(d.P(1), (Point{0, 0}));
  EXPECT_EQ(d.k(), 1);
  EXPECT_THROW(ps({{0, 0}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(ps({{-1, 0}}), std::invalid_argument);
}

TEST(PointSet, JsonRoundTrip) {
  PointSet d = ps({{0, 0}, {1, 0}, {0, 2}});
  EXPECT_EQ(pointset_from_json(to_json(d)), d);
}

TEST(Delta, Vandermonde) {
  EXPECT_EQ(delta(ps({{0, 0}, {1, 0}})), x(2, 2) - x(2, 1));
  MultiPoly v = delta(ps({{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(v.bidegree(), std::make_pair(1, 1));
  EXPECT_FALSE(v.is_zero());
}

TEST(Delta, IsAlternating) {
  for_each_pointset(3, 2, 1, [](const PointSet& d) {
    MultiPoly f = delta(d);
    EXPECT_EQ(f.permuted({1, 0, 2}), f * mpq_class(-1));
    EXPECT_EQ(f.permuted({1, 2, 0}), f);
  });
}

TEST(Delta, ExampleDeterminant) {
  // rows (1, y_i, y_i^2, x_i y_i)
  PointSet d = ps({{0, 0}, {0, 1}, {0, 2}, {1, 1}});
  MultiPoly expected(4);
  for_each_permutation(4, [&](const std::vector<int>& p, int sign) {
    MultiPoly term = MultiPoly::constant(4, sign);
    const int i1 = p[1] + 1, i2 = p[2] + 1, i3 = p[3] + 1;
    term *= y(4, i1);
    term *= y(4, i2) * y(4, i2);
    term *= x(4, i3) * y(4, i3);
    expected += term;
  });
  EXPECT_EQ(delta(d), expected);
}

TEST(EnumeratePointsets, SmallCases) {
  auto a = enumerate_pointsets(2, 1, 0);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0], ps({{0, 0}, {1, 0}}));
  EXPECT_TRUE(enumerate_pointsets(2, 0, 0).empty());
  auto b = enumerate_pointsets(3, 1, 1);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], ps({{0, 0}, {1, 0}, {0, 1}}));
}

TEST(EnumeratePointsets, EachSetOnceWithExactBidegree) {
  for (int n = 1; n <= 4; ++n)
    for (int u = 0; u <= 5; ++u)
      for (int v = 0; v <= 5; ++v) {
        auto all = enumerate_pointsets(n, u, v);
        std::set<PointSet> seen(all.begin(), all.end());
        EXPECT_EQ(seen.size(), all.size());
        for (const auto& d : all) {
          EXPECT_EQ(d.d1(), u);
          EXPECT_EQ(d.d2(), v);
          EXPECT_EQ(d.size(), n);
        }
      }
}

TEST(GradedPiece, Examples) {
  EXPECT_EQ(graded_piece_I_power(2, 1, 1, 0, false).rank(), 1u);
  EXPECT_EQ(graded_piece_I_power(2, 1, 1, 0, true).rank(), 0u);
  EXPECT_EQ(graded_piece_I_power(3, 1, 1, 1, false).rank(), 1u);
  GradedBasis g = graded_piece_I_power(3, 1, 2, 1, false);
  GradedBasis l = graded_piece_I_power(3, 1, 2, 1, true);
  EXPECT_EQ(static_cast<int>(g.rank() - l.rank()), dim_M(3, 1, 2, 1));
}

TEST(DimM, Examples) {
  EXPECT_EQ(dim_M(3, 1, 1, 1), 1);
  EXPECT_EQ(dim_M(2, 1, 1, 0), 1);
  EXPECT_EQ(dim_M(2, 1, 2, 0), 0);
  for (int u = 0; u <= 5; ++u) EXPECT_EQ(dim_M(3, 1, u, 4 - u), 0);
  EXPECT_EQ(dim_M(3, 2, 4, 3), 0);
}

TEST(AcPoly, Examples) {
  QtPoly q = QtPoly::q(), t = QtPoly::t();
  EXPECT_EQ(ac_poly(1, 1), QtPoly::constant(1));
  EXPECT_EQ(ac_poly(1, 2), q + t);
  EXPECT_EQ(ac_poly(1, 3), q.pow(3) + q.pow(2) * t + q * t + q * t.pow(2) + t.pow(3));
}

TEST(AcPoly, MatchesPcForSmallSizes) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}})
    EXPECT_EQ(ac_poly(m, n), pc_poly(m, n)) << "m=" << m << " n=" << n;
}

// Full-polynomial spans with no symmetry reduction; independent of the isotypic machinery.
TEST(BruteForceOracle, DimensionsAgreeForM1) {
  for (int n = 2; n <= 3; ++n) {
    oracle::BruteForce bf(n, 1);
    for (int u = 0; u <= binom2(n) + 1; ++u)
      for (int v = 0; u + v <= binom2(n) + 1; ++v) EXPECT_EQ(bf.dim_M(u, v), dim_M(n, 1, u, v)) << "n=" << n << " (" << u << "," << v << ")";
  }
}

TEST(BruteForceOracle, DimensionsAgreeForN4) {
  oracle::BruteForce bf(4, 1);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{6, 0}, {3, 2}, {2, 2}, {4, 1}, {3, 3}, {5, 1}, {2, 3}})
    EXPECT_EQ(bf.dim_M(u, v), dim_M(4, 1, u, v)) << "(" << u << "," << v << ")";
}

TEST(BruteForceOracle, DimensionsAgreeForM2) {
  oracle::BruteForce bf(3, 2);
  for (int u = 0; u <= 6; ++u)
    for (int v = 0; u + v <= 6; ++v) EXPECT_EQ(bf.dim_M(u, v), dim_M(3, 2, u, v)) << "(" << u << "," << v << ")";
  oracle::BruteForce bf2(2, 2);
  for (int u = 0; u <= 3; ++u)
    for (int v = 0; u + v <= 3; ++v) EXPECT_EQ(bf2.dim_M(u, v), dim_M(2, 2, u, v));
}

TEST(GeneratorModes, MinimalAndFullAgree) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}}) {
    DiagonalModule full(n, m, GeneratorMode::Full);
    DiagonalModule minimal(n, m, GeneratorMode::Minimal);
    for (int d = 0; d <= m * binom2(n) && d <= 8; ++d)
      for (int u = 0; u <= d; ++u) EXPECT_EQ(full.dim_M(u, d - u), minimal.dim_M(u, d - u)) << n << "," << m << " (" << u << "," << d - u << ")";
  }
}

TEST(Isotypic, ExpandRecoversAlternant) {
  IsotypicSpace s(3, Isotype::Sign);
  PointSet d = ps({{0, 0}, {1, 0}, {0, 2}});
  EXPECT_EQ(s.expand(s.alternant(d)), delta(d));
  EXPECT_EQ(s.project(delta(d)), s.alternant(d));
}

TEST(Isotypic, ProductOfAlternantsMatchesPolynomial) {
  IsotypicSpace s(3, Isotype::Trivial);
  PointSet a = ps({{0, 0}, {1, 0}, {0, 1}});
  PointSet b = ps({{0, 0}, {1, 0}, {2, 0}});
  EXPECT_EQ(s.expand(s.product_of_alternants({a, b})), delta(a) * delta(b));
}

TEST(Isotypic, PowerSumMultiplication) {
  IsotypicSpace s(3, Isotype::Sign);
  PointSet d = ps({{0, 0}, {1, 0}, {0, 1}});
  MultiPoly p = x(3, 1) * y(3, 1) + x(3, 2) * y(3, 2) + x(3, 3) * y(3, 3);
  EXPECT_EQ(s.expand(s.times_power_sum(s.alternant(d), Point{1, 1})), p * delta(d));
}

TEST(EquivModLower, Basics) {
  PointSet d = ps({{0, 0}, {1, 0}, {0, 1}});
  MultiPoly f = delta(d);
  EXPECT_TRUE(equiv_mod_lower(f, f, 3));
  // top bidegree (3,0): M is one-dimensional with no lower part
  MultiPoly v = delta(ps({{0, 0}, {1, 0}, {2, 0}}));
  EXPECT_FALSE(equiv_mod_lower(v, v * mpq_class(2), 3));
  EXPECT_THROW(equiv_mod_lower(f, v, 3), std::invalid_argument);
}

TEST(EquivModLower, AgreesWithBruteForce) {
  oracle::BruteForce bf(3, 1);
  // (x_1 + x_2 + x_3) times the Vandermonde lies in the lower part
  MultiPoly v = delta(ps({{0, 0}, {1, 0}, {2, 0}}));
  MultiPoly f = (x(3, 1) + x(3, 2) + x(3, 3)) * v;
  DiagonalModule& mod = module_for(3, 1);
  EXPECT_TRUE(bf.in_lower(f, 4, 0));
  EXPECT_TRUE(mod.in_lower(mod.space().project(f), 4, 0));
  MultiPoly g = delta(ps({{0, 0}, {1, 0}, {3, 0}}));
  EXPECT_EQ(bf.in_lower(g, 4, 0), mod.in_lower(mod.space().project(g), 4, 0));
  for_each_pointset(3, 2, 1, [&](const PointSet& a) {
    for_each_pointset(3, 2, 1, [&](const PointSet& b) {
      MultiPoly diff = delta(a) - delta(b);
      if (diff.is_zero()) return;
      EXPECT_EQ(equiv_mod_lower(delta(a), delta(b), 3), bf.in_lower(diff, 2, 1)) << a.to_string() << " " << b.to_string();
    });
  });
}

TEST(Transfactor, Example) {
  PointSet d = ps({{0, 0}, {0, 1}, {1, 1}});
  auto pairs = transfactor_pairs(d);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0], std::make_pair(2, 3));
  PointSet e = transfactor_move(d, 2, 3);
  EXPECT_EQ(e, ps({{0, 0}, {1, 0}, {0, 2}}));
  EXPECT_TRUE(equiv_mod_lower(delta(d), delta(e), 3));
  // the reverse move undoes it
  auto back = transfactor_pairs(e);
  ASSERT_FALSE(back.empty());
  bool found = false;
  for (auto [i, j] : back) found |= transfactor_move(e, i, j) == d;
  EXPECT_TRUE(found);
}

TEST(Transfactor, RejectsInvalidMoves) {
  PointSet d = ps({{0, 0}, {1, 0}, {2, 0}});  // every b_i = 0
  EXPECT_TRUE(transfactor_pairs(d).empty());
  EXPECT_THROW(transfactor_move(d, 2, 3), std::invalid_argument);
  EXPECT_FALSE(transfactor_applicable(d, 0, 1));
  EXPECT_FALSE(transfactor_applicable(d, 2, 2));
}

TEST(Transfactor, AllInstancesUpToN4) {
  for (int n = 2; n <= 4; ++n)
    for (int deg = 0; deg <= binom2(n); ++deg)
      for (int u = 0; u <= deg; ++u)
        for_each_pointset(n, u, deg - u, [&](const PointSet& d) {
          for (auto [i, j] : transfactor_pairs(d))
            EXPECT_TRUE(equiv_mod_lower(delta(d), delta(transfactor_move(d, i, j)), n)) << d.to_string() << " " << i << "," << j;
        });
}

TEST(Transfactor, SeededRandomN5) {
  CheckOutcome o = transfactor_random_check(5, 60, 20240611);
  EXPECT_TRUE(o.pass);
  EXPECT_EQ(o.cases, 60u);
  CheckOutcome again = transfactor_random_check(5, 60, 20240611);
  EXPECT_EQ(again.cases, o.cases);
}

TEST(GeneratorSpan, Data) {
  DyckPath full({2, 2}, 1, 2);
  auto ds = generator_span_data(full);
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0], ps({{0, 0}, {1, 0}}));
  int count = 0;
  for_each_dyck_path(1, 3, [&](const DyckPath& pi) {
    ++count;
    EXPECT_EQ(generator_span_data(pi).size(), 1u);
  });
  EXPECT_EQ(count, 5);
}

TEST(GeneratorSpan, M1ConditionDegenerates) {
  // for m = 1 the b-condition reads l <= a <= l + 1
  for_each_dyck_path(1, 4, [](const DyckPath& pi) {
    Partition lam = path_to_partition(pi);
    std::vector<int> b(4, 0);
    for_each_cell(lam, [&](Cell c) {
      ArmLeg s = arm_leg(lam, c);
      if (s.leg <= s.arm && s.arm <= s.leg + 1) ++b[static_cast<std::size_t>(c.coarm)];
    });
    auto pts = generator_span_points(pi)[0];
    for (int c = 0; c < 4; ++c) EXPECT_EQ(pts[static_cast<std::size_t>(c)].b, b[static_cast<std::size_t>(c)]);
  });
}

TEST(GeneratorSpan, SmallCases) {
  EXPECT_TRUE(generator_span_check(1, 2).pass);
  EXPECT_TRUE(generator_span_check(1, 3).pass);
  EXPECT_TRUE(generator_span_check(2, 2).pass);
}
