// Point-set moves and finite checks built on the diagonal module: transfactor
// moves, grafting, N-subspaces of M^(2), block counts, and Dyck-path generators.
#pragma once

#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtcat/diagonal_module.hpp"
#include "qtcat/dyck.hpp"
#include "qtcat/partition.hpp"
#include "qtcat/point_set.hpp"
#include "qtcat/staircase.hpp"

namespace qtcat {

namespace detail {
inline int level_or_n(const PointSet& d, int i) { return i > d.size() ? d.size() : d.P(i).level(); }
}  // namespace detail

inline bool transfactor_applicable(const PointSet& d, int i, int j) {
  const int n = d.size();
  if (i < 1 || j < 1 || i > n || j > n || i == j) return false;
  auto lv = [&](int r) { return detail::level_or_n(d, r); };
  if (lv(i) != i - 1 || lv(i + 1) != i || lv(j) != j - 1 || lv(j + 1) != j) return false;
  if (d.P(i).b == 0 || d.P(j).a == 0) return false;
  std::vector<Point> pts = d.points();
  pts[static_cast<std::size_t>(i - 1)] = d.P(i) + Point{1, -1};
  pts[static_cast<std::size_t>(j - 1)] = d.P(j) + Point{-1, 1};
  return sort_with_sign(pts) != 0;
}

/// P_i moves by (1,-1) and P_j by (-1,1).
inline PointSet transfactor_move(const PointSet& d, int i, int j) {
  if (!transfactor_applicable(d, i, j)) throw std::invalid_argument("transfactor_move: hypotheses not satisfied");
  std::vector<Point> pts = d.points();
  auto& pi = pts[static_cast<std::size_t>(i - 1)];
  auto& pj = pts[static_cast<std::size_t>(j - 1)];
  pi = {pi.a + 1, pi.b - 1};
  pj = {pj.a - 1, pj.b + 1};
  return PointSet(std::move(pts));
}

/// Every valid (i, j) for D.
inline std::vector<std::pair<int, int>> transfactor_pairs(const PointSet& d) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= d.size(); ++i)
    for (int j = 1; j <= d.size(); ++j)
      if (transfactor_applicable(d, i, j)) out.emplace_back(i, j);
  return out;
}

struct GraftResult {
  PointSet d1;
  PointSet d2;
  int sign = 1;  // sign of sorting the two grafted lists into grlex order
};

/// D1' = {P_1..P_{r-1}, Q_r..Q_n}, D2' = {Q_1..Q_{r-1}, P_r..P_n}.
inline GraftResult graft(const PointSet& d1, const PointSet& d2, int r) {
  const int n = d1.size();
  if (d2.size() != n || r < 1 || r > n) throw std::invalid_argument("graft: size mismatch or r out of range");
  if (d1.P(r).level() != r - 1 || d2.P(r).level() != r - 1) throw std::invalid_argument("graft: need |P_r| = |Q_r| = r-1");
  std::vector<Point> a, b;
  for (int i = 1; i <= n; ++i) {
    a.push_back(i < r ? d1.P(i) : d2.P(i));
    b.push_back(i < r ? d2.P(i) : d1.P(i));
  }
  int s = sort_with_sign(a) * sort_with_sign(b);
  if (s == 0) throw std::invalid_argument("graft: grafted lists repeat a point");
  return {PointSet(std::move(a)), PointSet(std::move(b)), s};
}

/// Delta(D1) Delta(D2) == Delta(D1') Delta(D2') modulo m I^2.
inline bool grafting_check(const PointSet& d1, const PointSet& d2, int r) {
  GraftResult g = graft(d1, d2, r);
  DiagonalModule& mod = module_for(d1.size(), 2);
  IsoVec lhs = mod.coords({d1, d2});
  IsoVec rhs = mod.coords({g.d1, g.d2});
  for (auto& [c, v] : rhs) lhs[c] -= g.sign * v;
  std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
  if (lhs.empty()) return true;
  return mod.in_lower(lhs, d1.d1() + d2.d1(), d1.d2() + d2.d2());
}

/// Exact identity det(S1) det(S2) = det(S1') det(S2') after swapping the
/// columns r..n of two staircase forms given by column words.
inline bool staircase_graft_exact(const std::vector<std::string>& w1, const std::vector<std::string>& w2, int r) {
  if (w1.size() != w2.size()) throw std::invalid_argument("staircase_graft_exact: size mismatch");
  std::vector<std::string> a = w1, b = w2;
  for (std::size_t j = static_cast<std::size_t>(r - 1); j < w1.size(); ++j) std::swap(a[j], b[j]);
  auto det = [](const std::vector<std::string>& w) { return staircase_det(StaircaseForm::from_column_words(w)); };
  return det(w1) * det(w2) == det(a) * det(b);
}

struct NSubspace {
  std::pair<int, int> m_bidegree;
  std::pair<int, int> f_bidegree;
  std::vector<IsoVec> vectors;  // products Delta(B) f, B over a basis of M at m_bidegree
  std::size_t dim = 0;          // rank modulo m I^2
};

/// The factor bidegrees of N_{d1,d2}. In the third case, when the stated f
/// index would be negative, the x/y mirror of that case is used.
inline std::pair<std::pair<int, int>, std::pair<int, int>> n_subspace_factors(int n, int d1, int d2, int k) {
  const int c = binom2(n);
  if (k < 0 || k > n - 4 || d1 < 0 || d2 < 0 || d1 + d2 + k != 2 * c)
    throw std::invalid_argument("n_subspace: need 0 <= k <= n-4 and d1 + d2 + k = 2 C(n,2)");
  if (d2 <= k) return {{d1 - c, d2}, {c, 0}};
  if (d1 <= k) return {{d1, d2 - c}, {0, c}};
  if (c - d2 + k >= 0) return {{d1 + d2 - c - k, k}, {c - d2 + k, d2 - k}};
  return {{k, d1 + d2 - c - k}, {d1 - k, c - d1 + k}};
}

/// Products M_{a,b} f_{c,d} of the form M_{d1',d2'} f_{d1-d1',d2-d2'} inside M^(2)_{d1+..,..}.
inline std::vector<IsoVec> product_with_f(int n, std::pair<int, int> mb, std::pair<int, int> fb) {
  std::vector<IsoVec> out;
  if (mb.first < 0 || mb.second < 0) return out;
  DiagonalModule& m2 = module_for(n, 2);
  PointSet f = staircase_pointset(n, fb.first, fb.second);
  for (const auto& b : module_for(n, 1).quotient_basis(mb.first, mb.second)) out.push_back(m2.coords({b.front(), f}));
  return out;
}

inline NSubspace n_subspace(int n, int d1, int d2, int k) {
  auto [mb, fb] = n_subspace_factors(n, d1, d2, k);
  NSubspace s{mb, fb, product_with_f(n, mb, fb), 0};
  s.dim = module_for(n, 2).quotient_rank(d1, d2, s.vectors);
  return s;
}

struct CheckOutcome {
  bool pass = true;
  std::size_t cases = 0;
  std::vector<std::string> witnesses;
  void fail(std::string w) {
    pass = false;
    if (witnesses.size() < 20) witnesses.push_back(std::move(w));
  }
};

/// M_{d1',d2'} f_{d1-d1',d2-d2'} lies in N_{d1,d2}, with equality when d1',d2' >= k.
inline CheckOutcome higher_transfactor_check(int n, int k) {
  CheckOutcome out;
  const int c = binom2(n);
  DiagonalModule& m2 = module_for(n, 2);
  for (int d1 = 0; d1 <= 2 * c - k; ++d1) {
    const int d2 = 2 * c - k - d1;
    NSubspace ns = n_subspace(n, d1, d2, k);
    for (int a = 0; a <= d1; ++a) {
      const int b = d1 + d2 - c - a;
      if (b < 0 || b > d2) continue;
      auto vecs = product_with_f(n, {a, b}, {d1 - a, d2 - b});
      ++out.cases;
      std::ostringstream w;
      w << "(d1,d2)=(" << d1 << "," << d2 << ") (d1',d2')=(" << a << "," << b << ")";
      if (!m2.quotient_contains(d1, d2, ns.vectors, vecs)) {
        out.fail(w.str() + " not contained in N");
        continue;
      }
      if (a >= k && b >= k && m2.quotient_rank(d1, d2, vecs) != ns.dim) out.fail(w.str() + " proper subspace of N");
    }
  }
  return out;
}

/// Every staircase form with |P_j| <= j-1 for all j has at least n - 2k(D)
/// blocks of size 1. If some |P_j| >= j, columns j..n live on fewer than
/// n-j+1 rows, so det S = 0 and the count says nothing.
inline CheckOutcome block_count_check(int n) {
  CheckOutcome out;
  const int c = binom2(n);
  for (int deg = 0; deg <= c; ++deg)
    for (int u = 0; u <= deg; ++u)
      for_each_pointset(n, u, deg - u, [&](const PointSet& d) {
        for (int j = 1; j <= n; ++j)
          if (d.P(j).level() >= j) return;
        BlockInfo info = block_diagonal(StaircaseForm::from_pointset(d));
        ++out.cases;
        if (info.singleton_blocks() < n - 2 * d.k()) out.fail(d.to_string());
      });
  return out;
}

/// sum_{i=0}^a p(i, a-i) = p(a).
inline bool partition_sum_identity(int a) {
  std::int64_t s = 0;
  for (int i = 0; i <= a; ++i) s += partition_count(i, a - i);
  return s == partition_count(a);
}

/// The point lists D_1(pi), ..., D_m(pi), in column order (not sorted).
inline std::vector<std::vector<Point>> generator_span_points(const DyckPath& pi) {
  const int m = pi.slope();
  const int n = pi.order();
  const Partition lam = path_to_partition(pi);
  std::vector<int> a(static_cast<std::size_t>(m * n)), b(static_cast<std::size_t>(m * n), 0);
  for (int c = 0; c < m * n; ++c) a[static_cast<std::size_t>(c)] = pi.column_area(c);
  for_each_cell(lam, [&](Cell x) {
    ArmLeg s = arm_leg(lam, x);
    if (m * s.leg <= s.arm && s.arm <= m * (s.leg + 1)) ++b[static_cast<std::size_t>(x.coarm)];
  });
  std::vector<std::vector<Point>> out(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    for (int s = 0; s < n; ++s) {
      auto idx = static_cast<std::size_t>(j + m * s);
      out[static_cast<std::size_t>(j)].push_back({a[idx], b[idx]});
    }
  return out;
}

/// D_j(pi) as point sets; throws std::domain_error when some D_j repeats a point.
inline std::vector<PointSet> generator_span_data(const DyckPath& pi) {
  std::vector<PointSet> out;
  int j = 1;
  for (auto pts : generator_span_points(pi)) {
    std::vector<Point> tmp = pts;
    if (pts.size() > 1 && sort_with_sign(tmp) == 0)
      throw std::domain_error("generator_span_data: D_" + std::to_string(j) + " repeats a point for path " + pi.steps());
    out.emplace_back(std::move(pts));
    ++j;
  }
  return out;
}

/// Whether the products prod_j Delta(D_j(pi)) span M^(m)_{u,v} in every bidegree.
inline CheckOutcome generator_span_check(int m, int n) {
  CheckOutcome out;
  DiagonalModule& mod = module_for(n, m);
  std::map<std::pair<int, int>, std::vector<IsoVec>> by_bidegree;
  for_each_dyck_path(m, n, [&](const DyckPath& pi) {
    try {
      auto ds = generator_span_data(pi);
      int u = 0, v = 0;
      for (const auto& d : ds) {
        u += d.d1();
        v += d.d2();
      }
      by_bidegree[{u, v}].push_back(mod.coords(ds));
    } catch (const std::domain_error& e) {
      out.fail(e.what());
    }
  });
  const int top = m * binom2(n);
  for (int deg = 0; deg <= top; ++deg)
    for (int u = 0; u <= deg; ++u) {
      const int v = deg - u;
      const int dim = mod.dim_M(u, v);
      auto it = by_bidegree.find({u, v});
      const std::size_t rank = it == by_bidegree.end() ? 0 : mod.quotient_rank(u, v, it->second);
      if (dim == 0 && it == by_bidegree.end()) continue;
      ++out.cases;
      if (static_cast<int>(rank) != dim)
        out.fail("bidegree (" + std::to_string(u) + "," + std::to_string(v) + "): rank " + std::to_string(rank) + " < dim " +
                 std::to_string(dim));
    }
  return out;
}

/// Seeded random transfactor instances at the given n; each must satisfy
/// Delta(D) == Delta(D') modulo lower degrees.
inline CheckOutcome transfactor_random_check(int n, int count, std::uint64_t seed) {
  CheckOutcome out;
  std::mt19937_64 rng(seed);
  std::vector<std::pair<PointSet, std::pair<int, int>>> pool;
  const int c = binom2(n);
  for (int deg = 0; deg <= c; ++deg)
    for (int u = 0; u <= deg; ++u)
      for_each_pointset(n, u, deg - u, [&](const PointSet& d) {
        for (auto ij : transfactor_pairs(d)) pool.emplace_back(d, ij);
      });
  if (pool.empty()) return out;
  for (int t = 0; t < count; ++t) {
    const auto& [d, ij] = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    PointSet e = transfactor_move(d, ij.first, ij.second);
    ++out.cases;
    if (!equiv_mod_lower(delta(d), delta(e), n))
      out.fail(d.to_string() + " (i,j)=(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")");
  }
  return out;
}

/// Seeded random grafting instances at the given n.
inline CheckOutcome grafting_random_check(int n, int count, std::uint64_t seed) {
  CheckOutcome out;
  std::mt19937_64 rng(seed);
  std::vector<PointSet> sets;
  const int c = binom2(n);
  for (int deg = 0; deg <= c; ++deg)
    for (int u = 0; u <= deg; ++u)
      for_each_pointset(n, u, deg - u, [&](const PointSet& d) { sets.push_back(d); });
  std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
  int attempts = 0;
  while (static_cast<int>(out.cases) < count && attempts < 100000) {
    ++attempts;
    const PointSet& d1 = sets[pick(rng)];
    const PointSet& d2 = sets[pick(rng)];
    std::vector<int> rs;
    for (int r = 1; r <= n; ++r)
      if (d1.P(r).level() == r - 1 && d2.P(r).level() == r - 1) rs.push_back(r);
    if (rs.empty()) continue;
    const int r = rs[std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(rng)];
    try {
      graft(d1, d2, r);
    } catch (const std::invalid_argument&) {
      continue;
    }
    ++out.cases;
    if (!grafting_check(d1, d2, r)) out.fail(d1.to_string() + " " + d2.to_string() + " r=" + std::to_string(r));
  }
  return out;
}

}  // namespace qtcat
