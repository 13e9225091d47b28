// Lattice point sets D in N x N and their alternants Delta(D) = det[x_i^{a_j} y_i^{b_j}].
#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtcat/multipoly.hpp"
#include "qtcat/partition.hpp"

namespace qtcat {

struct Point {
  int a = 0;
  int b = 0;
  int level() const noexcept { return a + b; }
  friend bool operator==(const Point&, const Point&) = default;
  Point operator+(const Point& o) const noexcept { return {a + o.a, b + o.b}; }
};

/// Graded lexicographic order: total degree first, then smaller x-exponent.
inline bool grlex_less(const Point& p, const Point& q) {
  if (p.level() != q.level()) return p.level() < q.level();
  return p.a < q.a;
}

/// Sorts in place into grlex order and returns the sign of the sorting
/// permutation, or 0 when two entries coincide.
inline int sort_with_sign(std::vector<Point>& pts) {
  int sign = 1;
  // insertion sort keeps the parity bookkeeping trivial; lists are short
  for (std::size_t i = 1; i < pts.size(); ++i) {
    for (std::size_t j = i; j > 0; --j) {
      if (pts[j] == pts[j - 1]) return 0;
      if (grlex_less(pts[j], pts[j - 1])) {
        std::swap(pts[j], pts[j - 1]);
        sign = -sign;
      } else {
        break;
      }
    }
  }
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i] == pts[i - 1]) return 0;
  return sign;
}

/// n distinct points listed in increasing grlex order (P_1 < ... < P_n).
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
    for (const auto& p : pts_)
      if (p.a < 0 || p.b < 0) throw std::invalid_argument("PointSet: coordinates must be nonnegative");
    if (sort_with_sign(pts_) == 0 && pts_.size() > 1) throw std::invalid_argument("PointSet: duplicate points");
  }

  const std::vector<Point>& points() const noexcept { return pts_; }
  int size() const noexcept { return static_cast<int>(pts_.size()); }
  /// 1-based access matching P_1..P_n.
  const Point& P(int i) const { return pts_.at(static_cast<std::size_t>(i - 1)); }

  int d1() const noexcept {
    int s = 0;
    for (const auto& p : pts_) s += p.a;
    return s;
  }
  int d2() const noexcept {
    int s = 0;
    for (const auto& p : pts_) s += p.b;
    return s;
  }
  int total_degree() const noexcept { return d1() + d2(); }
  /// k(D) = C(n,2) - d1 - d2.
  int k() const noexcept { return binom2(size()) - d1() - d2(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend bool operator<(const PointSet& x, const PointSet& y) {
    return std::lexicographical_compare(x.pts_.begin(), x.pts_.end(), y.pts_.begin(), y.pts_.end(),
                                        [](const Point& p, const Point& q) {
                                          return p.a != q.a ? p.a < q.a : p.b < q.b;
                                        });
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < pts_.size(); ++i)
      s += (i ? "," : "") + std::string("(") + std::to_string(pts_[i].a) + "," + std::to_string(pts_[i].b) + ")";
    return s + "}";
  }

 private:
  std::vector<Point> pts_;
};

inline nlohmann::json to_json(const PointSet& d) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : d.points()) arr.push_back({p.a, p.b});
  return arr;
}

inline PointSet pointset_from_json(const nlohmann::json& j) {
  std::vector<Point> pts;
  for (const auto& e : j) pts.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return PointSet(std::move(pts));
}

/// Every D in the n-point family with bidegree exactly (d1, d2), each once,
/// in lexicographic order of their grlex-sorted point lists.
template <typename F>
void for_each_pointset(int n, int d1, int d2, F&& visit) {
  if (n < 1 || d1 < 0 || d2 < 0) return;
  std::vector<Point> cur;
  std::function<void(int, int)> rec = [&](int rx, int ry) {
    const int placed = static_cast<int>(cur.size());
    if (placed == n) {
      if (rx == 0 && ry == 0) visit(PointSet(cur));
      return;
    }
    const int left = n - placed;
    const int start_level = cur.empty() ? 0 : cur.back().level();
    for (int lev = start_level; lev <= rx + ry; ++lev) {
      // every remaining point sits at level >= lev
      if (lev * left > rx + ry) break;
      for (int a = 0; a <= lev; ++a) {
        Point p{a, lev - a};
        if (!cur.empty() && !grlex_less(cur.back(), p)) continue;
        if (p.a > rx || p.b > ry) continue;
        cur.push_back(p);
        rec(rx - p.a, ry - p.b);
        cur.pop_back();
      }
    }
  };
  rec(d1, d2);
}

inline std::vector<PointSet> enumerate_pointsets(int n, int d1, int d2) {
  std::vector<PointSet> out;
  for_each_pointset(n, d1, d2, [&](const PointSet& d) { out.push_back(d); });
  return out;
}

inline int permutation_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

/// Calls f(perm, sign) for every permutation of {0..n-1}.
template <typename F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    f(perm, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

/// Leibniz expansion; its n! monomials are pairwise distinct, so nothing cancels.
inline MultiPoly delta(const PointSet& d) {
  const int n = d.size();
  MultiPoly p(n);
  Monomial mo(static_cast<std::size_t>(2 * n));
  for_each_permutation(n, [&](const std::vector<int>& perm, int sign) {
    for (int i = 0; i < n; ++i) {
      const Point& pt = d.points()[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      mo[static_cast<std::size_t>(2 * i)] = static_cast<std::uint8_t>(pt.a);
      mo[static_cast<std::size_t>(2 * i + 1)] = static_cast<std::uint8_t>(pt.b);
    }
    p.add_term(mo, sign);
  });
  return p;
}

}  // namespace qtcat
