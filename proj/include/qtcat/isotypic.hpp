// Coordinates for polynomials that transform by a one-dimensional character of
// S_n under the diagonal action.
//
// An alternating polynomial is a combination of alternants Delta(F), F a set of
// n distinct points; its Delta(F)-coordinate is the coefficient of the monomial
// prod_i z_i^{F_i} with F listed in grlex order. An invariant polynomial is a
// combination of orbit sums m_F over multisets F; its m_F-coordinate is the
// coefficient of the same monomial. Either way a vector indexed by sorted point
// lists determines the polynomial, and the coefficient of an arbitrary monomial
// is recovered by sorting its exponent pairs.
#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qtcat/multipoly.hpp"
#include "qtcat/point_set.hpp"
#include "qtcat/sparse_rank.hpp"

namespace qtcat {

enum class Isotype { Trivial, Sign };

/// Character of products of m alternants.
constexpr Isotype isotype_for_power(int m) { return m % 2 == 0 ? Isotype::Trivial : Isotype::Sign; }

using PointList = std::vector<Point>;

struct PointListLess {
  bool operator()(const PointList& x, const PointList& y) const {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), [](const Point& p, const Point& q) {
      return p.a != q.a ? p.a < q.a : p.b < q.b;
    });
  }
};

/// Interns sorted point lists as dense column ids. Thread-safe.
class RepIndex {
 public:
  int id(const PointList& rep) {
    std::lock_guard lock(mu_);
    auto [it, inserted] = ids_.try_emplace(rep, static_cast<int>(reps_.size()));
    if (inserted) reps_.push_back(rep);
    return it->second;
  }
  /// -1 when unseen.
  int find(const PointList& rep) const {
    std::lock_guard lock(mu_);
    auto it = ids_.find(rep);
    return it == ids_.end() ? -1 : it->second;
  }
  PointList rep(int id) const {
    std::lock_guard lock(mu_);
    return reps_.at(static_cast<std::size_t>(id));
  }
  std::size_t size() const {
    std::lock_guard lock(mu_);
    return reps_.size();
  }

 private:
  mutable std::mutex mu_;
  std::map<PointList, int, PointListLess> ids_;
  std::vector<PointList> reps_;
};

inline mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

/// Product of the factorials of the multiplicities in a sorted list.
inline mpz_class stabilizer_order(const PointList& sorted) {
  mpz_class s = 1;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
      ++run;
    } else {
      s *= factorial(static_cast<int>(run));
      run = 1;
    }
  }
  return s;
}

inline void sort_points(PointList& pts) {
  std::sort(pts.begin(), pts.end(), grlex_less);
}

inline PointList monomial_points(const Monomial& mo) {
  PointList pts(mo.size() / 2);
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = {mo[2 * i], mo[2 * i + 1]};
  return pts;
}

/// Sparse vector of isotypic coordinates, keyed by RepIndex ids.
using IsoVec = std::map<int, mpq_class>;

inline SparseRow to_row(const IsoVec& v) { return to_sparse_row(v); }

class IsotypicSpace {
 public:
  IsotypicSpace(int n, Isotype type) : n_(n), type_(type) {}

  int n() const noexcept { return n_; }
  Isotype type() const noexcept { return type_; }
  RepIndex& index() noexcept { return index_; }
  const RepIndex& index() const noexcept { return index_; }

  /// Coordinate vector of a single alternant Delta(D) (Sign spaces only).
  IsoVec alternant(const PointSet& d) {
    if (type_ != Isotype::Sign) throw std::logic_error("alternant: space is not alternating");
    return IsoVec{{index_.id(d.points()), mpq_class(1)}};
  }

  /// Coefficient of the monomial prod_i z_i^{pts_i} in the polynomial with coordinates v.
  mpq_class monomial_coeff(const IsoVec& v, PointList pts) const {
    int sign = 1;
    if (type_ == Isotype::Sign) {
      sign = sort_with_sign(pts);
      if (sign == 0) return 0;
    } else {
      sort_points(pts);
    }
    int id = index_.find(pts);
    if (id < 0) return 0;
    auto it = v.find(id);
    return it == v.end() ? mpq_class(0) : mpq_class(sign * it->second);
  }

  /// Coordinates of prod_f Delta(D_f); requires sgn^{factors.size()} to match this space.
  IsoVec product_of_alternants(const std::vector<PointSet>& factors) {
    const int m = static_cast<int>(factors.size());
    if (m < 1) throw std::invalid_argument("product_of_alternants: need at least one factor");
    if (isotype_for_power(m) != type_) throw std::logic_error("product_of_alternants: isotype mismatch");
    for (const auto& f : factors)
      if (f.size() != n_) throw std::invalid_argument("product_of_alternants: point count mismatch");
    IsoVec out;
    // E_j = sum_f P^f_{rho_f(j)} with rho_1 = id; the sum over the remaining
    // rho's collects one orbit contribution per tuple.
    std::vector<std::vector<int>> perms;
    std::vector<int> signs;
    for_each_permutation(n_, [&](const std::vector<int>& p, int s) {
      perms.push_back(p);
      signs.push_back(s);
    });
    std::vector<std::size_t> choice(static_cast<std::size_t>(m), 0);
    PointList e(static_cast<std::size_t>(n_));
    while (true) {
      int sign = 1;
      for (int j = 0; j < n_; ++j) e[static_cast<std::size_t>(j)] = factors[0].points()[static_cast<std::size_t>(j)];
      for (int f = 1; f < m; ++f) {
        const auto& perm = perms[choice[static_cast<std::size_t>(f)]];
        sign *= signs[choice[static_cast<std::size_t>(f)]];
        for (int j = 0; j < n_; ++j)
          e[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(j)] +
                                           factors[static_cast<std::size_t>(f)].points()[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
      }
      PointList sorted = e;
      if (type_ == Isotype::Sign) {
        int s = sort_with_sign(sorted);
        if (s != 0) accumulate(out, index_.id(sorted), mpq_class(sign * s));
      } else {
        sort_points(sorted);
        accumulate(out, index_.id(sorted), mpq_class(sign * stabilizer_order(sorted)));
      }
      // advance the mixed-radix counter over rho_2..rho_m
      int f = m - 1;
      while (f >= 1) {
        if (++choice[static_cast<std::size_t>(f)] < perms.size()) break;
        choice[static_cast<std::size_t>(f)] = 0;
        --f;
      }
      if (f < 1) break;
    }
    return out;
  }

  /// Coordinates of the projection (1/n!) sum_w chi(w) w.f onto this isotype.
  IsoVec project(const MultiPoly& f) {
    if (f.nvars() != n_) throw std::invalid_argument("project: variable count mismatch");
    IsoVec out;
    const mpq_class inv_fact = mpq_class(1) / mpq_class(factorial(n_));
    for (const auto& [mo, c] : f.terms()) {
      PointList pts = monomial_points(mo);
      if (type_ == Isotype::Sign) {
        int s = sort_with_sign(pts);
        if (s == 0) continue;
        accumulate(out, index_.id(pts), c * s * inv_fact);
      } else {
        sort_points(pts);
        accumulate(out, index_.id(pts), c * mpq_class(stabilizer_order(pts)) * inv_fact);
      }
    }
    return out;
  }

  /// Coordinates of p_e * f, p_e = sum_i x_i^{e.a} y_i^{e.b}:
  /// (p_e f)[F] = sum_i f[F - e at slot i].
  IsoVec times_power_sum(const IsoVec& f, Point e) {
    std::map<PointList, bool, PointListLess> targets;
    for (const auto& [id, c] : f) {
      PointList g = index_.rep(id);
      for (int i = 0; i < n_; ++i) {
        PointList h = g;
        h[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i)] + e;
        if (type_ == Isotype::Sign) {
          if (sort_with_sign(h) == 0) continue;
        } else {
          sort_points(h);
        }
        targets.emplace(std::move(h), true);
      }
    }
    IsoVec out;
    for (const auto& [fr, unused] : targets) {
      mpq_class s = 0;
      for (int i = 0; i < n_; ++i) {
        PointList g = fr;
        Point& slot = g[static_cast<std::size_t>(i)];
        if (slot.a < e.a || slot.b < e.b) continue;
        slot = {slot.a - e.a, slot.b - e.b};
        s += monomial_coeff(f, std::move(g));
      }
      if (s != 0) out.emplace(index_.id(fr), s);
    }
    return out;
  }

  /// Expands coordinates back into a polynomial (for cross-checks at small n).
  MultiPoly expand(const IsoVec& v) const {
    MultiPoly p(n_);
    for (const auto& [id, c] : v) {
      PointList rep = index_.rep(id);
      PointList seen_guard;
      std::vector<int> perm(static_cast<std::size_t>(n_));
      std::map<Monomial, bool> done;
      for_each_permutation(n_, [&](const std::vector<int>& pr, int s) {
        Monomial mo(static_cast<std::size_t>(2 * n_));
        for (int i = 0; i < n_; ++i) {
          const Point& pt = rep[static_cast<std::size_t>(pr[static_cast<std::size_t>(i)])];
          mo[static_cast<std::size_t>(2 * i)] = static_cast<std::uint8_t>(pt.a);
          mo[static_cast<std::size_t>(2 * i + 1)] = static_cast<std::uint8_t>(pt.b);
        }
        if (type_ == Isotype::Sign) {
          p.add_term(mo, c * s);
        } else if (done.emplace(mo, true).second) {
          p.add_term(mo, c);
        }
      });
    }
    return p;
  }

 private:
  static void accumulate(IsoVec& v, int id, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = v.try_emplace(id, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) v.erase(it);
    }
  }

  int n_;
  Isotype type_;
  RepIndex index_;
};

}  // namespace qtcat
