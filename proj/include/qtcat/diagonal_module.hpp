// Bigraded pieces of I^m and m I^m, and dim M^(m)_{u,v} with M^(m) = I^m / m I^m.
//
// Products of m alternants transform by chi = sgn^m, and every element f of I^m
// satisfies f - A_chi(f) in m I^m (A_chi the chi-projection). Hence M^(m) is
// chi-isotypic and
//   dim M^(m)_{u,v} = dim (I^m)^chi_{u,v} - dim (m I^m)^chi_{u,v}.
// The chi-parts are computed in isotypic coordinates:
//   (m I^m)^chi_{u,v} = sum_e p_e (I^m)^chi_{(u,v)-e},   p_e polarized power sums, 1 <= |e| <= n,
//   (I^m)^chi_{u,v}   = (m I^m)^chi_{u,v} + span of generator products of bidegree (u,v).
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtcat/isotypic.hpp"
#include "qtcat/partition.hpp"
#include "qtcat/point_set.hpp"
#include "qtcat/qt_poly.hpp"
#include "qtcat/sparse_rank.hpp"

namespace qtcat {

/// Which alternants enter the generator products for m >= 2.
///   Minimal: the m = 1 quotient basis representatives (a minimal generating set of I).
///   Full:    every D with k(D) >= 0.
enum class GeneratorMode { Minimal, Full };

using Factors = std::vector<PointSet>;

struct GradedBasis {
  int d1 = 0;
  int d2 = 0;
  std::vector<SparseRow> rows;
  std::size_t rank() const noexcept { return rows.size(); }
};

class DiagonalModule {
 public:
  DiagonalModule(int n, int m, GeneratorMode mode = GeneratorMode::Minimal)
      : n_(n), m_(m), mode_(mode), space_(n, isotype_for_power(m)) {
    if (n < 1 || m < 1) throw std::invalid_argument("DiagonalModule: n and m must be positive");
    if (m > 1) base_ = std::make_unique<DiagonalModule>(n, 1);
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  IsotypicSpace& space() noexcept { return space_; }
  DiagonalModule& base() { return m_ == 1 ? *this : *base_; }

  /// Echelon basis of (m I^m)^chi_{u,v}.
  const SparseEchelon& lower(int u, int v) {
    std::lock_guard lock(mu_);
    return piece(u, v).lower;
  }

  /// Rows spanning (I^m)^chi_{u,v}.
  std::vector<SparseRow> ideal_rows(int u, int v) {
    std::lock_guard lock(mu_);
    return ideal_rows_locked(u, v);
  }

  /// Factor tuples whose products give a basis of M^(m)_{u,v}.
  const std::vector<Factors>& quotient_basis(int u, int v) {
    std::lock_guard lock(mu_);
    return piece(u, v).gens;
  }

  int dim_M(int u, int v) { return static_cast<int>(quotient_basis(u, v).size()); }

  std::size_t dim_ideal(int u, int v) {
    std::lock_guard lock(mu_);
    Piece& p = piece(u, v);
    return p.lower.rank() + p.gens.size();
  }

  /// Isotypic coordinates of prod Delta(D_f).
  IsoVec coords(const Factors& f) { return space_.product_of_alternants(f); }

  /// Whether v (coordinates of bidegree (u,v)) lies in (m I^m)^chi.
  bool in_lower(const IsoVec& vec, int u, int v) { return lower(u, v).contains(to_row(vec)); }

  /// Rank in M^(m)_{u,v} of the classes of the given chi-vectors.
  std::size_t quotient_rank(int u, int v, const std::vector<IsoVec>& vecs) {
    SparseEchelon e = lower(u, v);
    std::size_t r = 0;
    for (const auto& x : vecs)
      if (e.insert(to_row(x))) ++r;
    return r;
  }

  /// Whether every class of `sub` lies in the span of the classes of `sup`.
  bool quotient_contains(int u, int v, const std::vector<IsoVec>& sup, const std::vector<IsoVec>& sub) {
    SparseEchelon e = lower(u, v);
    for (const auto& x : sup) e.insert(to_row(x));
    for (const auto& x : sub)
      if (!e.contains(to_row(x))) return false;
    return true;
  }

  GradedBasis graded_piece(int u, int v, bool lower_only) {
    std::lock_guard lock(mu_);
    Piece& p = piece(u, v);
    GradedBasis g{u, v, p.lower.rows()};
    if (!lower_only) {
      SparseEchelon e = p.lower;
      for (const auto& f : p.gens) e.insert(to_row(gen_coords(f)));
      g.rows = e.rows();
    }
    return g;
  }

 private:
  struct Piece {
    SparseEchelon lower;
    std::vector<Factors> gens;
    std::vector<IsoVec> gen_vecs;
  };

  IsoVec gen_coords(const Factors& f) {
    if (m_ == 1) return space_.alternant(f.front());
    return space_.product_of_alternants(f);
  }

  std::vector<SparseRow> ideal_rows_locked(int u, int v) {
    std::vector<SparseRow> rows;
    if (u < 0 || v < 0) return rows;
    if (m_ == 1) {
      for_each_pointset(n_, u, v, [&](const PointSet& d) { rows.push_back(to_row(space_.alternant(d))); });
      return rows;
    }
    Piece& p = piece(u, v);
    rows = p.lower.rows();
    for (const auto& g : p.gen_vecs) rows.push_back(to_row(g));
    return rows;
  }

  Piece& piece(int u, int v) {
    auto key = std::make_pair(u, v);
    if (auto it = pieces_.find(key); it != pieces_.end()) return it->second;
    Piece p;
    for (int h = 0; h <= std::min(u, n_); ++h)
      for (int k = 0; k <= std::min(v, n_ - h); ++k) {
        if (h + k == 0) continue;
        for (const auto& row : ideal_rows_locked(u - h, v - k)) {
          IsoVec f(row.begin(), row.end());
          p.lower.insert(to_row(space_.times_power_sum(f, Point{h, k})));
        }
      }
    SparseEchelon full = p.lower;
    for (const auto& cand : candidates(u, v)) {
      IsoVec c = gen_coords(cand);
      if (full.insert(to_row(c))) {
        p.gens.push_back(cand);
        p.gen_vecs.push_back(std::move(c));
      }
    }
    return pieces_.emplace(key, std::move(p)).first->second;
  }

  /// Candidate generator tuples of bidegree (u,v), as nondecreasing multisets.
  std::vector<Factors> candidates(int u, int v) {
    std::vector<Factors> out;
    if (m_ == 1) {
      for_each_pointset(n_, u, v, [&](const PointSet& d) { out.push_back({d}); });
      return out;
    }
    const auto& items = generator_items();
    Factors cur;
    // items are sorted by bidegree then point set; choose indices nondecreasing
    auto rec = [&](auto&& self, std::size_t from, int ru, int rv, int left) -> void {
      if (left == 0) {
        if (ru == 0 && rv == 0) out.push_back(cur);
        return;
      }
      for (std::size_t i = from; i < items.size(); ++i) {
        const PointSet& d = items[i];
        const int a = d.d1(), b = d.d2();
        if (a > ru || b > rv) continue;
        // the remaining factors have total degree at least this one's
        if ((a + b) * left > ru + rv) break;
        cur.push_back(d);
        self(self, i, ru - a, rv - b, left - 1);
        cur.pop_back();
      }
    };
    rec(rec, 0, u, v, m_);
    return out;
  }

  const std::vector<PointSet>& generator_items() {
    if (items_ready_) return items_;
    const int top = binom2(n_);
    for (int deg = 0; deg <= top; ++deg)
      for (int a = 0; a <= deg; ++a) {
        if (mode_ == GeneratorMode::Minimal) {
          for (const auto& f : base_->quotient_basis(a, deg - a)) items_.push_back(f.front());
        } else {
          for_each_pointset(n_, a, deg - a, [&](const PointSet& d) { items_.push_back(d); });
        }
      }
    // sorted by total degree, which the pruning in candidates() relies on
    items_ready_ = true;
    return items_;
  }

  int n_;
  int m_;
  GeneratorMode mode_;
  IsotypicSpace space_;
  std::unique_ptr<DiagonalModule> base_;
  std::recursive_mutex mu_;
  std::map<std::pair<int, int>, Piece> pieces_;
  std::vector<PointSet> items_;
  bool items_ready_ = false;
};

/// Process-wide modules keyed by (n, m).
inline DiagonalModule& module_for(int n, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<DiagonalModule>> modules;
  std::lock_guard lock(mu);
  auto& slot = modules[{n, m}];
  if (!slot) slot = std::make_unique<DiagonalModule>(n, m);
  return *slot;
}

inline GradedBasis graded_piece_I_power(int n, int m, int d1, int d2, bool lower_only) {
  return module_for(n, m).graded_piece(d1, d2, lower_only);
}

inline int dim_M(int n, int m, int d1, int d2) { return module_for(n, m).dim_M(d1, d2); }

/// AC_n^(m)(q,t), iterating total degree upward until the dimensions add up to
/// the higher Catalan number.
inline QtPoly ac_poly(int m, int n) {
  const mpz_class target = higher_catalan(m, n);
  const int cap = m * binom2(n);
  DiagonalModule& mod = module_for(n, m);
  QtPoly out;
  mpz_class total = 0;
  for (int d = 0; d <= cap && total < target; ++d)
    for (int u = 0; u <= d; ++u) {
      int dim = mod.dim_M(u, d - u);
      if (dim) out.add_term(u, d - u, dim);
      total += dim;
    }
  if (total != target)
    throw std::logic_error("ac_poly: dimensions sum to " + total.get_str() + ", expected " + target.get_str());
  return out;
}

/// f == g modulo lower degrees, for bihomogeneous f, g in I of equal bidegree.
inline bool equiv_mod_lower(const MultiPoly& f, const MultiPoly& g, int n) {
  if (f.nvars() != n || g.nvars() != n) throw std::invalid_argument("equiv_mod_lower: variable count mismatch");
  MultiPoly diff = f - g;
  if (diff.is_zero()) return true;
  auto bf = f.is_zero() ? g.bidegree() : f.bidegree();
  auto bg = g.is_zero() ? f.bidegree() : g.bidegree();
  if (bf != bg || bf.first < 0 || diff.bidegree() != bf) throw std::invalid_argument("equiv_mod_lower: bidegree mismatch");
  DiagonalModule& mod = module_for(n, 1);
  return mod.in_lower(mod.space().project(diff), bf.first, bf.second);
}

}  // namespace qtcat
