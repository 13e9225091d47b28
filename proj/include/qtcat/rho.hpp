// Polynomials in rho_1, rho_2, ... graded by weight, and the map phi from
// point sets to them.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "qtcat/diagonal_module.hpp"
#include "qtcat/isotypic.hpp"
#include "qtcat/lemmas.hpp"
#include "qtcat/point_set.hpp"
#include "qtcat/sparse_rank.hpp"

namespace qtcat {

/// Monomials are ascending index multisets; rho_0 = 1 is never stored.
class RhoPoly {
 public:
  using Key = std::vector<int>;

  static RhoPoly constant(const mpz_class& c) {
    RhoPoly p;
    p.add_term({}, c);
    return p;
  }

  void add_term(Key nu, const mpz_class& c) {
    if (c == 0) return;
    for (int i : nu)
      if (i < 1) throw std::invalid_argument("RhoPoly: indices must be positive");
    std::sort(nu.begin(), nu.end());
    auto [it, inserted] = terms_.try_emplace(std::move(nu), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<Key, mpz_class>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpz_class coeff(Key nu) const {
    std::sort(nu.begin(), nu.end());
    auto it = terms_.find(nu);
    return it == terms_.end() ? mpz_class(0) : it->second;
  }

  static int weight_of(const Key& nu) {
    int w = 0;
    for (int i : nu) w += i;
    return w;
  }

  /// {f}_w.
  RhoPoly weight_part(int w) const {
    RhoPoly r;
    for (const auto& [k, c] : terms_)
      if (weight_of(k) == w) r.terms_.emplace(k, c);
    return r;
  }

  /// Common weight of all terms, or -1 when zero or inhomogeneous.
  int homogeneous_weight() const {
    if (terms_.empty()) return -1;
    int w = weight_of(terms_.begin()->first);
    for (const auto& [k, c] : terms_)
      if (weight_of(k) != w) return -1;
    return w;
  }

  RhoPoly& operator+=(const RhoPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  RhoPoly& operator-=(const RhoPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  RhoPoly& operator*=(const mpz_class& s) {
    if (s == 0) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend RhoPoly operator+(RhoPoly a, const RhoPoly& b) { return a += b; }
  friend RhoPoly operator-(RhoPoly a, const RhoPoly& b) { return a -= b; }
  friend RhoPoly operator*(RhoPoly a, const mpz_class& s) { return a *= s; }
  friend RhoPoly operator*(const RhoPoly& a, const RhoPoly& b) {
    RhoPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        Key k = ka;
        k.insert(k.end(), kb.begin(), kb.end());
        r.add_term(std::move(k), ca * cb);
      }
    return r;
  }
  friend bool operator==(const RhoPoly&, const RhoPoly&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      mpz_class a = abs(c);
      s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < k.size();) {
        std::size_t j = i;
        while (j < k.size() && k[j] == k[i]) ++j;
        if (!mono.empty()) mono += "*";
        mono += "r" + std::to_string(k[i]);
        if (j - i > 1) mono += "^" + std::to_string(j - i);
        i = j;
      }
      if (mono.empty()) s += a.get_str();
      else if (a == 1) s += mono;
      else s += a.get_str() + "*" + mono;
    }
    return s;
  }

 private:
  std::map<Key, mpz_class> terms_;
};

/// [{"nu": [indices], "c": int}], nu ascending.
inline nlohmann::json to_json(const RhoPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : p.terms()) {
    nlohmann::json c_json = c.fits_slong_p() ? nlohmann::json(c.get_si()) : nlohmann::json(c.get_str());
    arr.push_back({{"nu", k}, {"c", c_json}});
  }
  return arr;
}

/// {(1 + rho_1 + rho_2 + ...)^b}_w: the coefficient of rho_nu is b! / ((b - l(nu))! prod mult!).
inline RhoPoly h_poly(int b, int w) {
  RhoPoly r;
  if (w < 0 || b < 0) return r;
  if (w == 0) return RhoPoly::constant(1);
  for (const Partition& nu : partitions_of(w, -1, b)) {
    const auto& parts = nu.parts();
    mpz_class c = factorial(b) / factorial(b - static_cast<int>(parts.size()));
    std::size_t i = 0;
    while (i < parts.size()) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      c /= factorial(static_cast<int>(j - i));
      i = j;
    }
    r.add_term(std::vector<int>(parts.begin(), parts.end()), c);
  }
  return r;
}

namespace detail {

inline RhoPoly rho_det(const std::vector<std::vector<RhoPoly>>& a, std::vector<int> rows, std::vector<int> cols) {
  if (rows.empty()) return RhoPoly::constant(1);
  // expand along the row with the fewest nonzero entries
  std::size_t best = 0;
  std::size_t best_nz = cols.size() + 1;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::size_t nz = 0;
    for (int c : cols) nz += !a[static_cast<std::size_t>(rows[r])][static_cast<std::size_t>(c)].is_zero();
    if (nz < best_nz) {
      best_nz = nz;
      best = r;
    }
  }
  RhoPoly out;
  if (best_nz == 0) return out;
  const int row = rows[best];
  std::vector<int> sub_rows = rows;
  sub_rows.erase(sub_rows.begin() + static_cast<std::ptrdiff_t>(best));
  for (std::size_t ci = 0; ci < cols.size(); ++ci) {
    const RhoPoly& e = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(cols[ci])];
    if (e.is_zero()) continue;
    std::vector<int> sub_cols = cols;
    sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(ci));
    RhoPoly minor = e * rho_det(a, sub_rows, sub_cols);
    if ((best + ci) % 2) out -= minor;
    else out += minor;
  }
  return out;
}

}  // namespace detail

/// (-1)^{k(D)} det[h(b_i, j-1-|P_i|)]. Throws std::logic_error if the result
/// is not homogeneous of weight k(D), or nonzero when k(D) < 0.
inline RhoPoly phi(const PointSet& d) {
  const int n = d.size();
  std::vector<std::vector<RhoPoly>> a(static_cast<std::size_t>(n), std::vector<RhoPoly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h_poly(d.P(i + 1).b, j - d.P(i + 1).level());
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  RhoPoly r = detail::rho_det(a, idx, idx);
  if (d.k() % 2) r *= -1;
  if (!r.is_zero()) {
    if (d.k() < 0) throw std::logic_error("phi: nonzero value for k(D) < 0 at " + d.to_string());
    if (r.homogeneous_weight() != d.k()) throw std::logic_error("phi: value is not homogeneous of weight k(D) at " + d.to_string());
  }
  return r;
}

namespace detail {

class RhoIndexer {
 public:
  SparseRow row(const RhoPoly& p) {
    std::map<int, mpq_class> m;
    for (const auto& [k, c] : p.terms()) {
      auto [it, ins] = ids_.try_emplace(k, static_cast<int>(ids_.size()));
      m[it->second] += mpq_class(c);
    }
    return to_sparse_row(m);
  }

 private:
  std::map<RhoPoly::Key, int> ids_;
};

}  // namespace detail

/// Every relation among the Delta(D) of bidegree (d1,d2) modulo m I maps to 0.
inline bool phi_welldefined_check(int n, int d1, int d2) {
  DiagonalModule& mod = module_for(n, 1);
  const SparseEchelon& lower = mod.lower(d1, d2);
  std::map<int, RhoPoly> cache;
  auto phi_of = [&](int col) -> const RhoPoly& {
    auto it = cache.find(col);
    if (it == cache.end()) it = cache.emplace(col, phi(PointSet(mod.space().index().rep(col)))).first;
    return it->second;
  };
  for (const auto& row : lower.rows()) {
    // clear denominators so the combination stays integral
    mpz_class lcm = 1;
    for (const auto& [col, c] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    RhoPoly acc;
    for (const auto& [col, c] : row) {
      mpq_class scaled = c * lcm;
      acc += phi_of(col) * mpz_class(scaled.get_num());
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

struct InjectivityResult {
  std::size_t rank = 0;
  int dim = 0;
  bool pass() const { return static_cast<int>(rank) == dim; }
};

/// Rank of phi over a basis of M_{d1,d2}; requires k <= n-3.
inline InjectivityResult phi_injectivity_check(int n, int d1, int d2) {
  const int k = binom2(n) - d1 - d2;
  if (k > n - 3) throw std::invalid_argument("phi_injectivity_check: requires C(n,2) - d1 - d2 <= n - 3");
  DiagonalModule& mod = module_for(n, 1);
  InjectivityResult r;
  r.dim = mod.dim_M(d1, d2);
  detail::RhoIndexer idx;
  SparseEchelon e;
  for (const auto& f : mod.quotient_basis(d1, d2))
    if (e.insert(idx.row(phi(f.front())))) ++r.rank;
  return r;
}

/// Embeds a polynomial in n-1 point variables into n point variables.
inline MultiPoly embed(const MultiPoly& f, int n) {
  MultiPoly r(n);
  for (const auto& [mo, c] : f.terms()) {
    Monomial m2 = mo;
    m2.resize(static_cast<std::size_t>(2 * n), 0);
    r.add_term(m2, c);
  }
  return r;
}

/// f_0 = prod_{i <= c} (x_n - x_i) prod_{c < i < n} (y_n - y_i).
inline MultiPoly extension_multiplier(int n, int c) {
  MultiPoly f = MultiPoly::constant(n, 1);
  for (int i = 1; i < n; ++i) f *= MultiPoly::difference(n, n, i, i <= c ? 0 : 1);
  return f;
}

/// For (n-1)-point bidegree (d1', d2') and split c: phi'(D') = phi(D' + (c, n-1-c))
/// for every D', and f -> f_0 f is injective from M'_{d1',d2'} into M_{d1'+c, d2'+n-1-c}.
inline CheckOutcome phi_extension_check(int n, int d1p, int d2p, int c) {
  CheckOutcome out;
  const int d1 = d1p + c;
  const int d2 = d2p + n - 1 - c;
  for_each_pointset(n - 1, d1p, d2p, [&](const PointSet& dp) {
    std::vector<Point> pts = dp.points();
    pts.push_back({c, n - 1 - c});
    std::vector<Point> sorted = pts;
    const int s = sort_with_sign(sorted);
    if (s == 0) return;
    ++out.cases;
    RhoPoly lhs = phi(dp);
    RhoPoly rhs = phi(PointSet(sorted)) * mpz_class(s);
    if (!(lhs == rhs)) out.fail("phi mismatch at " + dp.to_string());
  });
  DiagonalModule& small = module_for(n - 1, 1);
  DiagonalModule& big = module_for(n, 1);
  const MultiPoly f0 = extension_multiplier(n, c);
  std::vector<IsoVec> images;
  for (const auto& f : small.quotient_basis(d1p, d2p)) images.push_back(big.space().project(f0 * embed(delta(f.front()), n)));
  ++out.cases;
  const std::size_t rank = big.quotient_rank(d1, d2, images);
  if (rank != images.size())
    out.fail("f -> f0 f has rank " + std::to_string(rank) + " on a space of dimension " + std::to_string(images.size()));
  return out;
}

}  // namespace qtcat
