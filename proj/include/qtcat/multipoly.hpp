// Sparse polynomials in x_1..x_n, y_1..y_n over the rationals.
#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qtcat {

/// Exponents stored per index as (x_i, y_i) pairs: [a_1, b_1, ..., a_n, b_n].
using Monomial = std::vector<std::uint8_t>;

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, mpq_class>;

  explicit MultiPoly(int n = 0) : n_(n) {}

  static MultiPoly constant(int n, const mpq_class& c) {
    MultiPoly p(n);
    p.add_term(Monomial(static_cast<std::size_t>(2 * n), 0), c);
    return p;
  }
  static MultiPoly x(int n, int i) { return variable(n, i, 0); }
  static MultiPoly y(int n, int i) { return variable(n, i, 1); }
  /// x_i - x_j (axis 0) or y_i - y_j (axis 1); indices are 1-based.
  static MultiPoly difference(int n, int i, int j, int axis) { return variable(n, i, axis) - variable(n, j, axis); }

  int nvars() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(const Monomial& mono, const mpq_class& c) {
    if (mono.size() != static_cast<std::size_t>(2 * n_)) throw std::invalid_argument("MultiPoly: monomial arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  mpq_class coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? mpq_class(0) : it->second;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [mo, c] : o.terms_) add_term(mo, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [mo, c] : o.terms_) add_term(mo, -c);
    return *this;
  }
  MultiPoly& operator*=(const mpq_class& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [mo, c] : terms_) c *= s;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const mpq_class& s) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly r(a.n_);
    Monomial mo(static_cast<std::size_t>(2 * a.n_));
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t k = 0; k < mo.size(); ++k) mo[k] = static_cast<std::uint8_t>(ma[k] + mb[k]);
        r.add_term(mo, ca * cb);
      }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// (x-degree, y-degree) of a monomial.
  static std::pair<int, int> bidegree_of(const Monomial& mo) {
    int dx = 0, dy = 0;
    for (std::size_t k = 0; k < mo.size(); k += 2) {
      dx += mo[k];
      dy += mo[k + 1];
    }
    return {dx, dy};
  }

  /// Common bidegree, or nullopt-like (-1,-1) when not bihomogeneous or zero.
  std::pair<int, int> bidegree() const {
    if (terms_.empty()) return {-1, -1};
    auto d = bidegree_of(terms_.begin()->first);
    for (const auto& [mo, c] : terms_)
      if (bidegree_of(mo) != d) return {-1, -1};
    return d;
  }
  bool is_bihomogeneous() const { return !terms_.empty() && bidegree().first >= 0; }

  /// Applies the diagonal action of a permutation: x_i -> x_{perm[i]}, y_i -> y_{perm[i]} (0-based).
  MultiPoly permuted(const std::vector<int>& perm) const {
    MultiPoly r(n_);
    Monomial mo(static_cast<std::size_t>(2 * n_));
    for (const auto& [m0, c] : terms_) {
      for (int i = 0; i < n_; ++i) {
        auto dst = static_cast<std::size_t>(2 * perm[static_cast<std::size_t>(i)]);
        mo[dst] = m0[static_cast<std::size_t>(2 * i)];
        mo[dst + 1] = m0[static_cast<std::size_t>(2 * i + 1)];
      }
      r.add_term(mo, c);
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mo, c] : terms_) {
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      mpq_class a = abs(c);
      bool any = false;
      std::ostringstream vars;
      for (int i = 0; i < n_; ++i) {
        for (int axis = 0; axis < 2; ++axis) {
          int e = mo[static_cast<std::size_t>(2 * i + axis)];
          if (e == 0) continue;
          if (any) vars << "*";
          vars << (axis == 0 ? "x" : "y") << (i + 1);
          if (e > 1) vars << "^" << e;
          any = true;
        }
      }
      if (!any) os << a.get_str();
      else if (a == 1) os << vars.str();
      else os << a.get_str() << "*" << vars.str();
    }
    return os.str();
  }

 private:
  static MultiPoly variable(int n, int i, int axis) {
    if (i < 1 || i > n) throw std::out_of_range("MultiPoly: variable index out of range");
    Monomial mo(static_cast<std::size_t>(2 * n), 0);
    mo[static_cast<std::size_t>(2 * (i - 1) + axis)] = 1;
    MultiPoly p(n);
    p.add_term(mo, 1);
    return p;
  }
  void check_arity(const MultiPoly& o) const {
    if (o.n_ != n_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  }

  int n_;
  TermMap terms_;
};

}  // namespace qtcat
