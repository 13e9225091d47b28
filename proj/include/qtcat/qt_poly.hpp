// Sparse bivariate Laurent polynomials and truncated power series in q, t.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace qtcat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent pair (e_q, e_t).
using QtExponent = std::pair<int, int>;

/// Finite sum of c * q^a * t^b with arbitrary-precision integer c.
/// Terms are kept ordered by (a, b) and never hold a zero coefficient.
class QtPoly {
 public:
  using TermMap = std::map<QtExponent, Integer>;

  QtPoly() = default;

  static QtPoly constant(const Integer& c) { return monomial(0, 0, c); }
  static QtPoly monomial(int eq, int et, const Integer& c = 1) {
    QtPoly p;
    p.add_term(eq, et, c);
    return p;
  }
  static QtPoly q() { return monomial(1, 0); }
  static QtPoly t() { return monomial(0, 1); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Integer coeff(int eq, int et) const {
    auto it = terms_.find({eq, et});
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(int eq, int et, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({eq, et}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  QtPoly& operator+=(const QtPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }
  QtPoly& operator-=(const QtPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
  }
  QtPoly& operator*=(const QtPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend QtPoly operator+(QtPoly a, const QtPoly& b) { return a += b; }
  friend QtPoly operator-(QtPoly a, const QtPoly& b) { return a -= b; }
  friend QtPoly operator-(const QtPoly& a) {
    QtPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend QtPoly operator*(const QtPoly& a, const QtPoly& b) {
    QtPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
  }
  friend bool operator==(const QtPoly& a, const QtPoly& b) { return a.terms_ == b.terms_; }

  QtPoly pow(unsigned k) const {
    QtPoly r = constant(1);
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  /// q^shift * p(q^{-1}, t).
  QtPoly modify(int shift) const {
    QtPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(QtExponent{shift - e.first, e.second}, c);
    return r;
  }

  /// p(t, q).
  QtPoly swap_variables() const {
    QtPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(QtExponent{e.second, e.first}, c);
    return r;
  }

  /// p(q, 1) as a polynomial in q alone.
  QtPoly at_t_one() const {
    QtPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e.first, 0, c);
    return r;
  }

  /// p(q, q^{-1}).
  QtPoly at_t_inverse_q() const {
    QtPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e.first - e.second, 0, c);
    return r;
  }

  QtPoly shift(int dq, int dt) const {
    QtPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(QtExponent{e.first + dq, e.second + dt}, c);
    return r;
  }

  Integer eval(const Integer& qv, const Integer& tv) const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) {
      if (e.first < 0 || e.second < 0)
        throw std::domain_error("QtPoly::eval: negative exponent needs rational evaluation");
      Integer a, b;
      mpz_pow_ui(a.get_mpz_t(), qv.get_mpz_t(), static_cast<unsigned long>(e.first));
      mpz_pow_ui(b.get_mpz_t(), tv.get_mpz_t(), static_cast<unsigned long>(e.second));
      s += c * a * b;
    }
    return s;
  }

  Rational eval(const Rational& qv, const Rational& tv) const;

  Integer coefficient_sum() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  bool nonnegative() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  int max_q_degree() const;
  int max_t_degree() const;
  int min_q_degree() const;
  int min_t_degree() const;

  std::string to_string() const;

 private:
  TermMap terms_;
};

inline Rational rational_pow(const Rational& base, int e) {
  Rational r = 1;
  Rational b = e >= 0 ? base : Rational(1) / base;
  for (int i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
  return r;
}

inline Rational QtPoly::eval(const Rational& qv, const Rational& tv) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += Rational(c) * rational_pow(qv, e.first) * rational_pow(tv, e.second);
  return s;
}

inline int QtPoly::max_q_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  int d = terms_.begin()->first.first;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}
inline int QtPoly::max_t_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  int d = terms_.begin()->first.second;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}
inline int QtPoly::min_q_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  int d = terms_.begin()->first.first;
  for (const auto& [e, c] : terms_) d = std::min(d, e.first);
  return d;
}
inline int QtPoly::min_t_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  int d = terms_.begin()->first.second;
  for (const auto& [e, c] : terms_) d = std::min(d, e.second);
  return d;
}

inline std::string QtPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest total degree first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = (a == 1) && (e.first != 0 || e.second != 0);
    if (!unit) os << a.get_str();
    auto var = [&](const char* v, int k) {
      if (k == 0) return;
      if (!unit) os << "*";
      os << v;
      if (k != 1) os << "^" << k;
      unit = false;
    };
    var("q", e.first);
    var("t", e.second);
  }
  return os.str();
}

/// Exact division of single-variable (t-free) polynomials in q; throws on a
/// nonzero remainder or a non-unit leading coefficient that does not divide.
inline QtPoly exact_divide_q(const QtPoly& num, const QtPoly& den) {
  if (den.is_zero()) throw std::domain_error("exact_divide_q: division by zero");
  for (const auto& [e, c] : num.terms())
    if (e.second != 0) throw std::invalid_argument("exact_divide_q: numerator depends on t");
  for (const auto& [e, c] : den.terms())
    if (e.second != 0) throw std::invalid_argument("exact_divide_q: denominator depends on t");
  QtPoly rem = num;
  QtPoly quot;
  const int dd = den.max_q_degree();
  const Integer lead = den.coeff(dd, 0);
  while (!rem.is_zero()) {
    int rd = rem.max_q_degree();
    if (rd < dd) break;
    Integer rc = rem.coeff(rd, 0);
    if (!mpz_divisible_p(rc.get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error("exact_divide_q: coefficient not divisible");
    Integer f = rc / lead;
    QtPoly step = QtPoly::monomial(rd - dd, 0, f);
    quot += step;
    rem -= step * den;
  }
  if (!rem.is_zero()) throw std::domain_error("exact_divide_q: nonzero remainder " + rem.to_string());
  return quot;
}

/// [k]_q = 1 + q + ... + q^{k-1}.
inline QtPoly q_int(int k) {
  if (k < 1) throw std::invalid_argument("q_int: k must be >= 1");
  QtPoly r;
  for (int i = 0; i < k; ++i) r.add_term(i, 0, 1);
  return r;
}

inline QtPoly q_factorial(int k) {
  QtPoly r = QtPoly::constant(1);
  for (int i = 1; i <= k; ++i) r *= q_int(i);
  return r;
}

/// Gaussian binomial [a choose b]_q via exact division of q-factorials.
inline QtPoly q_binomial(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("q_binomial: negative argument");
  if (b > a) throw std::invalid_argument("q_binomial: b > a");
  return exact_divide_q(q_factorial(a), q_factorial(b) * q_factorial(a - b));
}

/// Power series in q, t truncated above q-degree `order`; exponents are nonnegative.
class QtSeries {
 public:
  explicit QtSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("QtSeries: negative truncation order");
  }

  static QtSeries one(int order) {
    QtSeries s(order);
    s.add_term(0, 0, 1);
    return s;
  }

  int order() const noexcept { return order_; }
  const QtPoly::TermMap& terms() const noexcept { return terms_; }

  Integer coeff(int eq, int et) const {
    auto it = terms_.find({eq, et});
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(int eq, int et, const Integer& c) {
    if (eq < 0 || et < 0) throw std::invalid_argument("QtSeries: negative exponent");
    if (eq > order_ || c == 0) return;
    auto [it, inserted] = terms_.try_emplace({eq, et}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend QtSeries operator*(const QtSeries& a, const QtSeries& b) {
    QtSeries r(std::min(a.order_, b.order_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        if (ea.first + eb.first <= r.order_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
  }

  friend bool operator==(const QtSeries& a, const QtSeries& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

 private:
  int order_;
  QtPoly::TermMap terms_;
};

/// prod_{i>=1} 1/(1 - t q^i), truncated at q-degree `order`.
inline QtSeries partition_product_series(int order) {
  QtSeries acc = QtSeries::one(order);
  for (int i = 1; i <= order; ++i) {
    QtSeries geo(order);
    for (int j = 0; i * j <= order; ++j) geo.add_term(i * j, j, 1);
    acc = acc * geo;
  }
  return acc;
}

// Canonical JSON: [{"q": a, "t": b, "c": "decimal"}], sorted by (q, t).
inline nlohmann::json to_json(const QtPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    arr.push_back({{"q", e.first}, {"t", e.second}, {"c", c.get_str()}});
  return arr;
}

inline QtPoly qtpoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("QtPoly JSON must be an array");
  QtPoly p;
  for (const auto& rec : j) {
    const auto& c = rec.at("c");
    Integer v = c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<long>());
    p.add_term(rec.at("q").get<int>(), rec.at("t").get<int>(), v);
  }
  return p;
}

}  // namespace qtcat
