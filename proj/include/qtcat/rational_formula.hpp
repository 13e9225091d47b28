// The rational-function version RC_n^(m)(q,t): a sum over partitions of n of
// rational functions, recovered as a polynomial by exact evaluation on a grid
// followed by bivariate interpolation.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtcat/partition.hpp"
#include "qtcat/qt_poly.hpp"

namespace qtcat {

struct MuData {
  Partition mu;
  QtPoly T;
  QtPoly B;
  QtPoly Pi;
  QtPoly w;
};

inline MuData mu_data(const Partition& mu) {
  if (mu.empty()) throw std::invalid_argument("mu_data: partition must be nonempty");
  MuData d{mu, {}, {}, QtPoly::constant(1), QtPoly::constant(1)};
  int sum_arm = 0;
  int sum_leg = 0;
  for_each_cell(mu, [&](Cell x) {
    ArmLeg s = arm_leg(mu, x);
    sum_arm += s.arm;
    sum_leg += s.leg;
    d.B.add_term(s.coarm, s.coleg, 1);
    if (s.coarm != 0 || s.coleg != 0) d.Pi *= QtPoly::constant(1) - QtPoly::monomial(s.coarm, s.coleg);
    QtPoly f1 = QtPoly::monomial(s.arm, 0) - QtPoly::monomial(0, s.leg + 1);
    QtPoly f2 = QtPoly::monomial(0, s.leg) - QtPoly::monomial(s.arm + 1, 0);
    d.w *= f1 * f2;
  });
  d.T = QtPoly::monomial(sum_arm, sum_leg);
  return d;
}

/// Coefficients (constant term first) of the unique polynomial of degree
/// < xs.size() through the points (xs[i], ys[i]); Newton form, exact.
inline std::vector<Rational> interpolate_univariate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t k = xs.size();
  if (ys.size() != k || k == 0) throw std::invalid_argument("interpolate_univariate: size mismatch");
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = k - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  // Horner expansion of the Newton form into monomial coefficients.
  std::vector<Rational> coeffs(k, Rational(0));
  coeffs[0] = dd[k - 1];
  std::size_t deg = 0;
  for (std::size_t idx = k - 1; idx-- > 0;) {
    // coeffs <- coeffs * (x - xs[idx]) + dd[idx]
    std::vector<Rational> next(k, Rational(0));
    for (std::size_t j = 0; j <= deg; ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * xs[idx];
    }
    next[0] += dd[idx];
    coeffs.swap(next);
    ++deg;
  }
  return coeffs;
}

struct RcOptions {
  int fresh_checks = 3;
  int retry_budget = 2;
};

namespace detail {

struct RcTerm {
  QtPoly numerator;
  QtPoly denominator;
};

inline std::vector<RcTerm> rc_terms(int m, int n) {
  std::vector<RcTerm> out;
  const QtPoly base = (QtPoly::constant(1) - QtPoly::q()) * (QtPoly::constant(1) - QtPoly::t());
  for (const Partition& mu : partitions_of(n)) {
    MuData d = mu_data(mu);
    out.push_back({base * d.T.pow(static_cast<unsigned>(m + 1)) * d.B * d.Pi, d.w});
  }
  return out;
}

inline Rational rc_eval(const std::vector<RcTerm>& terms, const Integer& qv, const Integer& tv) {
  Rational s = 0;
  for (const auto& t : terms) {
    Rational r(t.numerator.eval(qv, tv), t.denominator.eval(qv, tv));
    r.canonicalize();
    s += r;
  }
  return s;
}

inline bool denominators_clear(const std::vector<RcTerm>& terms, const Integer& qv, const Integer& tv) {
  for (const auto& t : terms)
    if (t.denominator.eval(qv, tv) == 0) return false;
  return true;
}

}  // namespace detail

/// RC_n^(m)(q,t) as an exact polynomial. Grid: q-abscissae 2, 3, ...; each
/// t-abscissa starts at the next unused integer and is bumped by +1 until no
/// w_mu vanishes at any grid point. The interpolant must have nonnegative
/// integer coefficients, degrees <= m C(n,2), and must reproduce the rational
/// sum at fresh points; otherwise the computation aborts.
inline QtPoly rc_poly(int m, int n, const RcOptions& opt = {}) {
  if (m < 1 || n < 1) throw std::invalid_argument("rc_poly: m and n must be positive");
  const int D = m * binom2(n);
  const auto terms = detail::rc_terms(m, n);
  std::string last_error;
  for (int attempt = 0; attempt <= opt.retry_budget; ++attempt) {
    const long offset = 2 + 7L * attempt;
    std::vector<Integer> qs, ts;
    for (int i = 0; i <= D; ++i) qs.emplace_back(offset + i);
    long cand = offset;
    while (static_cast<int>(ts.size()) <= D) {
      bool ok = true;
      for (const auto& qv : qs)
        if (!detail::denominators_clear(terms, qv, Integer(cand))) {
          ok = false;
          break;
        }
      if (ok) ts.emplace_back(cand);
      ++cand;
    }
    // interpolate in q for each fixed t, then in t for each q-power
    std::vector<Rational> qx(qs.begin(), qs.end()), tx(ts.begin(), ts.end());
    std::vector<std::vector<Rational>> by_t;  // by_t[j][a]
    for (const auto& tv : ts) {
      std::vector<Rational> vals;
      for (const auto& qv : qs) vals.push_back(detail::rc_eval(terms, qv, tv));
      by_t.push_back(interpolate_univariate(qx, vals));
    }
    QtPoly result;
    bool bad = false;
    for (int a = 0; a <= D && !bad; ++a) {
      std::vector<Rational> vals;
      for (int j = 0; j <= D; ++j) vals.push_back(by_t[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)]);
      auto tc = interpolate_univariate(tx, vals);
      for (int b = 0; b <= D; ++b) {
        const Rational& c = tc[static_cast<std::size_t>(b)];
        if (c == 0) continue;
        if (c.get_den() != 1 || c < 0) {
          last_error = "coefficient of q^" + std::to_string(a) + " t^" + std::to_string(b) + " is " + c.get_str();
          bad = true;
          break;
        }
        result.add_term(a, b, c.get_num());
      }
    }
    if (bad) continue;
    // certify at fresh points outside the grid
    bool certified = true;
    long fresh = cand + 11;
    for (int k = 0; k < opt.fresh_checks;) {
      Integer qv(fresh + 3 * k), tv(fresh + 5 * k + 1);
      ++fresh;
      if (!detail::denominators_clear(terms, qv, tv)) continue;
      if (Rational(result.eval(qv, tv)) != detail::rc_eval(terms, qv, tv)) {
        certified = false;
        last_error = "interpolant disagrees with the rational sum at a fresh point";
        break;
      }
      ++k;
    }
    if (certified) return result;
  }
  throw std::runtime_error("rc_poly: interpolation failed for (m,n)=(" + std::to_string(m) + "," + std::to_string(n) +
                           "): " + last_error);
}

/// RC(q, 1).
inline QtPoly rc_specialize_t1(const QtPoly& rc) { return rc.at_t_one(); }

/// q^{m C(n,2)} RC(q, 1/q).
inline QtPoly rc_specialize_t_qinv(const QtPoly& rc, int m, int n) { return rc.at_t_inverse_q().shift(m * binom2(n), 0); }

/// [mn+n choose n]_q / [mn+1]_q by exact division.
inline QtPoly q_fuss_catalan(int m, int n) { return exact_divide_q(q_binomial(m * n + n, n), q_int(m * n + 1)); }

}  // namespace qtcat
