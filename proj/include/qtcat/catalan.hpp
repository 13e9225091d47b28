// Combinatorial higher q,t-Catalan polynomials: partition, word and path versions.
#pragma once

#include <stdexcept>

#include "qtcat/dyck.hpp"
#include "qtcat/partition.hpp"
#include "qtcat/qt_poly.hpp"

namespace qtcat {

/// sum over lambda in the (m,n) triangle of q^{m C(n,2) - |lambda|} t^{c_m(lambda)}.
inline QtPoly pc_poly(int m, int n) {
  const int top = m * binom2(n);
  QtPoly p;
  for_each_triangle_partition(m, n, -1, [&](const Partition& lam) { p.add_term(top - lam.area(), c_m_stat(lam, m), 1); });
  return p;
}

/// sum over m-Dyck words of q^{area} t^{dinv_m}.
inline QtPoly wc_poly(int m, int n) {
  QtPoly p;
  for_each_dyck_word(m, n, [&](const DyckWord& w) { p.add_term(w.area(), dinv_m(w, m), 1); });
  return p;
}

/// sum over m-Dyck paths of q^{b_m} t^{area}.
inline QtPoly dc_poly(int m, int n) {
  QtPoly p;
  for_each_dyck_path(m, n, [&](const DyckPath& pi) { p.add_term(bounce(pi, m).b, pi.area(), 1); });
  return p;
}

/// Terms of q^{m C(n,2)} PC(q^{-1}, t) with q-degree <= max_q, computed by
/// enumerating only partitions of area <= max_q.
inline QtPoly modified_pc_truncated(int m, int n, int max_q) {
  QtPoly p;
  for_each_triangle_partition(m, n, max_q, [&](const Partition& lam) { p.add_term(lam.area(), c_m_stat(lam, m), 1); });
  return p;
}

/// Terms of q^{m C(n,2)} DC(t, q^{-1}) = sum q^{area^c(pi)} t^{b_m(pi)} with
/// q-degree <= max_q; the paths are those whose upper partition has area <= max_q.
inline QtPoly modified_dc_truncated(int m, int n, int max_q) {
  QtPoly p;
  for_each_triangle_partition(m, n, max_q, [&](const Partition& lam) {
    DyckPath pi = partition_to_path(lam, m, n);
    p.add_term(lam.area(), bounce(pi, m).b, 1);
  });
  return p;
}

/// Drops every term whose q-degree exceeds max_q.
inline QtPoly truncate_q(const QtPoly& p, int max_q) {
  QtPoly r;
  for (const auto& [e, c] : p.terms())
    if (e.first <= max_q) r.add_term(e.first, e.second, c);
  return r;
}

struct StabilizedBounce {
  bool holds = false;
  int bounce = 0;
  int length = 0;
};

/// For n >= 2|lambda| the path cut out by lambda has b_m equal to l(lambda).
inline StabilizedBounce stabilized_bounce_check(const Partition& lambda, int m, int n) {
  if (!fits_triangle(lambda, m, n)) throw std::invalid_argument("stabilized_bounce_check: partition does not fit");
  if (n < 2 * lambda.area()) throw std::invalid_argument("stabilized_bounce_check: need n >= 2*area");
  int b = bounce(partition_to_path(lambda, m, n), m).b;
  return {b == lambda.length(), b, lambda.length()};
}

}  // namespace qtcat
