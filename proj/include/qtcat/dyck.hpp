// m-Dyck words and m-Dyck paths with their area, dinv and bounce statistics.
#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtcat/partition.hpp"

namespace qtcat {

/// gamma_0 = 0 and gamma_{i+1} <= gamma_i + m.
class DyckWord {
 public:
  DyckWord(std::vector<int> entries, int m) : entries_(std::move(entries)), m_(m) {
    if (m_ < 1) throw std::invalid_argument("DyckWord: m must be positive");
    if (entries_.empty() || entries_[0] != 0) throw std::invalid_argument("DyckWord: gamma_0 must be 0");
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
      if (entries_[i + 1] < 0) throw std::invalid_argument("DyckWord: negative entry");
      if (entries_[i + 1] > entries_[i] + m_) throw std::invalid_argument("DyckWord: increment exceeds m");
    }
  }

  const std::vector<int>& entries() const noexcept { return entries_; }
  int slope() const noexcept { return m_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int area() const noexcept {
    int s = 0;
    for (int g : entries_) s += g;
    return s;
  }
  friend bool operator==(const DyckWord&, const DyckWord&) = default;
  friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

 private:
  std::vector<int> entries_;
  int m_;
};

/// Piecewise score: m+1-p on [1,m], m+p on [-m,0], 0 elsewhere.
constexpr int sc_m(int p, int m) {
  if (1 <= p && p <= m) return m + 1 - p;
  if (-m <= p && p <= 0) return m + p;
  return 0;
}

inline int dinv_m(const DyckWord& w, int m) {
  if (m != w.slope()) {
    // re-validate against the requested slope
    DyckWord check(w.entries(), m);
    (void)check;
  }
  const auto& g = w.entries();
  int s = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) s += sc_m(g[i] - g[j], m);
  return s;
}

template <typename F>
void for_each_dyck_word(int m, int n, F&& visit) {
  if (m < 1 || n < 1) throw std::invalid_argument("for_each_dyck_word: m, n must be positive");
  std::vector<int> g{0};
  std::function<void()> rec = [&] {
    if (static_cast<int>(g.size()) == n) {
      visit(DyckWord(g, m));
      return;
    }
    int top = g.back() + m;
    for (int v = 0; v <= top; ++v) {
      g.push_back(v);
      rec();
      g.pop_back();
    }
  };
  rec();
}

/// Lattice path (0,0) -> (mn,n) weakly above the diagonal, stored as the
/// height h(c) of its east step spanning x in [c, c+1], c = 0..mn-1.
class DyckPath {
 public:
  DyckPath(std::vector<int> heights, int m, int n) : h_(std::move(heights)), m_(m), n_(n) {
    if (m_ < 1 || n_ < 1) throw std::invalid_argument("DyckPath: m and n must be positive");
    if (static_cast<int>(h_.size()) != m_ * n_) throw std::invalid_argument("DyckPath: need exactly mn east steps");
    for (int c = 0; c < m_ * n_; ++c) {
      int h = h_[static_cast<std::size_t>(c)];
      if (h < 0 || h > n_) throw std::invalid_argument("DyckPath: height out of range");
      if (c > 0 && h < h_[static_cast<std::size_t>(c - 1)]) throw std::invalid_argument("DyckPath: heights must not decrease");
      if (m_ * h < c + 1) throw std::invalid_argument("DyckPath: path goes below the diagonal");
    }
  }

  /// Parses a string over {N, E}.
  static DyckPath from_steps(const std::string& steps, int m) {
    std::vector<int> h;
    int y = 0;
    for (char ch : steps) {
      if (ch == 'N' || ch == 'n') ++y;
      else if (ch == 'E' || ch == 'e') h.push_back(y);
      else throw std::invalid_argument("DyckPath: step must be N or E");
    }
    if (static_cast<int>(h.size()) != m * y) throw std::invalid_argument("DyckPath: step counts do not match m");
    return DyckPath(std::move(h), m, y);
  }

  const std::vector<int>& heights() const noexcept { return h_; }
  int height(int c) const { return c >= m_ * n_ ? n_ : h_.at(static_cast<std::size_t>(c)); }
  int slope() const noexcept { return m_; }
  int order() const noexcept { return n_; }

  std::string steps() const {
    std::string s;
    int y = 0;
    for (int h : h_) {
      s.append(static_cast<std::size_t>(h - y), 'N');
      s.push_back('E');
      y = h;
    }
    s.append(static_cast<std::size_t>(n_ - y), 'N');
    return s;
  }

  /// Lowest full-square row in column c that lies above the line my = x.
  int diagonal_floor(int c) const noexcept { return (c + 1 + m_ - 1) / m_; }

  /// Full squares in column c between the path and the diagonal.
  int column_area(int c) const { return height(c) - diagonal_floor(c); }

  int area() const {
    int s = 0;
    for (int c = 0; c < m_ * n_; ++c) s += column_area(c);
    return s;
  }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<int> h_;
  int m_;
  int n_;
};

template <typename F>
void for_each_dyck_path(int m, int n, F&& visit) {
  if (m < 1 || n < 1) throw std::invalid_argument("for_each_dyck_path: m, n must be positive");
  const int cols = m * n;
  std::vector<int> h;
  std::function<void(int)> rec = [&](int c) {
    if (c == cols) {
      visit(DyckPath(h, m, n));
      return;
    }
    int lo = std::max(c == 0 ? 0 : h.back(), (c + 1 + m - 1) / m);
    for (int v = lo; v <= n; ++v) {
      h.push_back(v);
      rec(c + 1);
      h.pop_back();
    }
  };
  rec(0);
}

struct BounceData {
  std::vector<int> v;
  int b = 0;
};

/// Bounce path: go north to the east step starting on x = u (distance v_i),
/// then east by v_i + ... + v_{i-m+1}. The walk continues until (mn, n) or,
/// once on y = n, until no further east progress is possible.
inline BounceData bounce(const DyckPath& path, int m) {
  if (m != path.slope()) throw std::invalid_argument("bounce: slope mismatch");
  const int n = path.order();
  const int cols = m * n;
  BounceData out;
  int u = 0;
  int y = 0;
  while (u < cols) {
    int vi = path.height(u) - y;
    y += vi;
    out.v.push_back(vi);
    int step = 0;
    for (int k = 0; k < m && k < static_cast<int>(out.v.size()); ++k) step += out.v[out.v.size() - 1 - static_cast<std::size_t>(k)];
    if (step == 0) {
      if (y == n) break;
      throw std::logic_error("bounce: path stalled below y = n");
    }
    u += step;
  }
  for (std::size_t k = 0; k < out.v.size(); ++k) out.b += static_cast<int>(k) * out.v[k];
  int total = 0;
  for (int vi : out.v) total += vi;
  if (total != n) throw std::logic_error("bounce: vertical runs do not sum to n");
  return out;
}

/// Cells above the path inside the triangle, read as a partition (top row first).
inline Partition path_to_partition(const DyckPath& path) {
  const int n = path.order();
  std::vector<int> rows;
  for (int r = n - 1; r >= 0; --r) {
    int len = 0;
    for (int h : path.heights())
      if (h <= r) ++len;
    if (len == 0) break;
    rows.push_back(len);
  }
  return Partition(std::move(rows));
}

/// Inverse of path_to_partition for lambda fitting the (m, n) triangle.
inline DyckPath partition_to_path(const Partition& lambda, int m, int n) {
  if (!fits_triangle(lambda, m, n)) throw std::invalid_argument("partition_to_path: partition does not fit the triangle");
  std::vector<int> h(static_cast<std::size_t>(m * n));
  for (int c = 0; c < m * n; ++c) h[static_cast<std::size_t>(c)] = n - lambda.column(c);
  return DyckPath(std::move(h), m, n);
}

/// gamma_i = full squares right of lambda and left of the diagonal in row i from the bottom.
inline DyckWord partition_to_word(const Partition& lambda, int m, int n) {
  if (!fits_triangle(lambda, m, n)) throw std::invalid_argument("partition_to_word: partition does not fit the triangle");
  std::vector<int> g(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) g[static_cast<std::size_t>(r)] = m * r - lambda.row(n - 1 - r);
  return DyckWord(std::move(g), m);
}

inline Partition word_to_partition(const DyckWord& w, int m) {
  const int n = w.size();
  std::vector<int> rows;
  for (int i = 0; i < n; ++i) {
    int r = n - 1 - i;
    int len = m * r - w.entries()[static_cast<std::size_t>(r)];
    if (len > 0) rows.push_back(len);
  }
  return Partition::from_unsorted(std::move(rows));
}

}  // namespace qtcat
