// Integer partitions, Ferrers-diagram cell statistics, and partition counts.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qtcat {

/// Weakly decreasing sequence of positive parts. The diagram is drawn with
/// row 0 (the largest part) on top, as in the triangle pictures.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }
  /// Accepts any order and drops zeros.
  static Partition from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int area() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const noexcept { return parts_.empty(); }
  int row(int i) const noexcept { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  /// Column height: number of rows longer than column index c.
  int column(int c) const noexcept {
    int h = 0;
    for (int p : parts_)
      if (p > c) ++h;
    return h;
  }

  Partition conjugate() const {
    std::vector<int> cols;
    for (int c = 0; c < row(0); ++c) cols.push_back(column(c));
    return Partition(std::move(cols));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }

 private:
  std::vector<int> parts_;
};

/// A cell of dg(lambda) by coarm a' (column) and coleg l' (row from the top).
struct Cell {
  int coarm = 0;
  int coleg = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct ArmLeg {
  int arm = 0;
  int leg = 0;
  int coarm = 0;
  int coleg = 0;
  friend bool operator==(const ArmLeg&, const ArmLeg&) = default;
};

inline bool contains(const Partition& lambda, Cell x) {
  return x.coleg >= 0 && x.coarm >= 0 && x.coleg < lambda.length() && x.coarm < lambda.row(x.coleg);
}

inline ArmLeg arm_leg(const Partition& lambda, Cell x) {
  if (!contains(lambda, x)) throw std::out_of_range("arm_leg: cell outside the diagram");
  return {lambda.row(x.coleg) - x.coarm - 1, lambda.column(x.coarm) - x.coleg - 1, x.coarm, x.coleg};
}

template <typename F>
void for_each_cell(const Partition& lambda, F&& f) {
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.row(r); ++c) f(Cell{c, r});
}

/// Number of cells with m*l <= a <= m*l + m.
inline int c_m_stat(const Partition& lambda, int m) {
  if (m < 1) throw std::invalid_argument("c_m_stat: m must be positive");
  int count = 0;
  for_each_cell(lambda, [&](Cell x) {
    auto s = arm_leg(lambda, x);
    if (m * s.leg <= s.arm && s.arm <= m * s.leg + m) ++count;
  });
  return count;
}

/// Number of cells with a/(l+1) <= m < (a+1)/l; l = 0 makes the right side +inf.
inline int h_plus(const Partition& lambda, int m) {
  if (m < 1) throw std::invalid_argument("h_plus: m must be positive");
  int count = 0;
  for_each_cell(lambda, [&](Cell x) {
    auto s = arm_leg(lambda, x);
    bool left = s.arm <= m * (s.leg + 1);
    bool right = s.leg == 0 || m * s.leg < s.arm + 1;
    if (left && right) ++count;
  });
  return count;
}

/// True iff dg(lambda) fits in the triangle (0,0), (0,n), (mn,n).
inline bool fits_triangle(const Partition& lambda, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("fits_triangle: m and n must be positive");
  if (lambda.length() > n) return false;
  for (int i = 0; i < lambda.length(); ++i)
    if (lambda.row(i) > m * (n - 1 - i)) return false;
  return true;
}

/// n(mu) = sum of legs.
inline int n_stat(const Partition& mu) {
  int s = 0;
  for (int r = 0; r < mu.length(); ++r) s += r * mu.row(r);
  return s;
}

/// Visits every partition in the (m,n) triangle with area <= max_area
/// (max_area < 0 means unbounded). Rows are generated top-down with
/// row i <= min(row i-1, m*(n-1-i)).
template <typename F>
void for_each_triangle_partition(int m, int n, int max_area, F&& visit) {
  if (m < 1 || n < 1) throw std::invalid_argument("for_each_triangle_partition: m, n must be positive");
  std::vector<int> rows;
  const int cap = max_area < 0 ? std::numeric_limits<int>::max() : max_area;
  std::function<void(int, int, int)> rec = [&](int i, int prev, int area) {
    visit(Partition(rows));
    if (i >= n - 1) return;
    int bound = std::min(prev, m * (n - 1 - i));
    bound = std::min(bound, cap - area);
    for (int len = 1; len <= bound; ++len) {
      rows.push_back(len);
      rec(i + 1, len, area + len);
      rows.pop_back();
    }
  };
  rec(0, std::numeric_limits<int>::max(), 0);
}

inline std::vector<Partition> triangle_partitions(int m, int n, int max_area = -1) {
  std::vector<Partition> out;
  for_each_triangle_partition(m, n, max_area, [&](const Partition& p) { out.push_back(p); });
  return out;
}

/// All partitions of k, each weakly decreasing, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int k, int max_part = -1, int max_len = -1) {
  std::vector<Partition> out;
  if (k < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int bound) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
    for (int p = std::min(rem, bound); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(k, max_part < 0 ? k : max_part);
  return out;
}

/// p(b, k): partitions of k into at most b parts (p(0,k)=0 for k>0, p(b,0)=1).
inline std::int64_t partition_count(int b, int k) {
  if (k < 0 || b < 0) return 0;
  if (k == 0) return 1;
  if (b == 0) return 0;
  // table[j][s] = partitions of s with parts <= j (equivalently at most j parts)
  std::vector<std::int64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int part = 1; part <= std::min(b, k); ++part)
    for (int s = part; s <= k; ++s) row[static_cast<std::size_t>(s)] += row[static_cast<std::size_t>(s - part)];
  return row[static_cast<std::size_t>(k)];
}

inline std::int64_t partition_count(int k) { return partition_count(k, k); }

/// (1/(mn+1)) * binom(mn+n, n).
inline mpz_class higher_catalan(int m, int n) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m * n + n), static_cast<unsigned long>(n));
  return b / (m * n + 1);
}

inline int binom2(int n) { return n * (n - 1) / 2; }

}  // namespace qtcat
