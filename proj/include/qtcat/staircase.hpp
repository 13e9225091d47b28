// Staircase forms: n x n matrices whose (i,j) entry is 0 for i <= |P_j| and
// z_{i1} ... z_{i,|P_j|} otherwise, each z_{il} being x_i - x_l or y_i - y_l.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtcat/multipoly.hpp"
#include "qtcat/partition.hpp"
#include "qtcat/point_set.hpp"

namespace qtcat {

class StaircaseForm {
 public:
  /// words[i][j] (0-based) is the x/y choice word of entry (i+1, j+1); it must
  /// have length levels[j] when i >= levels[j] and is ignored otherwise.
  StaircaseForm(std::vector<int> levels, std::vector<std::vector<std::string>> words)
      : levels_(std::move(levels)), words_(std::move(words)) {
    const std::size_t n = levels_.size();
    if (words_.size() != n) throw std::invalid_argument("StaircaseForm: word matrix must be n x n");
    for (std::size_t j = 1; j < n; ++j)
      if (levels_[j] < levels_[j - 1]) throw std::invalid_argument("StaircaseForm: levels must be nondecreasing");
    for (std::size_t i = 0; i < n; ++i) {
      if (words_[i].size() != n) throw std::invalid_argument("StaircaseForm: word matrix must be n x n");
      for (std::size_t j = 0; j < n; ++j) {
        if (levels_[j] < 0) throw std::invalid_argument("StaircaseForm: negative level");
        if (static_cast<int>(i) < levels_[j]) continue;
        const std::string& w = words_[i][j];
        if (static_cast<int>(w.size()) != levels_[j]) throw std::invalid_argument("StaircaseForm: word length must equal the column level");
        for (char c : w)
          if (c != 'x' && c != 'y') throw std::invalid_argument("StaircaseForm: words use only 'x' and 'y'");
      }
    }
  }

  /// Every row of column j uses col_words[j].
  static StaircaseForm from_column_words(const std::vector<std::string>& col_words) {
    const std::size_t n = col_words.size();
    std::vector<int> levels;
    for (const auto& w : col_words) levels.push_back(static_cast<int>(w.size()));
    std::vector<std::vector<std::string>> words(n, std::vector<std::string>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (static_cast<int>(i) >= levels[j]) words[i][j] = col_words[j];
    return StaircaseForm(std::move(levels), std::move(words));
  }

  /// Column j gets b_j y's followed by a_j x's, or the reverse.
  static StaircaseForm from_pointset(const PointSet& d, bool y_first = false) {
    std::vector<std::string> cols;
    for (const auto& p : d.points())
      cols.push_back(y_first ? std::string(static_cast<std::size_t>(p.b), 'y') + std::string(static_cast<std::size_t>(p.a), 'x')
                             : std::string(static_cast<std::size_t>(p.a), 'x') + std::string(static_cast<std::size_t>(p.b), 'y'));
    return from_column_words(cols);
  }

  int n() const noexcept { return static_cast<int>(levels_.size()); }
  const std::vector<int>& levels() const noexcept { return levels_; }
  /// 1-based.
  bool nonzero(int i, int j) const { return i > levels_.at(static_cast<std::size_t>(j - 1)); }
  const std::string& word(int i, int j) const { return words_.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1)); }

  MultiPoly entry(int i, int j) const {
    const int nn = n();
    if (!nonzero(i, j)) return MultiPoly(nn);
    MultiPoly p = MultiPoly::constant(nn, 1);
    const std::string& w = word(i, j);
    for (std::size_t l = 0; l < w.size(); ++l)
      p *= MultiPoly::difference(nn, i, static_cast<int>(l) + 1, w[l] == 'x' ? 0 : 1);
    return p;
  }

 private:
  std::vector<int> levels_;
  std::vector<std::vector<std::string>> words_;
};

struct BlockInfo {
  std::vector<int> starts;  // 1-based first index of each block
  std::vector<int> sizes;
  std::vector<int> above;   // nonzero entries strictly above the diagonal, per block
  Partition type;
  bool minimal = true;
  int singleton_blocks() const {
    int c = 0;
    for (int s : sizes) c += (s == 1);
    return c;
  }
};

inline BlockInfo block_diagonal(const StaircaseForm& s) {
  const int n = s.n();
  BlockInfo info;
  for (int j = 1; j <= n; ++j)
    if (s.levels()[static_cast<std::size_t>(j - 1)] == j - 1) info.starts.push_back(j);
  if (info.starts.empty() || info.starts.front() != 1) throw std::invalid_argument("block_diagonal: first column must have level 0");
  std::vector<int> parts;
  for (std::size_t t = 0; t < info.starts.size(); ++t) {
    const int lo = info.starts[t];
    const int hi = t + 1 < info.starts.size() ? info.starts[t + 1] - 1 : n;
    info.sizes.push_back(hi - lo + 1);
    int cnt = 0;
    for (int i = lo; i <= hi; ++i)
      for (int j = i + 1; j <= hi; ++j)
        if (s.nonzero(i, j)) {
          ++cnt;
          if (j > i + 1) info.minimal = false;
        }
    info.above.push_back(cnt);
    if (cnt) parts.push_back(cnt);
  }
  info.type = Partition::from_unsorted(parts);
  return info;
}

namespace detail {

inline MultiPoly leibniz_det(const std::vector<std::vector<MultiPoly>>& a, int n) {
  MultiPoly det(a.empty() ? 0 : a[0][0].nvars());
  std::vector<int> perm(static_cast<std::size_t>(n));
  for_each_permutation(n, [&](const std::vector<int>& p, int sign) {
    for (int i = 0; i < n; ++i)
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(p[static_cast<std::size_t>(i)])].is_zero()) return;
    MultiPoly term = MultiPoly::constant(det.nvars(), sign);
    for (int i = 0; i < n; ++i) term *= a[static_cast<std::size_t>(i)][static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
    det += term;
  });
  return det;
}

}  // namespace detail

/// det S as the product of its diagonal block determinants (S is block lower triangular).
inline MultiPoly staircase_det(const StaircaseForm& s) {
  const int n = s.n();
  BlockInfo info;
  try {
    info = block_diagonal(s);
  } catch (const std::invalid_argument&) {
    return MultiPoly(n);
  }
  MultiPoly det = MultiPoly::constant(n, 1);
  for (std::size_t t = 0; t < info.starts.size(); ++t) {
    const int lo = info.starts[t];
    const int sz = info.sizes[t];
    std::vector<std::vector<MultiPoly>> block(static_cast<std::size_t>(sz), std::vector<MultiPoly>(static_cast<std::size_t>(sz)));
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) block[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s.entry(lo + i, lo + j);
    det *= detail::leibniz_det(block, sz);
    if (det.is_zero()) break;
  }
  return det;
}

struct MinimalStaircase {
  PointSet d;
  StaircaseForm form;
};

/// First D of bidegree (d1,d2), in enumeration order, whose staircase form is
/// minimal of partition type mu. Returns nullopt when the search is exhausted.
inline std::optional<MinimalStaircase> minimal_staircase(int n, int d1, int d2, const Partition& mu) {
  std::optional<MinimalStaircase> found;
  try {
    for_each_pointset(n, d1, d2, [&](const PointSet& d) {
      StaircaseForm s = StaircaseForm::from_pointset(d);
      BlockInfo info = block_diagonal(s);
      if (info.minimal && info.type == mu) {
        found.emplace(MinimalStaircase{d, s});
        throw 0;
      }
    });
  } catch (int) {
  }
  return found;
}

/// The canonical D with |P_i| = i-1 and bidegree (d1,d2): P_i takes as much
/// x-degree as is left, up to i-1.
inline PointSet staircase_pointset(int n, int d1, int d2) {
  if (n < 1 || d1 < 0 || d2 < 0 || d1 + d2 != binom2(n)) throw std::invalid_argument("staircase_pointset: need d1 + d2 = C(n,2)");
  std::vector<Point> pts;
  int rem = d1;
  for (int i = 1; i <= n; ++i) {
    int a = std::min(i - 1, rem);
    rem -= a;
    pts.push_back({a, i - 1 - a});
  }
  return PointSet(std::move(pts));
}

/// A representative of f_{d1,d2}.
inline MultiPoly staircase_delta(int n, int d1, int d2) { return delta(staircase_pointset(n, d1, d2)); }

}  // namespace qtcat
