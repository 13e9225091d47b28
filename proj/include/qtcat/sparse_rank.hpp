// Incremental sparse row echelon form over Q.
#pragma once

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qtcat {

/// Sorted (column, value) pairs with no zero values.
using SparseRow = std::vector<std::pair<int, mpq_class>>;

inline SparseRow to_sparse_row(const std::map<int, mpq_class>& m) {
  SparseRow r;
  r.reserve(m.size());
  for (const auto& [c, v] : m)
    if (v != 0) r.emplace_back(c, v);
  return r;
}

/// Rows are inserted one at a time; each surviving row is stored with
/// leading coefficient 1 at its smallest column, which becomes its pivot.
class SparseEchelon {
 public:
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<SparseRow>& rows() const noexcept { return rows_; }

  /// Residual of `row` after eliminating every pivot column.
  SparseRow reduce(const SparseRow& row) const {
    std::map<int, mpq_class> work;
    for (const auto& [c, v] : row)
      if (v != 0) work[c] += v;
    auto it = work.begin();
    while (it != work.end()) {
      if (it->second == 0) {
        it = work.erase(it);
        continue;
      }
      auto pv = pivot_of_.find(it->first);
      if (pv == pivot_of_.end()) {
        ++it;
        continue;
      }
      const int col = it->first;
      const mpq_class factor = it->second;
      const SparseRow& prow = rows_[pv->second];
      for (const auto& [c, v] : prow) {
        auto& slot = work[c];
        slot -= factor * v;
      }
      it = work.lower_bound(col);
    }
    return to_sparse_row(work);
  }

  bool contains(const SparseRow& row) const { return reduce(row).empty(); }

  /// Returns true when the row was independent of the current span.
  bool insert(const SparseRow& row) {
    SparseRow r = reduce(row);
    if (r.empty()) return false;
    const mpq_class lead = r.front().second;
    if (lead != 1)
      for (auto& [c, v] : r) v /= lead;
    pivot_of_.emplace(r.front().first, rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

 private:
  std::vector<SparseRow> rows_;
  std::unordered_map<int, std::size_t> pivot_of_;
};

}  // namespace qtcat
