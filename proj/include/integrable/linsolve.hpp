#pragma once

// Exact sparse linear algebra over Q used by the bounded solvers.

#include "integrable/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace integrable {

using SparseVector = std::map<std::size_t, Rational>;

/// Incremental column echelon form. Columns are added one at a time; every
/// column that reduces to zero contributes a kernel vector expressed in the
/// original column indices.
class ColumnEchelon {
 public:
  /// Returns the index of the new column.
  std::size_t add_column(const SparseVector& column);

  /// x with sum_j x_j col_j == rhs, or nullopt. Kernel directions are set to 0.
  std::optional<SparseVector> solve(const SparseVector& rhs) const;

  const std::vector<SparseVector>& kernel() const { return kernel_; }
  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return pivots_.size(); }

 private:
  struct Pivot {
    SparseVector reduced;      // leading entry (largest row) normalised to 1
    SparseVector combination;  // reduced == sum combination_j col_j
  };
  void reduce(SparseVector& vec, SparseVector& combo) const;

  std::map<std::size_t, Pivot> pivots_;  // keyed by leading row
  std::vector<SparseVector> kernel_;
  std::size_t columns_ = 0;
};

/// axpy on sparse vectors: y += a * x.
void axpy(SparseVector& y, const Rational& a, const SparseVector& x);

/// Assigns dense ids to arbitrary ordered keys.
template <class Key>
class RowIndex {
 public:
  std::size_t id(const Key& k) {
    auto [it, inserted] = ids_.try_emplace(k, keys_.size());
    if (inserted) keys_.push_back(k);
    return it->second;
  }
  std::optional<std::size_t> find(const Key& k) const {
    auto it = ids_.find(k);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }
  const Key& key(std::size_t id) const { return keys_[id]; }
  std::size_t size() const { return keys_.size(); }

 private:
  std::map<Key, std::size_t> ids_;
  std::vector<Key> keys_;
};

}  // namespace integrable
