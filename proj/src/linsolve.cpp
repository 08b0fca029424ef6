#include "integrable/linsolve.hpp"

namespace integrable {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (a == 0) return;
  for (const auto& [i, v] : x) {
    auto [it, inserted] = y.try_emplace(i, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

void ColumnEchelon::reduce(SparseVector& vec, SparseVector& combo) const {
  while (!vec.empty()) {
    auto lead = vec.rbegin();
    auto pit = pivots_.find(lead->first);
    if (pit == pivots_.end()) return;
    Rational factor = -lead->second;
    axpy(vec, factor, pit->second.reduced);
    axpy(combo, factor, pit->second.combination);
  }
}

std::size_t ColumnEchelon::add_column(const SparseVector& column) {
  std::size_t index = columns_++;
  SparseVector vec = column;
  SparseVector combo{{index, Rational(1)}};
  reduce(vec, combo);
  if (vec.empty()) {
    kernel_.push_back(std::move(combo));
    return index;
  }
  std::size_t lead = vec.rbegin()->first;
  Rational inv = 1 / vec.rbegin()->second;
  for (auto& [i, v] : vec) v *= inv;
  for (auto& [i, v] : combo) v *= inv;
  pivots_.emplace(lead, Pivot{std::move(vec), std::move(combo)});
  return index;
}

std::optional<SparseVector> ColumnEchelon::solve(const SparseVector& rhs) const {
  SparseVector vec = rhs;
  SparseVector combo;
  reduce(vec, combo);
  if (!vec.empty()) return std::nullopt;
  // vec was reduced to zero by subtracting sum combo_j col_j from rhs.
  for (auto& [i, v] : combo) v = -v;
  return combo;
}

}  // namespace integrable
