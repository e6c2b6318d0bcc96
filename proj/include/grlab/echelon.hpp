#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "grlab/errors.hpp"

namespace grlab {

/// A subspace of k^{[lo, hi)} kept in reduced row echelon form.
///
/// Column c stands for the monomial t^(lo + c). The pivot of a row is its
/// lowest nonzero column, so pivots are exactly the valuations attained by
/// elements of the subspace. Every row is monic at its pivot and vanishes at
/// every other row's pivot.
template <class Field>
class EchelonSpace {
 public:
  using Element = typename Field::Element;
  using Vector = std::vector<Element>;

  EchelonSpace(const Field& field, int lo, int hi) : field_(&field), lo_(lo), hi_(std::max(lo, hi)) {}

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }
  std::size_t width() const noexcept { return static_cast<std::size_t>(hi_ - lo_); }
  std::size_t dimension() const noexcept { return rows_.size(); }
  const Field& field() const noexcept { return *field_; }

  /// Rows ordered by pivot.
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  /// Pivot exponents (not column indices), ascending.
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  Vector zero_vector() const { return Vector(width(), field_->zero()); }

  /// Subtracts the row-space component; what remains is the normal form.
  void reduce(Vector& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t col = static_cast<std::size_t>(pivots_[i] - lo_);
      if (field_->is_zero(v[col])) continue;
      const Element c = v[col];
      const Vector& row = rows_[i];
      for (std::size_t k = col; k < v.size(); ++k) {
        if (!field_->is_zero(row[k])) v[k] = field_->sub(v[k], field_->mul(c, row[k]));
      }
    }
  }

  bool is_member(Vector v) const {
    reduce(v);
    return is_zero_vector(v);
  }

  /// Adds v to the spanning set. Returns false when v was already in the span.
  bool insert(Vector v) {
    reduce(v);
    std::size_t col = 0;
    while (col < v.size() && field_->is_zero(v[col])) ++col;
    if (col == v.size()) return false;
    const Element inv = field_->inv(v[col]);
    for (std::size_t k = col; k < v.size(); ++k) {
      if (!field_->is_zero(v[k])) v[k] = field_->mul(v[k], inv);
    }
    // Clear the new pivot column from the existing rows.
    for (Vector& row : rows_) {
      if (field_->is_zero(row[col])) continue;
      const Element c = row[col];
      for (std::size_t k = col; k < row.size(); ++k) {
        if (!field_->is_zero(v[k])) row[k] = field_->sub(row[k], field_->mul(c, v[k]));
      }
    }
    const int pivot = lo_ + static_cast<int>(col);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    const auto idx = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
  }

  bool is_zero_vector(const Vector& v) const {
    return std::all_of(v.begin(), v.end(), [&](const Element& e) { return field_->is_zero(e); });
  }

 private:
  const Field* field_;
  int lo_;
  int hi_;
  std::vector<Vector> rows_;
  std::vector<int> pivots_;
};

/// Basis of {c : Σ c_i vectors[i] = 0}. All vectors must share one width.
template <class Field>
std::vector<std::vector<typename Field::Element>> kernel_combinations(
    const Field& field, const std::vector<std::vector<typename Field::Element>>& vectors) {
  using Element = typename Field::Element;
  using Vector = std::vector<Element>;
  const std::size_t n = vectors.size();
  if (n == 0) return {};
  const std::size_t width = vectors.front().size();

  // Augmented elimination: each stored row carries the combination producing it.
  std::vector<Vector> rows;
  std::vector<Vector> combos;
  std::vector<std::size_t> pivot_cols;
  std::vector<Vector> kernel;
  for (std::size_t i = 0; i < n; ++i) {
    if (vectors[i].size() != width) throw Error(ErrorCode::InvalidInput, "kernel vectors differ in width");
    Vector v = vectors[i];
    Vector combo(n, field.zero());
    combo[i] = field.one();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Element c = v[pivot_cols[r]];
      if (field.is_zero(c)) continue;
      for (std::size_t k = 0; k < width; ++k) {
        if (!field.is_zero(rows[r][k])) v[k] = field.sub(v[k], field.mul(c, rows[r][k]));
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (!field.is_zero(combos[r][k])) combo[k] = field.sub(combo[k], field.mul(c, combos[r][k]));
      }
    }
    std::size_t col = 0;
    while (col < width && field.is_zero(v[col])) ++col;
    if (col == width) {
      kernel.push_back(std::move(combo));
      continue;
    }
    const Element inv = field.inv(v[col]);
    for (auto& e : v) e = field.mul(e, inv);
    for (auto& e : combo) e = field.mul(e, inv);
    rows.push_back(std::move(v));
    combos.push_back(std::move(combo));
    pivot_cols.push_back(col);
  }
  return kernel;
}

}  // namespace grlab
