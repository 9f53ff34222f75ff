#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hyperarr {

/// Sparse rational vector: (index, coefficient) pairs, indices strictly
/// increasing, no zero coefficients.
class SparseVector {
public:
  using Entry = std::pair<std::size_t, mpq_class>;

  SparseVector() = default;
  /// Accepts unsorted entries with repeats; sums and drops zeros.
  static SparseVector from_entries(std::vector<Entry> entries);
  static SparseVector unit(std::size_t i) { return from_entries({{i, 1}}); }

  const std::vector<Entry>& entries() const { return e_; }
  bool empty() const { return e_.empty(); }
  std::size_t nonzeros() const { return e_.size(); }
  mpq_class at(std::size_t i) const;
  std::size_t first_index() const { return e_.front().first; }
  std::size_t last_index() const { return e_.back().first; }

  /// this += a * o
  void add_scaled(const SparseVector& o, const mpq_class& a);
  SparseVector& operator*=(const mpq_class& a);
  friend SparseVector operator+(SparseVector a, const SparseVector& b) {
    a.add_scaled(b, 1);
    return a;
  }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) {
    a.add_scaled(b, -1);
    return a;
  }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
  std::vector<Entry> e_;
};

/// Reduced row echelon basis of a growing subspace. Each stored row has
/// coefficient 1 at its pivot (its first index) and 0 at every other pivot.
/// Rows remember which inserted vectors they combine, which gives kernels
/// and solutions of linear systems.
class RowEchelon {
public:
  /// Inserts v (the n-th insertion, counting from 0). Returns true if v was
  /// independent of the earlier insertions; otherwise records the relation.
  bool insert(const SparseVector& v);

  /// v minus its projection onto the span; zero iff v lies in the span.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  /// Coefficients c over the inserted vectors with sum c_i v_i = target, or
  /// nullopt if target is outside the span.
  std::optional<SparseVector> solve(const SparseVector& target) const;

  /// Coefficient vectors of the relations among inserted vectors, one per
  /// dependent insertion; together a basis of the kernel.
  const std::vector<SparseVector>& relations() const { return relations_; }

  /// Pivot indices in increasing order.
  std::vector<std::size_t> pivots() const;
  const SparseVector& row(std::size_t pivot) const { return rows_.at(pivot).first; }

private:
  // pivot -> (row, combination of inserted vectors giving the row)
  std::map<std::size_t, std::pair<SparseVector, SparseVector>> rows_;
  std::vector<SparseVector> relations_;
  std::size_t inserted_ = 0;
};

std::size_t rank_of(const std::vector<SparseVector>& vectors);

/// Basis of {x : sum x_i images[i] = 0}.
std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& images);

/// Result of reducing columns left to right so that their last nonzero rows
/// ("lows") are distinct. low[j] is empty when column j reduces to zero.
struct ColumnReduction {
  std::vector<std::optional<std::size_t>> low;
};

/// Rows and columns must already be listed in filtration order.
ColumnReduction reduce_columns(std::vector<SparseVector> columns);

} // namespace hyperarr
