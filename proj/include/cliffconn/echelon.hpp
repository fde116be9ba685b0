#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cliffconn/rational.hpp"

namespace cliffconn {

// Sparse vector: (index, value) pairs with strictly increasing indices and
// nonzero values.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector to_sparse(std::span<const Rational> dense);
std::vector<Rational> to_dense(const SparseVector& v, std::size_t size);

// Incremental exact Gaussian elimination over the rationals. Rows are added
// one at a time; each is reduced against the existing pivots by its leading
// entry until it either vanishes or exposes a fresh pivot column, and is
// then stored normalised to a leading 1. The reduced row echelon form (and
// hence nullspace basis) is unique, so results do not depend on insertion
// order.
//
// The constraint systems built for the prolongation problems have a few
// nonzeros per row and thousands of columns; this keeps them sparse.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  // Returns true iff the row was independent of the rows seen so far.
  bool insert(SparseVector row);
  bool insert_dense(std::span<const Rational> row) { return insert(to_sparse(row)); }

  // Residue of `row` after eliminating leading entries; empty iff the row
  // lies in the span of the inserted rows.
  SparseVector reduce(SparseVector row) const;
  bool contains(const SparseVector& row) const { return reduce(row).empty(); }

  // Fully reduced pivot rows, ordered by pivot column.
  std::vector<std::pair<std::size_t, SparseVector>> rref() const;

  // Right-kernel basis of the inserted rows (see nullspace() in matrix.hpp).
  std::vector<SparseVector> nullspace() const;

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t cols_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivot_row_;  // column -> index into rows_
};

// a - factor * b for sorted sparse vectors.
SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b);

}  // namespace cliffconn
