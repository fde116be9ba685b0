#include "cliffconn/echelon.hpp"

#include <algorithm>

#include "cliffconn/error.hpp"

namespace cliffconn {

SparseVector to_sparse(std::span<const Rational> dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (sgn(dense[i]) != 0) out.emplace_back(i, dense[i]);
  }
  return out;
}

std::vector<Rational> to_dense(const SparseVector& v, std::size_t size) {
  std::vector<Rational> out(size);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, -factor * ib->second);
      ++ib;
    } else {
      Rational v = ia->second - factor * ib->second;
      if (sgn(v) != 0) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

RowEchelon::RowEchelon(std::size_t cols) : cols_(cols), pivot_row_(cols, kNone) {}

SparseVector RowEchelon::reduce(SparseVector row) const {
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    const std::size_t p = pivot_row_[lead];
    if (p == kNone) break;
    const Rational factor = row.front().second;
    row = axpy(row, factor, rows_[p]);
  }
  return row;
}

bool RowEchelon::insert(SparseVector row) {
  if (!row.empty() && row.back().first >= cols_) {
    throw DimensionMismatch("row index exceeds column count");
  }
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const Rational lead = row.front().second;
  if (lead != 1) {
    for (auto& [i, v] : row) v /= lead;
  }
  pivot_row_[row.front().first] = rows_.size();
  rows_.push_back(std::move(row));
  return true;
}

std::vector<std::pair<std::size_t, SparseVector>> RowEchelon::rref() const {
  std::vector<std::size_t> pivots;
  pivots.reserve(rows_.size());
  for (const auto& r : rows_) pivots.push_back(r.front().first);
  std::sort(pivots.begin(), pivots.end());

  // Back-substitute from the last pivot column upwards; a row reduced this
  // way has zeros in every other pivot column.
  std::vector<SparseVector> reduced(cols_);
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    SparseVector row = rows_[pivot_row_[*it]];
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (pivot_row_[row[i].first] != kNone) hits.push_back(row[i]);
    }
    for (const auto& [c, v] : hits) row = axpy(row, v, reduced[c]);
    reduced[*it] = std::move(row);
  }

  std::vector<std::pair<std::size_t, SparseVector>> out;
  out.reserve(pivots.size());
  for (std::size_t p : pivots) out.emplace_back(p, std::move(reduced[p]));
  return out;
}

std::vector<SparseVector> RowEchelon::nullspace() const {
  const auto rows = rref();
  std::vector<SparseVector> by_free(cols_);
  for (const auto& [p, row] : rows) {
    for (std::size_t i = 1; i < row.size(); ++i) {
      by_free[row[i].first].emplace_back(p, -row[i].second);
    }
  }
  std::vector<SparseVector> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_row_[f] != kNone) continue;
    SparseVector v = std::move(by_free[f]);
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace cliffconn
