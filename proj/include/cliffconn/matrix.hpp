#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "cliffconn/rational.hpp"

namespace cliffconn {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static RationalMatrix column(std::span<const Rational> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> entries() const { return data_; }
  std::span<const Rational> row(std::size_t r) const {
    return std::span<const Rational>(data_).subspan(r * cols_, cols_);
  }
  std::vector<Rational> column_values(std::size_t c) const;

  bool is_zero() const;
  bool is_integral() const;
  std::size_t nonzeros() const;

  RationalMatrix transpose() const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& factor);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator-(RationalMatrix a) { return a *= Rational(-1); }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& f) { return a *= f; }
  friend RationalMatrix operator*(const Rational& f, RationalMatrix a) { return a *= f; }
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Exact product; skips zero entries of the left factor, so monomial and other
// sparse inputs cost roughly rows * nnz-per-row * cols. Throws
// DimensionMismatch when a.cols() != b.rows().
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) { return mat_mul(a, b); }

std::vector<Rational> mat_vec(const RationalMatrix& a, std::span<const Rational> x);

// Kronecker product; entry (i*b.rows()+k, j*b.cols()+l) = a(i,j) * b(k,l),
// so the outer factor a indexes the blocks.
RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

// Block-diagonal matrix with `copies` copies of a.
RationalMatrix block_diagonal(const RationalMatrix& a, std::size_t copies);

std::size_t rank(const RationalMatrix& a);

// Basis of the right kernel as column vectors, read off the reduced row
// echelon form: one vector per free column, in ascending column order, with
// a 1 in its free column. Empty iff the kernel is trivial.
std::vector<RationalMatrix> nullspace(const RationalMatrix& a);

// Some x with a x = b, or nullopt if the system is inconsistent. Free
// variables are set to zero.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, std::span<const Rational> b);

// Row-major flattening; the inverse of from_flat.
std::vector<Rational> flatten(const RationalMatrix& a);
RationalMatrix from_flat(std::size_t rows, std::size_t cols, std::span<const Rational> values);

}  // namespace cliffconn
