#include "cliffconn/matrix.hpp"

#include "cliffconn/echelon.hpp"
#include "cliffconn/error.hpp"

namespace cliffconn {

namespace {

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix shapes differ: " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

RowEchelon echelon_of_rows(const RationalMatrix& a) {
  RowEchelon e(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) e.insert_dense(a.row(r));
  return e;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw DimensionMismatch("entry count does not match shape");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  RationalMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged row list");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

RationalMatrix RationalMatrix::column(std::span<const Rational> values) {
  return RationalMatrix(values.size(), 1, std::vector<Rational>(values.begin(), values.end()));
}

std::vector<Rational> RationalMatrix::column_values(std::size_t c) const {
  std::vector<Rational> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool RationalMatrix::is_integral() const {
  for (const auto& x : data_) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : data_) n += sgn(x) != 0;
  return n;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& factor) {
  for (auto& x : data_) x *= factor;
  return *this;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t x = 0; x < a.cols(); ++x) {
      const Rational& f = a(i, x);
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& g = b(x, j);
        if (sgn(g) != 0) out(i, j) += f * g;
      }
    }
  }
  return out;
}

std::vector<Rational> mat_vec(const RationalMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw DimensionMismatch("mat_vec: vector length does not match");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) != 0 && sgn(x[j]) != 0) out[i] += a(i, j) * x[j];
    }
  }
  return out;
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& f = a(i, j);
      if (sgn(f) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = f * b(k, l);
        }
      }
    }
  }
  return out;
}

RationalMatrix block_diagonal(const RationalMatrix& a, std::size_t copies) {
  return kron(RationalMatrix::identity(copies), a);
}

std::size_t rank(const RationalMatrix& a) { return echelon_of_rows(a).rank(); }

std::vector<RationalMatrix> nullspace(const RationalMatrix& a) {
  std::vector<RationalMatrix> out;
  for (const auto& v : echelon_of_rows(a).nullspace()) {
    out.push_back(RationalMatrix::column(to_dense(v, a.cols())));
  }
  return out;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length");
  const std::size_t n = a.cols();
  RowEchelon e(n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseVector row = to_sparse(a.row(r));
    if (sgn(b[r]) != 0) row.emplace_back(n, b[r]);
    e.insert(std::move(row));
  }
  std::vector<Rational> x(n);
  for (const auto& [p, row] : e.rref()) {
    if (p == n) return std::nullopt;
    if (row.back().first == n) x[p] = row.back().second;
  }
  return x;
}

std::vector<Rational> flatten(const RationalMatrix& a) {
  return {a.entries().begin(), a.entries().end()};
}

RationalMatrix from_flat(std::size_t rows, std::size_t cols, std::span<const Rational> values) {
  return RationalMatrix(rows, cols, std::vector<Rational>(values.begin(), values.end()));
}

}  // namespace cliffconn
