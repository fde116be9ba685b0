#include "cliffconn/bilinear.hpp"

#include "cliffconn/error.hpp"

namespace cliffconn {

BilinearMap::BilinearMap(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

BilinearMap::BilinearMap(std::size_t dim, std::vector<Rational> coefficients)
    : dim_(dim), data_(std::move(coefficients)) {
  if (data_.size() != dim * dim * dim) throw DimensionMismatch("bilinear map needs N^3 coefficients");
}

std::vector<Rational> BilinearMap::apply(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bilinear map argument length");
  std::vector<Rational> out(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (sgn(y[b]) == 0) continue;
      const Rational w = x[a] * y[b];
      for (std::size_t c = 0; c < dim_; ++c) {
        const Rational& t = (*this)(a, b, c);
        if (sgn(t) != 0) out[c] += w * t;
      }
    }
  }
  return out;
}

RationalMatrix BilinearMap::matrix_fixing_second(std::size_t a) const {
  RationalMatrix m(dim_, dim_);
  for (std::size_t b = 0; b < dim_; ++b) {
    for (std::size_t c = 0; c < dim_; ++c) m(c, b) = (*this)(b, a, c);
  }
  return m;
}

RationalMatrix BilinearMap::matrix_fixing_first(std::size_t a) const {
  RationalMatrix m(dim_, dim_);
  for (std::size_t b = 0; b < dim_; ++b) {
    for (std::size_t c = 0; c < dim_; ++c) m(c, b) = (*this)(a, b, c);
  }
  return m;
}

BilinearMap BilinearMap::antisymmetric_part() const {
  BilinearMap out(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    for (std::size_t b = 0; b < dim_; ++b) {
      for (std::size_t c = 0; c < dim_; ++c) out(a, b, c) = (*this)(a, b, c) - (*this)(b, a, c);
    }
  }
  return out;
}

bool BilinearMap::is_symmetric() const {
  for (std::size_t a = 0; a < dim_; ++a) {
    for (std::size_t b = a + 1; b < dim_; ++b) {
      for (std::size_t c = 0; c < dim_; ++c) {
        if ((*this)(a, b, c) != (*this)(b, a, c)) return false;
      }
    }
  }
  return true;
}

bool BilinearMap::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

BilinearMap& BilinearMap::operator+=(const BilinearMap& other) {
  if (other.dim_ != dim_) throw DimensionMismatch("bilinear map dimensions differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

BilinearMap& BilinearMap::operator-=(const BilinearMap& other) {
  if (other.dim_ != dim_) throw DimensionMismatch("bilinear map dimensions differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

BilinearMap& BilinearMap::operator*=(const Rational& factor) {
  for (auto& x : data_) x *= factor;
  return *this;
}

Rational OneForm::operator()(std::span<const Rational> v) const {
  if (v.size() != components.size()) throw DimensionMismatch("one-form argument length");
  Rational out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0 && sgn(components[i]) != 0) out += components[i] * v[i];
  }
  return out;
}

OneForm OneForm::basis(std::size_t dim, std::size_t a) {
  OneForm f{std::vector<Rational>(dim)};
  f.components.at(a) = 1;
  return f;
}

}  // namespace cliffconn
