#pragma once

#include <span>
#include <vector>

#include "cliffconn/matrix.hpp"

namespace cliffconn {

// Bilinear map t: V x V -> V on V = Q^N, stored as t(e_a, e_b) = sum_c
// t_{abc} e_c with flat index (a*N + b)*N + c. Used both for elements of a
// first prolongation (always symmetric) and for connection difference tensors
// (symmetric exactly when torsions agree).
class BilinearMap {
 public:
  BilinearMap() = default;
  explicit BilinearMap(std::size_t dim);
  BilinearMap(std::size_t dim, std::vector<Rational> coefficients);

  std::size_t dim() const { return dim_; }

  Rational& operator()(std::size_t a, std::size_t b, std::size_t c) { return data_[(a * dim_ + b) * dim_ + c]; }
  const Rational& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return data_[(a * dim_ + b) * dim_ + c];
  }
  std::span<const Rational> coefficients() const { return data_; }

  std::vector<Rational> apply(std::span<const Rational> x, std::span<const Rational> y) const;

  // Matrix of v -> t(v, e_a), entry (c, b) = t_{b a c}.
  RationalMatrix matrix_fixing_second(std::size_t a) const;
  // Matrix of v -> t(e_a, v), entry (c, b) = t_{a b c}.
  RationalMatrix matrix_fixing_first(std::size_t a) const;

  // t(x, y) - t(y, x).
  BilinearMap antisymmetric_part() const;

  bool is_symmetric() const;
  bool is_zero() const;

  BilinearMap& operator+=(const BilinearMap& other);
  BilinearMap& operator-=(const BilinearMap& other);
  BilinearMap& operator*=(const Rational& factor);
  friend BilinearMap operator+(BilinearMap a, const BilinearMap& b) { return a += b; }
  friend BilinearMap operator-(BilinearMap a, const BilinearMap& b) { return a -= b; }
  friend BilinearMap operator*(const Rational& f, BilinearMap a) { return a *= f; }
  friend bool operator==(const BilinearMap&, const BilinearMap&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

// Exact one-form on Q^N.
struct OneForm {
  std::vector<Rational> components;

  std::size_t dim() const { return components.size(); }
  Rational operator()(std::span<const Rational> v) const;
  static OneForm basis(std::size_t dim, std::size_t a);  // e_a^*
  friend bool operator==(const OneForm&, const OneForm&) = default;
};

}  // namespace cliffconn
