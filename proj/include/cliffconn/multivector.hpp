#pragma once

#include <map>
#include <string>

#include "cliffconn/blade.hpp"
#include "cliffconn/rational.hpp"

namespace cliffconn {

// Element of Cl(s,t) with exact coefficients. Absent blades are zero; zero
// coefficients are never stored.
class MultiVector {
 public:
  MultiVector() = default;

  static MultiVector scalar(const Rational& value);
  static MultiVector blade(Blade b, const Rational& coefficient = 1);

  Rational coefficient(Blade b) const;
  void add(Blade b, const Rational& coefficient);

  const std::map<Blade, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MultiVector& operator+=(const MultiVector& other);
  MultiVector& operator-=(const MultiVector& other);
  MultiVector& operator*=(const Rational& factor);

  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend MultiVector operator*(MultiVector a, const Rational& f) { return a *= f; }
  friend MultiVector operator*(const Rational& f, MultiVector a) { return a *= f; }
  friend bool operator==(const MultiVector&, const MultiVector&) = default;

  std::string to_string(const Signature& sig) const;

 private:
  std::map<Blade, Rational> terms_;
};

// Bilinear extension of blade_mul.
MultiVector mv_mul(const MultiVector& x, const MultiVector& y, const Signature& sig);

}  // namespace cliffconn
