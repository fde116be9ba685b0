#include "cliffconn/multivector.hpp"

namespace cliffconn {

MultiVector MultiVector::scalar(const Rational& value) { return blade(kUnitBlade, value); }

MultiVector MultiVector::blade(Blade b, const Rational& coefficient) {
  MultiVector out;
  out.add(b, coefficient);
  return out;
}

Rational MultiVector::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiVector::add(Blade b, const Rational& coefficient) {
  if (sgn(coefficient) == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (sgn(it->second) == 0) terms_.erase(it);
}

MultiVector& MultiVector::operator+=(const MultiVector& other) {
  for (const auto& [b, c] : other.terms_) add(b, c);
  return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& other) {
  for (const auto& [b, c] : other.terms_) add(b, -c);
  return *this;
}

MultiVector& MultiVector::operator*=(const Rational& factor) {
  if (sgn(factor) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= factor;
  return *this;
}

std::string MultiVector::to_string(const Signature& sig) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*" + blade_name(b, sig);
  }
  return out;
}

MultiVector mv_mul(const MultiVector& x, const MultiVector& y, const Signature& sig) {
  MultiVector out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      const SignedBlade p = blade_mul(a, b, sig);
      Rational c = ca * cb;
      if (p.sign < 0) c = -c;
      out.add(p.blade, c);
    }
  }
  return out;
}

}  // namespace cliffconn
