#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace cliffconn {

// Exact rational scalar used throughout. GMP keeps values canonical
// (reduced, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

// (numerator, denominator) rendered as decimal strings.
inline std::pair<std::string, std::string> to_strings(const Rational& q) {
  return {q.get_num().get_str(), q.get_den().get_str()};
}

inline Rational from_strings(const std::string& num, const std::string& den) {
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::vector<Rational> to_rationals(const std::vector<long>& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace cliffconn
