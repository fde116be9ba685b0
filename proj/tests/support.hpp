#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cliffconn/blade.hpp"
#include "cliffconn/matrix.hpp"

namespace testing {

// Deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double real(double lo, double hi) { return lo + (hi - lo) * (static_cast<double>(rng_() >> 11) * 0x1.0p-53); }
  bool coin() { return rng_() & 1u; }

  cliffconn::Rational rational(long range = 5, long max_den = 4) {
    cliffconn::Rational q(integer(-range, range), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  // Entries zero with probability about `zero_fraction`.
  cliffconn::RationalMatrix matrix(std::size_t rows, std::size_t cols, double zero_fraction = 0.3) {
    cliffconn::RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (real(0, 1) >= zero_fraction) m(r, c) = rational();
      }
    }
    return m;
  }

  std::vector<cliffconn::Rational> vector(std::size_t n, long range = 3) {
    std::vector<cliffconn::Rational> v(n);
    for (auto& x : v) x = integer(-range, range);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<cliffconn::Signature> signatures(int max_generators, int min_generators = 1) {
  std::vector<cliffconn::Signature> out;
  for (int n = min_generators; n <= max_generators; ++n) {
    for (int s = 0; s <= n; ++s) out.emplace_back(s, n - s);
  }
  return out;
}

}  // namespace testing
