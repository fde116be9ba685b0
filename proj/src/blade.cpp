#include "cliffconn/blade.hpp"

#include <algorithm>

#include "cliffconn/error.hpp"

namespace cliffconn {

Signature::Signature(int s, int t) : s_(s), t_(t) {
  if (s < 0 || t < 0) throw InvalidInput("signature counts must be non-negative");
  if (s + t > kMaxGenerators) throw InvalidInput("too many generators: " + label());
}

std::string Signature::label() const {
  return "Cl(" + std::to_string(s_) + "," + std::to_string(t_) + ")";
}

std::vector<int> Blade::generators() const {
  std::vector<int> out;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

SignedBlade blade_mul(Blade a, Blade b, const Signature& sig) {
  int swaps = 0;
  for (std::uint32_t m = b.mask; m != 0; m &= m - 1) {
    const int g = std::countr_zero(m);
    swaps += std::popcount(a.mask >> (g + 1));
  }
  int sign = (swaps & 1) ? -1 : 1;
  for (std::uint32_t m = a.mask & b.mask; m != 0; m &= m - 1) {
    sign *= sig.square(std::countr_zero(m));
  }
  return {Blade{a.mask ^ b.mask}, sign};
}

std::string blade_name(Blade b, const Signature& sig) {
  if (b.mask == 0) return "E";
  std::string out;
  for (int g : b.generators()) {
    if (sig.is_complex_unit(g)) {
      out += "I" + std::to_string(g + 1);
    } else {
      out += "J" + std::to_string(g - sig.t() + 1);
    }
  }
  return out;
}

BladeBasis::BladeBasis(Signature sig) : sig_(sig) {
  const std::size_t k = sig.dimension();
  order_.reserve(k);
  for (std::uint32_t m = 0; m < k; ++m) order_.push_back(Blade{m});
  std::sort(order_.begin(), order_.end(), [](Blade x, Blade y) {
    if (x.grade() != y.grade()) return x.grade() < y.grade();
    return x.generators() < y.generators();
  });
  index_.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) index_[order_[i].mask] = i;
}

std::vector<std::string> BladeBasis::names() const {
  std::vector<std::string> out;
  out.reserve(order_.size());
  for (Blade b : order_) out.push_back(blade_name(b, sig_));
  return out;
}

}  // namespace cliffconn
