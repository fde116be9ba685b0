#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cliffconn {

// Cl(s,t): s generators squaring to +E (J_1..J_s), t generators squaring
// to -E (I_1..I_t). Generator g (0-based) is I_{g+1} for g < t and
// J_{g-t+1} otherwise.
class Signature {
 public:
  static constexpr int kMaxGenerators = 20;

  Signature() = default;
  Signature(int s, int t);

  int s() const { return s_; }
  int t() const { return t_; }
  int generators() const { return s_ + t_; }
  std::size_t dimension() const { return std::size_t{1} << (s_ + t_); }

  bool is_complex_unit(int g) const { return g < t_; }
  int square(int g) const { return g < t_ ? -1 : 1; }

  std::string label() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  int s_ = 0;
  int t_ = 0;
};

// A basis monomial: bit g set means generator g participates. The product is
// always taken in ascending generator order.
struct Blade {
  std::uint32_t mask = 0;

  int grade() const { return std::popcount(mask); }
  bool contains(int g) const { return (mask >> g) & 1u; }
  std::vector<int> generators() const;

  friend bool operator==(Blade, Blade) = default;
  friend auto operator<=>(Blade, Blade) = default;
};

inline constexpr Blade kUnitBlade{0};

inline Blade generator_blade(int g) { return Blade{std::uint32_t{1} << g}; }

struct SignedBlade {
  Blade blade;
  int sign = 1;

  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

// Product of two basis blades in Cl(s,t). The resulting blade is the
// symmetric difference of the generator sets; the sign collects one factor
// -1 per transposition needed to sort the concatenation and the square of
// every repeated generator.
SignedBlade blade_mul(Blade a, Blade b, const Signature& sig);

// "E", "I1", "J2", "I1I2J1", ...
std::string blade_name(Blade b, const Signature& sig);

// Canonical ordering of all 2^(s+t) blades: ascending grade, then
// lexicographic on the ascending generator-index tuple.
class BladeBasis {
 public:
  explicit BladeBasis(Signature sig);

  const Signature& signature() const { return sig_; }
  std::size_t size() const { return order_.size(); }
  Blade operator[](std::size_t i) const { return order_[i]; }
  std::size_t index_of(Blade b) const { return index_[b.mask]; }
  std::span<const Blade> blades() const { return order_; }
  std::vector<std::string> names() const;

  // Index of the blade equal to the generator g.
  std::size_t generator_index(int g) const { return index_of(generator_blade(g)); }

 private:
  Signature sig_;
  std::vector<Blade> order_;
  std::vector<std::size_t> index_;
};

}  // namespace cliffconn
