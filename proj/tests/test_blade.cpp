#include <string>

#include "doctest.h"

#include "cliffconn/error.hpp"
#include "cliffconn/multivector.hpp"
#include "support.hpp"

using namespace cliffconn;

namespace {

// Product by literal rewriting of the generator word: bubble sort with a
// sign flip per swap of distinct letters, then cancel equal neighbours.
SignedBlade rewrite_product(Blade a, Blade b, const Signature& sig) {
  std::vector<int> word = a.generators();
  for (int g : b.generators()) word.push_back(g);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
        changed = true;
      } else if (word[i] == word[i + 1]) {
        sign *= sig.square(word[i]);
        word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  Blade out;
  for (int g : word) out.mask |= 1u << g;
  return {out, sign};
}

}  // namespace

TEST_SUITE("blade") {

TEST_CASE("signature bookkeeping") {
  Signature sig(2, 1);
  CHECK(sig.generators() == 3);
  CHECK(sig.dimension() == 8);
  CHECK(sig.square(0) == -1);
  CHECK(sig.square(1) == 1);
  CHECK(sig.square(2) == 1);
  CHECK(sig.label() == "Cl(2,1)");
  CHECK_THROWS_AS(Signature(-1, 0), InvalidInput);
  CHECK_THROWS_AS(Signature(15, 6), InvalidInput);
}

TEST_CASE("blade product agrees with word rewriting") {
  for (const auto& sig : testing::signatures(5, 0)) {
    const std::uint32_t count = static_cast<std::uint32_t>(sig.dimension());
    for (std::uint32_t a = 0; a < count; ++a) {
      for (std::uint32_t b = 0; b < count; ++b) {
        const SignedBlade got = blade_mul(Blade{a}, Blade{b}, sig);
        const SignedBlade want = rewrite_product(Blade{a}, Blade{b}, sig);
        REQUIRE(got == want);
      }
    }
  }
}

TEST_CASE("generator relations") {
  Signature sig(1, 2);
  for (int g = 0; g < 3; ++g) {
    const SignedBlade sq = blade_mul(generator_blade(g), generator_blade(g), sig);
    CHECK(sq.blade == kUnitBlade);
    CHECK(sq.sign == sig.square(g));
    for (int h = g + 1; h < 3; ++h) {
      const SignedBlade gh = blade_mul(generator_blade(g), generator_blade(h), sig);
      const SignedBlade hg = blade_mul(generator_blade(h), generator_blade(g), sig);
      CHECK(gh.blade == hg.blade);
      CHECK(gh.sign == -hg.sign);
    }
  }
}

TEST_CASE("canonical order and names") {
  BladeBasis basis(Signature(1, 2));
  CHECK(basis.names() == std::vector<std::string>{"E", "I1", "I2", "J1", "I1I2", "I1J1", "I2J1", "I1I2J1"});
  for (std::size_t i = 0; i < basis.size(); ++i) CHECK(basis.index_of(basis[i]) == i);
  for (std::size_t i = 1; i < basis.size(); ++i) CHECK(basis[i - 1].grade() <= basis[i].grade());
  CHECK(basis.generator_index(2) == 3);
  CHECK(BladeBasis(Signature(0, 0)).names() == std::vector<std::string>{"E"});
}

TEST_CASE("multivector product is associative and distributive") {
  testing::Gen gen(11);
  for (const auto& sig : testing::signatures(4)) {
    auto random_mv = [&] {
      MultiVector x;
      for (Blade b : BladeBasis(sig).blades()) {
        if (gen.coin()) x.add(b, gen.rational());
      }
      return x;
    };
    for (int trial = 0; trial < 10; ++trial) {
      const MultiVector x = random_mv(), y = random_mv(), z = random_mv();
      CHECK(mv_mul(mv_mul(x, y, sig), z, sig) == mv_mul(x, mv_mul(y, z, sig), sig));
      CHECK(mv_mul(x, y + z, sig) == mv_mul(x, y, sig) + mv_mul(x, z, sig));
      CHECK(mv_mul(MultiVector::scalar(1), x, sig) == x);
    }
  }
}

TEST_CASE("multivector bookkeeping") {
  Signature sig(0, 2);
  MultiVector x = MultiVector::blade(generator_blade(0), 2);
  x.add(generator_blade(0), -2);
  CHECK(x.is_zero());
  const MultiVector i1 = MultiVector::blade(generator_blade(0));
  const MultiVector i2 = MultiVector::blade(generator_blade(1));
  const MultiVector k = mv_mul(i1, i2, sig);
  CHECK(mv_mul(k, k, sig) == MultiVector::scalar(-1));
  CHECK(k.coefficient(Blade{3}) == 1);
  CHECK(MultiVector::scalar(Rational(1, 2)).to_string(sig) == "1/2*E");
}

}  // TEST_SUITE
