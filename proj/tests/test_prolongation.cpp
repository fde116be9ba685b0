#include "doctest.h"

#include "cliffconn/prolongation.hpp"
#include "support.hpp"

using namespace cliffconn;

namespace {

// Independent count of dim g^(1): unknowns x_{a,beta} describe the slot maps
// v -> t(v, e_a) = sum_beta x_{a,beta} B_beta, and symmetry of t is imposed
// directly. The map x -> t is injective because the B_beta are independent.
std::size_t slot_form_dimension(const LieAlgebraBasis& g) {
  const std::size_t n = g.spec.model_dimension();
  const std::size_t d = g.dimension();
  const std::size_t unknowns = n * d;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        // t(e_b, e_a)_c - t(e_a, e_b)_c = 0
        std::vector<Rational> row(unknowns);
        for (std::size_t beta = 0; beta < d; ++beta) {
          row[a * d + beta] += g.basis[beta](c, b);
          row[b * d + beta] -= g.basis[beta](c, a);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return unknowns;
  RationalMatrix m(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) m(r, c) = rows[r][c];
  }
  return unknowns - rank(m);
}

std::vector<GroupSpec> small_specs() {
  std::vector<GroupSpec> out;
  for (const auto& sig : testing::signatures(3)) {
    for (int m = 1; static_cast<std::size_t>(m) * sig.dimension() <= 8; ++m) {
      out.emplace_back(sig, m, Flavor::Clifford);
      out.emplace_back(sig, m, Flavor::Cliffordian);
      out.emplace_back(sig, m, Flavor::Clifford, AffinorSide::Left);
    }
  }
  for (int n = 1; n <= 3; ++n) out.emplace_back(Signature(0, 0), n, Flavor::FullLinear);
  return out;
}

}  // namespace

TEST_SUITE("prolongation") {

TEST_CASE("group specification validation") {
  CHECK_THROWS_AS(GroupSpec(Signature(0, 2), 0, Flavor::Clifford), InvalidInput);
  CHECK_THROWS_AS(GroupSpec(Signature(0, 1), 2, Flavor::FullLinear), InvalidInput);
  CHECK_THROWS_AS(GroupSpec(Signature(0, 0), 2, Flavor::Clifford), InvalidInput);
  CHECK(GroupSpec(Signature(1, 2), 3, Flavor::Cliffordian).model_dimension() == 24);
  CHECK(flavor_from_string("cliffordian") == Flavor::Cliffordian);
  CHECK_THROWS_AS(flavor_from_string("quaternionic"), InvalidInput);
}

TEST_CASE("Clifford algebra dimension is m^2 k and commutes with the affinors") {
  for (const auto& sig : testing::signatures(3)) {
    for (int m = 1; m <= 2; ++m) {
      const GroupSpec spec(sig, m, Flavor::Clifford);
      const LieAlgebraBasis g = lie_algebra_basis(spec);
      const auto aff = structure_affinors(spec);
      CHECK(g.dimension() == static_cast<std::size_t>(m * m) * sig.dimension());
      for (const auto& b : g.basis) {
        for (const auto& f : aff) CHECK(b * f == f * b);
      }
    }
  }
}

TEST_CASE("Cliffordian algebra is the sum of commutant and affinor span") {
  for (const auto& sig : testing::signatures(3)) {
    const GroupSpec spec(sig, 1, Flavor::Cliffordian);
    const LieAlgebraBasis g = lie_algebra_basis(spec);
    const LieAlgebraBasis commutant = lie_algebra_basis(GroupSpec(sig, 1, Flavor::Clifford));
    const auto aff = structure_affinors(spec);
    const std::size_t n = spec.model_dimension();
    RationalMatrix all(commutant.dimension() + aff.size(), n * n);
    std::size_t r = 0;
    for (const auto* list : {&commutant.basis, &aff}) {
      for (const auto& b : *list) {
        const auto flat = flatten(b);
        for (std::size_t c = 0; c < flat.size(); ++c) all(r, c) = flat[c];
        ++r;
      }
    }
    CHECK(g.dimension() == rank(all));
  }
  CHECK(lie_algebra_basis(GroupSpec(Signature(0, 2), 1, Flavor::Cliffordian)).dimension() == 7);
}

TEST_CASE("membership constraints cut out the algebra") {
  testing::Gen gen(21);
  const GroupSpec spec(Signature(1, 1), 1, Flavor::Clifford);
  const Prolongation p(spec);
  for (int trial = 0; trial < 10; ++trial) {
    RationalMatrix b(4, 4);
    for (const auto& x : p.algebra().basis) b += gen.rational() * x;
    CHECK(p.in_algebra(b));
  }
  CHECK(p.in_algebra(RationalMatrix::identity(4)));
  CHECK_FALSE(p.in_algebra(p.affinors()[1]));
}

TEST_CASE("first prolongation dimension agrees with the slot-form count") {
  for (const auto& spec : small_specs()) {
    const Prolongation p(spec);
    CAPTURE(spec.sig().label());
    CAPTURE(spec.m());
    CAPTURE(to_string(spec.flavor()));
    CHECK(p.basis().size() == slot_form_dimension(p.algebra()));
    for (const auto& t : p.basis()) {
      CHECK(t.is_symmetric());
      for (std::size_t a = 0; a < p.model_dimension(); ++a) CHECK(p.in_algebra(t.matrix_fixing_first(a)));
    }
  }
}

TEST_CASE("documented dimensions") {
  CHECK(Prolongation(GroupSpec(Signature(0, 2), 1, Flavor::Clifford)).basis().empty());
  CHECK(Prolongation(GroupSpec(Signature(1, 1), 1, Flavor::Clifford)).basis().empty());
  CHECK(Prolongation(GroupSpec(Signature(0, 3), 1, Flavor::Clifford)).basis().size() == 0);
  CHECK(Prolongation(GroupSpec(Signature(0, 2), 1, Flavor::Cliffordian)).basis().size() == 4);
  CHECK(Prolongation(GroupSpec(Signature(0, 0), 2, Flavor::FullLinear)).basis().size() == 6);
  CHECK(Prolongation(GroupSpec(Signature(0, 0), 3, Flavor::FullLinear)).basis().size() == 18);
}

TEST_CASE("Clifford flavor prolongation vanishes for 2 <= s+t <= 4, m <= 2") {
  for (const auto& sig : testing::signatures(4, 2)) {
    for (int m = 1; m <= 2; ++m) {
      CAPTURE(sig.label());
      CAPTURE(m);
      CHECK(Prolongation(GroupSpec(sig, m, Flavor::Clifford)).basis().empty());
    }
  }
}

TEST_CASE("polarization: t(X, X) = 0 for all X forces t = 0") {
  testing::Gen gen(22);
  for (const Signature& sig : {Signature(0, 2), Signature(2, 0), Signature(1, 1)}) {
    const Prolongation p(GroupSpec(sig, 1, Flavor::Cliffordian));
    const std::size_t n = p.model_dimension();
    for (int trial = 0; trial < 5; ++trial) {
      BilinearMap t(n);
      for (const auto& b : p.basis()) t += gen.rational() * b;
      bool all_zero_diagonal = true;
      for (std::size_t a = 0; a < n && all_zero_diagonal; ++a) {
        const auto ea = OneForm::basis(n, a).components;
        for (std::size_t b = 0; b < n; ++b) {
          auto sum = ea;
          sum[b] += 1;
          // t(X, X) on e_a and e_a + e_b determines every t(e_a, e_b).
          for (const auto& v : {ea, sum}) {
            for (const auto& q : t.apply(v, v)) all_zero_diagonal = all_zero_diagonal && sgn(q) == 0;
          }
        }
      }
      CHECK(all_zero_diagonal == t.is_zero());
    }
  }
}

TEST_CASE("coordinates in the prolongation basis") {
  testing::Gen gen(23);
  const Prolongation p(GroupSpec(Signature(1, 1), 1, Flavor::Cliffordian));
  std::vector<Rational> coeffs;
  BilinearMap t(p.model_dimension());
  for (const auto& b : p.basis()) {
    coeffs.push_back(gen.rational());
    t += coeffs.back() * b;
  }
  const auto got = p.coordinates(t);
  REQUIRE(got.has_value());
  CHECK(*got == coeffs);
  BilinearMap outside(p.model_dimension());
  outside(0, 0, 0) = 1;
  CHECK_FALSE(p.contains(outside));
  CHECK_FALSE(p.coordinates(outside).has_value());
}

TEST_CASE("S^xi elements") {
  testing::Gen gen(24);
  for (const Signature& sig : {Signature(0, 2), Signature(2, 0), Signature(1, 1), Signature(0, 3)}) {
    const Prolongation p(GroupSpec(sig, 1, Flavor::Cliffordian));
    const SignVector eps = structure_signs(p.spec());
    const std::size_t n = p.model_dimension();
    CHECK(s_xi_element(p.affinors(), eps, OneForm{std::vector<Rational>(n)}).is_zero());
    CHECK(verify_sxi_membership(p, eps, OneForm{std::vector<Rational>(n)}).ok());
    for (std::size_t a = 0; a < n; ++a) CHECK(verify_sxi_membership(p, eps, OneForm::basis(n, a)).ok());
    const OneForm xi{gen.vector(n)};
    const BilinearMap s = s_xi_element(p.affinors(), eps, xi);
    CHECK(s.is_symmetric());
    CHECK(p.contains(s));
    CHECK(sxi_rank(p.spec(), eps) == n);
  }
  CHECK(verify_sxi_membership(GroupSpec(Signature(0, 2), 1, Flavor::Cliffordian), OneForm::basis(4, 0)).ok());
  CHECK_THROWS_AS(verify_sxi_membership(GroupSpec(Signature(0, 2), 1, Flavor::Clifford), OneForm::basis(4, 0)),
                  InvalidInput);
}

TEST_CASE("S^xi for (0,2) is nonzero and lies in the prolongation") {
  const GroupSpec spec(Signature(0, 2), 1, Flavor::Cliffordian);
  const BilinearMap s = s_xi_element(spec, structure_signs(spec), OneForm::basis(4, 0));
  CHECK_FALSE(s.is_zero());
  CHECK(Prolongation(spec).contains(s));
}

}  // TEST_SUITE
