#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffconn/blade.hpp"
#include "cliffconn/error.hpp"
#include "cliffconn/matrix.hpp"

namespace cliffconn {

enum class RepKind { LeftRegular, RightRegular, Periodicity };

std::string to_string(RepKind kind);
RepKind rep_kind_from_string(const std::string& name);  // "left", "right", "periodicity"

// k = 2^(s+t) matrices of size k x k, matrices[i] representing basis()[i].
// Left-regular and periodicity sets are homomorphic images of the blade
// basis; the right-regular set is anti-homomorphic (R_a R_b = R_{ba}).
struct RepSet {
  Signature sig;
  RepKind kind = RepKind::LeftRegular;
  std::vector<RationalMatrix> matrices;

  BladeBasis basis() const { return BladeBasis(sig); }
  std::size_t dimension() const { return sig.dimension(); }
  const RationalMatrix& generator(int g) const;
};

// Tensor-factor recipe for the periodicity construction, outermost factor
// first. `case_label` is 'a' (s > t), 'b' (s < t) or 'c' (s == t).
struct DecompositionRecipe {
  Signature sig;
  char case_label = 'c';
  std::vector<Signature> factors;
};

// Throws InvalidInput for the scalar algebra Cl(0,0).
DecompositionRecipe classify(const Signature& sig);

RepSet left_regular_rep(const Signature& sig);
RepSet right_regular_rep(const Signature& sig);

// Kronecker construction following classify(): the innermost factor is
// realised by its base matrices; each further (outer) factor A is prepended
// with the existing generators embedded as identity (x) g and the generators
// of A embedded as a (x) w, where w is the product of all existing generator
// images. Generators are numbered innermost first and labelled I or J by
// their square. Requires s + t >= 1.
RepSet periodicity_rep(const Signature& sig);

// The product basis {A_p (x) B_q (x) ...} of the periodicity construction,
// outermost factor index slowest, each factor basis in its canonical blade
// order. For Cl(3,0) this is the familiar list diag(X, X), offdiag(X, -X).
std::vector<RationalMatrix> periodicity_tensor_basis(const Signature& sig);

// Generator matrices of the five base algebras used by the construction.
std::vector<RationalMatrix> base_generators(const Signature& base);

RepSet make_rep(const Signature& sig, RepKind kind);

struct Violation {
  enum class Kind { Shape, Identity, Square, Anticommutation, Product };
  Kind kind;
  std::size_t i = 0;  // blade indices involved (generator blades for Square
  std::size_t j = 0;  // and Anticommutation)
  std::string message;
};

struct VerificationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks identity, generator squares, pairwise anticommutation and the full
// product table against blade_mul (reversed for RightRegular).
VerificationReport verify_relations(const RepSet& rep);

// sum_i coeffs[i] * F_i. Throws DimensionMismatch if coeffs.size() != k.
RationalMatrix generic_element(const RepSet& rep, std::span<const Rational> coeffs);

// True iff each F_i is monomial and, for every column, the nonzero rows of
// F_1..F_k are pairwise distinct, i.e. the generic element has exactly one
// coefficient in each row and column.
bool monomial_check(const RepSet& rep);

class NoWitness : public Error {
 public:
  using Error::Error;
};

struct SpanWitness {
  std::vector<Rational> x;
  std::size_t rank = 0;
  RationalMatrix certificate;  // columns F_i x
  std::string source;          // "e1", "e<j>" or "random"
};

// Vector x with rank [F_1 x | ... | F_k x] = k. Tries e_1, then the other
// standard basis vectors, then seeded random small-integer vectors. Throws
// NoWitness if none is found.
SpanWitness span_witness(const RepSet& rep, std::uint64_t seed = 1);

}  // namespace cliffconn
