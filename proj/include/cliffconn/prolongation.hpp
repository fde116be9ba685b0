#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliffconn/bilinear.hpp"
#include "cliffconn/echelon.hpp"
#include "cliffconn/representation.hpp"

namespace cliffconn {

// Clifford: G = GL(m, O), the commutant of the structure affinors.
// Cliffordian: G = GL(m, O) GL(1, O), which adds the affinors themselves.
// FullLinear: all of gl(N); the no-structure control case, requires Cl(0,0).
enum class Flavor { Clifford, Cliffordian, FullLinear };

// Right: affinors are right multiplications on O^m and gl(m, O) acts by left
// multiplication. Left is the mirrored convention.
enum class AffinorSide { Right, Left };

std::string to_string(Flavor flavor);
Flavor flavor_from_string(const std::string& name);
std::string to_string(AffinorSide side);
AffinorSide side_from_string(const std::string& name);

class GroupSpec {
 public:
  GroupSpec(Signature sig, int m, Flavor flavor, AffinorSide side = AffinorSide::Right);

  const Signature& sig() const { return sig_; }
  int m() const { return m_; }
  Flavor flavor() const { return flavor_; }
  AffinorSide side() const { return side_; }
  std::size_t model_dimension() const { return sig_.dimension() * static_cast<std::size_t>(m_); }

 private:
  Signature sig_;
  int m_;
  Flavor flavor_;
  AffinorSide side_;
};

// +-1 per blade, aligned with the canonical blade order.
struct SignVector {
  std::vector<int> signs;

  std::size_t size() const { return signs.size(); }
  int operator[](std::size_t i) const { return signs[i]; }
  friend bool operator==(const SignVector&, const SignVector&) = default;
};

struct LieAlgebraBasis {
  GroupSpec spec;
  std::vector<RationalMatrix> basis;

  std::size_t dimension() const { return basis.size(); }
};

// The k affinors F_1..F_k on V = O^m: m-fold block-diagonal copies of the
// right (or, mirrored, left) regular representation.
std::vector<RationalMatrix> structure_affinors(const GroupSpec& spec);

LieAlgebraBasis lie_algebra_basis(const GroupSpec& spec);

// Rows w (over the flattened index r*N + c) spanning the annihilator of
// span(g): B lies in g iff <w, vec(B)> = 0 for every row.
std::vector<SparseVector> membership_constraints(const LieAlgebraBasis& g);

// Basis of the first prolongation: symmetric t with v -> t(v, e_a) in g for
// every a. Empty iff it vanishes.
std::vector<BilinearMap> first_prolongation(const LieAlgebraBasis& g);

class InconsistentPropagation : public Error {
 public:
  using Error::Error;
};

// Signs for which sum_i eps_i A(F_i I_j X) F_i Y = I_j sum_i eps_i A(F_i X) F_i Y
// holds. eps_E = +1; a blade F_k = +-F_i I_j one grade above F_i gets
// eps_k = +eps_i if I_j F_k I_j = F_k and -eps_i if I_j F_k I_j = -F_k. Every
// factorisation is followed; disagreement throws InconsistentPropagation.
SignVector epsilon_signs(const RepSet& rep);

struct GeneratorIdentity {
  int generator = 0;
  bool exact = false;  // sum_i eps_i (F_i I_j) (x) F_i == sum_i eps_i F_i (x) (I_j F_i)
  bool hull = false;   // for every A and Y the defect, as a map of X, lies in span{F_l}
};

struct IdentityReport {
  std::vector<GeneratorIdentity> generators;

  bool exact() const;
  bool hull() const;
};

IdentityReport check_sa_identity(const RepSet& rep, const SignVector& eps);

// S(X, Y) = sum_i eps_i (xi(F_i X) F_i Y + xi(F_i Y) F_i X).
BilinearMap s_xi_element(std::span<const RationalMatrix> affinors, const SignVector& eps, const OneForm& xi);
BilinearMap s_xi_element(const GroupSpec& spec, const SignVector& eps, const OneForm& xi);

// Signs for the GroupSpec's affinor convention (computed on the matching regular
// representation).
SignVector structure_signs(const GroupSpec& spec);

// A group specification together with its Lie algebra, the annihilator rows
// and the first prolongation, computed once.
class Prolongation {
 public:
  explicit Prolongation(GroupSpec spec);

  const GroupSpec& spec() const { return algebra_.spec; }
  std::size_t model_dimension() const { return algebra_.spec.model_dimension(); }
  const std::vector<RationalMatrix>& affinors() const { return affinors_; }
  const LieAlgebraBasis& algebra() const { return algebra_; }
  const std::vector<BilinearMap>& basis() const { return basis_; }

  bool in_algebra(const RationalMatrix& b) const;
  bool contains(const BilinearMap& t) const;
  // Coordinates of t in basis(), or nullopt if t is not in the span.
  std::optional<std::vector<Rational>> coordinates(const BilinearMap& t) const;

 private:
  std::vector<RationalMatrix> affinors_;
  LieAlgebraBasis algebra_;
  std::vector<SparseVector> constraints_;
  std::vector<BilinearMap> basis_;
  RowEchelon span_;
};

struct SxiMembership {
  bool symmetric = false;
  bool slots_in_algebra = false;  // Y -> S(e_a, Y) in g for every a
  bool in_prolongation = false;   // S in span of the computed first prolongation

  bool ok() const { return symmetric && slots_in_algebra && in_prolongation; }
};

SxiMembership verify_sxi_membership(const Prolongation& p, const SignVector& eps, const OneForm& xi);
SxiMembership verify_sxi_membership(const GroupSpec& spec, const OneForm& xi);

// Rank of xi -> S^xi on the N standard one-forms.
std::size_t sxi_rank(const GroupSpec& spec, const SignVector& eps);

}  // namespace cliffconn
