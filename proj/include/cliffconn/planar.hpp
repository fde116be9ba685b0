#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cliffconn/bilinear.hpp"
#include "cliffconn/prolongation.hpp"

namespace cliffconn {

// Constant-coefficient linear connection on the flat model Q^N:
// nabla_X Y = D_X Y + Gamma(X, Y) with Gamma(e_a, e_b) = sum_c Gamma^c_ab e_c.
class FlatConnection {
 public:
  explicit FlatConnection(std::size_t dim) : christoffel_(dim) {}
  explicit FlatConnection(BilinearMap christoffel) : christoffel_(std::move(christoffel)) {}

  std::size_t dim() const { return christoffel_.dim(); }
  const BilinearMap& christoffel() const { return christoffel_; }
  const Rational& gamma(std::size_t c, std::size_t a, std::size_t b) const { return christoffel_(a, b, c); }

  // T(X, Y) = Gamma(X, Y) - Gamma(Y, X).
  BilinearMap torsion() const { return christoffel_.antisymmetric_part(); }

  friend bool operator==(const FlatConnection&, const FlatConnection&) = default;

 private:
  BilinearMap christoffel_;
};

// nabla + sum_i eps_i (upsilon o F_i) (.) F_i, where (.) is the symmetrised
// product with factor 1/2, so that P(X, X) = sum_i eps_i upsilon(F_i X) F_i X.
struct ConnectionDeformation {
  FlatConnection base;
  OneForm upsilon;
  std::vector<RationalMatrix> affinors;
  SignVector eps;

  BilinearMap tensor() const;
  FlatConnection apply() const;
};

BilinearMap deformation_tensor(const OneForm& upsilon, std::span<const RationalMatrix> affinors,
                               const SignVector& eps);

// Throws DimensionMismatch unless connection, one-form and affinors share N.
FlatConnection deform(const FlatConnection& conn, const OneForm& upsilon,
                      std::span<const RationalMatrix> affinors, const SignVector& eps);

// P(X, Y) = other_X Y - base_X Y.
BilinearMap difference_tensor(const FlatConnection& base, const FlatConnection& other);

struct StructureCheck {
  bool parallel = false;        // nabla F_i = 0 for every affinor
  bool preserves_span = false;  // nabla_X F_i lies in span{F_j}
};

StructureCheck check_structure(const FlatConnection& conn, std::span<const RationalMatrix> affinors);

// Upsilon with deformation_tensor(Upsilon) == p, if any. `unique` is true
// when the linear map Upsilon -> P is injective.
struct RecoveredForm {
  std::optional<OneForm> form;
  bool unique = false;
};

RecoveredForm recover_one_form(const BilinearMap& p, std::span<const RationalMatrix> affinors, const SignVector& eps);

// Exact decomposition v = sum_i a_i F_i X + r with r orthogonal to the hull
// A(X) = span{F_i X}.
struct ExactHullDecomposition {
  std::vector<Rational> coefficients;
  Rational residual_squared;

  bool member() const { return sgn(residual_squared) == 0; }
};

ExactHullDecomposition hull_membership(std::span<const Rational> v, std::span<const Rational> x,
                                       std::span<const RationalMatrix> affinors);

// Floating-point counterpart used on sampled trajectories.
struct HullDecomposition {
  std::vector<double> coefficients;
  double residual = 0;  // Euclidean norm of v - sum_i a_i F_i X
};

class HullProjector {
 public:
  explicit HullProjector(std::span<const RationalMatrix> affinors);

  std::size_t dim() const { return dim_; }
  HullDecomposition decompose(std::span<const double> v, std::span<const double> x) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<double>> affinors_;  // row-major N x N each
};

struct CurveState {
  std::vector<double> position;
  std::vector<double> velocity;
  double time = 0;
};

struct TrajectorySample {
  CurveState state;
  std::vector<double> acceleration;  // right-hand side of the ODE at this state
};

using Forcing = std::function<std::vector<double>(const CurveState&)>;

// Fixed-step RK4 for x'' = -Gamma(x', x') + forcing(x, x'). Samples at every
// step including t = 0. Throws Error on non-finite state or bad step.
std::vector<TrajectorySample> integrate_curve(const FlatConnection& conn, const CurveState& init, double horizon,
                                              double step, const Forcing& forcing = {});

struct PlanarityReport {
  double max_residual = 0;  // max over samples of |hull residual of nabla_c' c'| / |c'|^2
  std::size_t worst_sample = 0;
  std::vector<double> residuals;
};

PlanarityReport planarity_report(std::span<const TrajectorySample> trajectory, const FlatConnection& conn,
                                 std::span<const RationalMatrix> affinors);

}  // namespace cliffconn
