#include "cliffconn/planar.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace cliffconn {

namespace {

void require_dim(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(expected) + ", got " +
                            std::to_string(got));
  }
}

// Dense double copy of Gamma; quadratic(v)[c] = sum_ab Gamma^c_ab v_a v_b.
class QuadraticForm {
 public:
  explicit QuadraticForm(const BilinearMap& t) : n_(t.dim()), data_(n_ * n_ * n_), zero_(t.is_zero()) {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        for (std::size_t c = 0; c < n_; ++c) data_[(c * n_ + a) * n_ + b] = t(a, b, c).get_d();
      }
    }
  }

  void evaluate(std::span<const double> v, std::span<double> out) const {
    for (std::size_t c = 0; c < n_; ++c) {
      if (zero_) {
        out[c] = 0;
        continue;
      }
      double acc = 0;
      const double* row = &data_[c * n_ * n_];
      for (std::size_t a = 0; a < n_; ++a) {
        double inner = 0;
        for (std::size_t b = 0; b < n_; ++b) inner += row[a * n_ + b] * v[b];
        acc += v[a] * inner;
      }
      out[c] = acc;
    }
  }

 private:
  std::size_t n_;
  std::vector<double> data_;
  bool zero_;
};

}  // namespace

BilinearMap deformation_tensor(const OneForm& upsilon, std::span<const RationalMatrix> affinors,
                               const SignVector& eps) {
  BilinearMap p = s_xi_element(affinors, eps, upsilon);
  p *= Rational(1, 2);
  return p;
}

BilinearMap ConnectionDeformation::tensor() const { return deformation_tensor(upsilon, affinors, eps); }

FlatConnection ConnectionDeformation::apply() const { return deform(base, upsilon, affinors, eps); }

FlatConnection deform(const FlatConnection& conn, const OneForm& upsilon, std::span<const RationalMatrix> affinors,
                      const SignVector& eps) {
  require_dim(conn.dim(), upsilon.dim(), "deform: one-form");
  for (const auto& f : affinors) require_dim(conn.dim(), f.rows(), "deform: affinor");
  return FlatConnection(conn.christoffel() + deformation_tensor(upsilon, affinors, eps));
}

BilinearMap difference_tensor(const FlatConnection& base, const FlatConnection& other) {
  require_dim(base.dim(), other.dim(), "difference_tensor");
  return other.christoffel() - base.christoffel();
}

StructureCheck check_structure(const FlatConnection& conn, std::span<const RationalMatrix> affinors) {
  const std::size_t n = conn.dim();
  RowEchelon span(n * n);
  for (const auto& f : affinors) {
    require_dim(n, f.rows(), "check_structure: affinor");
    span.insert_dense(f.entries());
  }
  StructureCheck out{true, true};
  for (std::size_t a = 0; a < n; ++a) {
    const RationalMatrix gamma = conn.christoffel().matrix_fixing_first(a);
    for (const auto& f : affinors) {
      const RationalMatrix d = gamma * f - f * gamma;
      if (d.is_zero()) continue;
      out.parallel = false;
      if (!span.contains(to_sparse(d.entries()))) {
        out.preserves_span = false;
        return out;
      }
    }
  }
  return out;
}

RecoveredForm recover_one_form(const BilinearMap& p, std::span<const RationalMatrix> affinors, const SignVector& eps) {
  const std::size_t n = p.dim();
  const std::size_t len = p.coefficients().size();
  RationalMatrix map(len, n);
  for (std::size_t a = 0; a < n; ++a) {
    const BilinearMap column = deformation_tensor(OneForm::basis(n, a), affinors, eps);
    const auto coeffs = column.coefficients();
    for (std::size_t i = 0; i < len; ++i) map(i, a) = coeffs[i];
  }
  RecoveredForm out;
  out.unique = rank(map) == n;
  if (auto x = solve(map, p.coefficients())) out.form = OneForm{std::move(*x)};
  return out;
}

ExactHullDecomposition hull_membership(std::span<const Rational> v, std::span<const Rational> x,
                                       std::span<const RationalMatrix> affinors) {
  const std::size_t n = v.size();
  require_dim(n, x.size(), "hull_membership: X");
  const std::size_t k = affinors.size();
  std::vector<std::vector<Rational>> cols;
  cols.reserve(k);
  for (const auto& f : affinors) {
    require_dim(n, f.rows(), "hull_membership: affinor");
    cols.push_back(mat_vec(f, x));
  }
  auto dot = [n](std::span<const Rational> a, std::span<const Rational> b) {
    Rational s;
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    }
    return s;
  };
  // Normal equations are always consistent; free coefficients are zero.
  RationalMatrix gram(k, k);
  std::vector<Rational> rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(cols[i], v);
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(cols[i], cols[j]);
  }
  ExactHullDecomposition out;
  out.coefficients = solve(gram, rhs).value();
  std::vector<Rational> r(v.begin(), v.end());
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(out.coefficients[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) r[j] -= out.coefficients[i] * cols[i][j];
  }
  out.residual_squared = dot(r, r);
  return out;
}

HullProjector::HullProjector(std::span<const RationalMatrix> affinors) {
  if (affinors.empty()) throw InvalidInput("hull projector needs at least one affinor");
  dim_ = affinors[0].rows();
  for (const auto& f : affinors) {
    require_dim(dim_, f.rows(), "HullProjector: affinor");
    std::vector<double> m(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t c = 0; c < dim_; ++c) m[r * dim_ + c] = f(r, c).get_d();
    }
    affinors_.push_back(std::move(m));
  }
}

HullDecomposition HullProjector::decompose(std::span<const double> v, std::span<const double> x) const {
  require_dim(dim_, v.size(), "hull decomposition: v");
  require_dim(dim_, x.size(), "hull decomposition: X");
  const auto n = static_cast<Eigen::Index>(dim_);
  const auto k = static_cast<Eigen::Index>(affinors_.size());
  Eigen::MatrixXd cols(n, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const auto& m = affinors_[static_cast<std::size_t>(i)];
    for (Eigen::Index r = 0; r < n; ++r) {
      double acc = 0;
      for (Eigen::Index c = 0; c < n; ++c) acc += m[static_cast<std::size_t>(r * n + c)] * x[static_cast<std::size_t>(c)];
      cols(r, i) = acc;
    }
  }
  const Eigen::Map<const Eigen::VectorXd> target(v.data(), n);
  const Eigen::VectorXd coeffs = cols.colPivHouseholderQr().solve(target);
  HullDecomposition out;
  out.coefficients.assign(coeffs.data(), coeffs.data() + k);
  out.residual = (target - cols * coeffs).norm();
  return out;
}

std::vector<TrajectorySample> integrate_curve(const FlatConnection& conn, const CurveState& init, double horizon,
                                              double step, const Forcing& forcing) {
  const std::size_t n = conn.dim();
  require_dim(n, init.position.size(), "integrate_curve: position");
  require_dim(n, init.velocity.size(), "integrate_curve: velocity");
  if (!(step > 0) || !std::isfinite(step)) throw InvalidInput("integrate_curve: step must be positive");
  if (!(horizon >= 0) || !std::isfinite(horizon)) throw InvalidInput("integrate_curve: horizon must be non-negative");

  const QuadraticForm gamma(conn.christoffel());
  auto acceleration = [&](const CurveState& s) {
    std::vector<double> a(n);
    gamma.evaluate(s.velocity, a);
    for (auto& x : a) x = -x;
    if (forcing) {
      const std::vector<double> f = forcing(s);
      require_dim(n, f.size(), "integrate_curve: forcing");
      for (std::size_t i = 0; i < n; ++i) a[i] += f[i];
    }
    return a;
  };
  auto check_finite = [&](const CurveState& s) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(s.position[i]) || !std::isfinite(s.velocity[i])) {
        throw Error("integrate_curve: non-finite state at t = " + std::to_string(s.time) + " (component " +
                    std::to_string(i + 1) + ")");
      }
    }
  };

  const auto steps = static_cast<std::size_t>(std::llround(horizon / step));
  std::vector<TrajectorySample> out;
  out.reserve(steps + 1);
  CurveState s = init;
  check_finite(s);
  out.push_back({s, acceleration(s)});

  auto shifted = [&](const CurveState& base, const std::vector<double>& dx, const std::vector<double>& dv,
                     double h) {
    CurveState r = base;
    r.time += h;
    for (std::size_t i = 0; i < n; ++i) {
      r.position[i] += h * dx[i];
      r.velocity[i] += h * dv[i];
    }
    return r;
  };

  for (std::size_t i = 0; i < steps; ++i) {
    const double h = step;
    const std::vector<double>& k1x = s.velocity;
    const std::vector<double> k1v = out.back().acceleration;
    const CurveState s2 = shifted(s, k1x, k1v, h / 2);
    const std::vector<double> k2x = s2.velocity;
    const std::vector<double> k2v = acceleration(s2);
    const CurveState s3 = shifted(s, k2x, k2v, h / 2);
    const std::vector<double> k3x = s3.velocity;
    const std::vector<double> k3v = acceleration(s3);
    const CurveState s4 = shifted(s, k3x, k3v, h);
    const std::vector<double> k4x = s4.velocity;
    const std::vector<double> k4v = acceleration(s4);

    CurveState next = s;
    next.time = init.time + static_cast<double>(i + 1) * h;
    for (std::size_t j = 0; j < n; ++j) {
      next.position[j] += h / 6 * (k1x[j] + 2 * k2x[j] + 2 * k3x[j] + k4x[j]);
      next.velocity[j] += h / 6 * (k1v[j] + 2 * k2v[j] + 2 * k3v[j] + k4v[j]);
    }
    check_finite(next);
    s = std::move(next);
    out.push_back({s, acceleration(s)});
  }
  return out;
}

PlanarityReport planarity_report(std::span<const TrajectorySample> trajectory, const FlatConnection& conn,
                                 std::span<const RationalMatrix> affinors) {
  const std::size_t n = conn.dim();
  const QuadraticForm gamma(conn.christoffel());
  const HullProjector hull(affinors);
  require_dim(n, hull.dim(), "planarity_report: affinors");

  PlanarityReport report;
  report.residuals.reserve(trajectory.size());
  std::vector<double> covariant(n);
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const auto& sample = trajectory[i];
    const auto& v = sample.state.velocity;
    gamma.evaluate(v, covariant);
    for (std::size_t j = 0; j < n; ++j) covariant[j] += sample.acceleration[j];
    double speed2 = 0;
    for (double x : v) speed2 += x * x;
    if (speed2 == 0) throw InvalidInput("planarity_report: zero velocity at sample " + std::to_string(i));
    const double r = hull.decompose(covariant, v).residual / speed2;
    report.residuals.push_back(r);
    if (r > report.max_residual || i == 0) {
      report.max_residual = r;
      report.worst_sample = i;
    }
  }
  return report;
}

}  // namespace cliffconn
