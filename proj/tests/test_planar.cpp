#include <cmath>
#include <limits>
#include <sstream>

#include "doctest.h"

#include "cliffconn/json_io.hpp"
#include "cliffconn/planar.hpp"
#include "support.hpp"

using namespace cliffconn;

namespace {

struct Setup {
  GroupSpec spec;
  std::vector<RationalMatrix> aff;
  SignVector eps;
  std::size_t n;

  explicit Setup(Signature sig, int m = 1)
      : spec(sig, m, Flavor::Cliffordian),
        aff(structure_affinors(spec)),
        eps(structure_signs(spec)),
        n(spec.model_dimension()) {}
};

BilinearMap random_tensor(testing::Gen& gen, std::size_t n) { return BilinearMap(n, gen.vector(n * n * n, 2)); }

std::vector<double> to_double(const std::vector<Rational>& v) {
  std::vector<double> out;
  for (const auto& q : v) out.push_back(q.get_d());
  return out;
}

double norm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

TEST_SUITE("planar") {

TEST_CASE("zero one-form leaves the connection unchanged") {
  testing::Gen gen(31);
  const Setup s(Signature(0, 2));
  const FlatConnection base(random_tensor(gen, s.n));
  CHECK(deform(base, OneForm{std::vector<Rational>(s.n)}, s.aff, s.eps) == base);
}

TEST_CASE("deformation keeps torsion and has symmetric difference") {
  testing::Gen gen(32);
  for (const auto& sig : testing::signatures(3)) {
    const Setup s(sig);
    for (int trial = 0; trial < 100; ++trial) {
      const FlatConnection base(random_tensor(gen, s.n));
      const OneForm upsilon{gen.vector(s.n)};
      const FlatConnection deformed = deform(base, upsilon, s.aff, s.eps);
      REQUIRE(deformed.torsion() == base.torsion());
      const BilinearMap p = difference_tensor(base, deformed);
      REQUIRE(p.is_symmetric());
      REQUIRE(p == deformation_tensor(upsilon, s.aff, s.eps));
    }
  }
}

TEST_CASE("P(X, X) = sum_i eps_i Upsilon(F_i X) F_i X") {
  testing::Gen gen(33);
  for (const auto& sig : testing::signatures(3)) {
    const Setup s(sig);
    for (int trial = 0; trial < 10; ++trial) {
      const OneForm upsilon{gen.vector(s.n)};
      const auto x = gen.vector(s.n);
      std::vector<Rational> expected(s.n);
      for (std::size_t i = 0; i < s.aff.size(); ++i) {
        const auto fx = mat_vec(s.aff[i], x);
        const Rational c = s.eps[i] * upsilon(fx);
        for (std::size_t j = 0; j < s.n; ++j) expected[j] += c * fx[j];
      }
      CHECK(deformation_tensor(upsilon, s.aff, s.eps).apply(x, x) == expected);
    }
  }
}

TEST_CASE("deformation is linear in the one-form") {
  testing::Gen gen(34);
  const Setup s(Signature(1, 1), 2);
  const FlatConnection base(random_tensor(gen, s.n));
  for (int trial = 0; trial < 10; ++trial) {
    const OneForm u1{gen.vector(s.n)}, u2{gen.vector(s.n)};
    std::vector<Rational> diff(s.n);
    for (std::size_t i = 0; i < s.n; ++i) diff[i] = u1.components[i] - u2.components[i];
    CHECK(difference_tensor(deform(base, u2, s.aff, s.eps), deform(base, u1, s.aff, s.eps)) ==
          deformation_tensor(OneForm{diff}, s.aff, s.eps));
  }
}

TEST_CASE("difference of connections with different torsion is not symmetric") {
  testing::Gen gen(35);
  const Setup s(Signature(0, 2));
  const FlatConnection base(random_tensor(gen, s.n));
  BilinearMap mutant = base.christoffel();
  mutant(0, 1, 2) += 1;
  const FlatConnection other(mutant);
  CHECK_FALSE(other.torsion() == base.torsion());
  CHECK_FALSE(difference_tensor(base, other).is_symmetric());
  CHECK(difference_tensor(base, base).is_zero());
}

TEST_CASE("dimension checks") {
  const Setup s(Signature(0, 1));
  CHECK_THROWS_AS(deform(FlatConnection(3), OneForm{std::vector<Rational>(2)}, s.aff, s.eps), DimensionMismatch);
  CHECK_THROWS_AS(difference_tensor(FlatConnection(2), FlatConnection(3)), DimensionMismatch);
}

TEST_CASE("structure preservation") {
  testing::Gen gen(36);
  for (const auto& sig : testing::signatures(2)) {
    const Setup s(sig, 2);
    CHECK(check_structure(FlatConnection(s.n), s.aff).parallel);
    const FlatConnection deformed = deform(FlatConnection(s.n), OneForm{gen.vector(s.n)}, s.aff, s.eps);
    CHECK(check_structure(deformed, s.aff).preserves_span);
  }
  const Setup s(Signature(0, 2));
  bool some_random_breaks = false;
  for (int trial = 0; trial < 5; ++trial) {
    some_random_breaks = some_random_breaks || !check_structure(FlatConnection(random_tensor(gen, s.n)), s.aff).preserves_span;
  }
  CHECK(some_random_breaks);
}

TEST_CASE("the one-form is recovered from its deformation tensor") {
  testing::Gen gen(37);
  for (const auto& sig : testing::signatures(3)) {
    const Setup s(sig);
    const OneForm upsilon{gen.vector(s.n)};
    const RecoveredForm r = recover_one_form(deformation_tensor(upsilon, s.aff, s.eps), s.aff, s.eps);
    REQUIRE(r.form.has_value());
    CHECK(r.unique);
    CHECK(*r.form == upsilon);
  }
  const Setup s(Signature(0, 2));
  BilinearMap junk(s.n);
  junk(0, 0, 1) = 1;
  CHECK_FALSE(recover_one_form(junk, s.aff, s.eps).form.has_value());
}

TEST_CASE("hull membership") {
  const Setup s(Signature(0, 2));
  const auto x = OneForm::basis(s.n, 0).components;
  const auto v = mat_vec(s.aff[1], x);
  const ExactHullDecomposition d = hull_membership(v, x, s.aff);
  CHECK(d.member());
  CHECK(d.coefficients == std::vector<Rational>{0, 1, 0, 0});

  const Setup two(Signature(0, 2), 2);
  const auto x2 = OneForm::basis(two.n, 0).components;
  const auto outside = OneForm::basis(two.n, 5).components;
  const ExactHullDecomposition o = hull_membership(outside, x2, two.aff);
  CHECK_FALSE(o.member());
  CHECK(o.residual_squared == 1);

  // Quaternionic hull of a generic vector is four-dimensional.
  testing::Gen gen(38);
  const auto generic = gen.vector(s.n);
  RationalMatrix cols(s.n, s.aff.size());
  for (std::size_t i = 0; i < s.aff.size(); ++i) {
    const auto fx = mat_vec(s.aff[i], generic);
    for (std::size_t r = 0; r < s.n; ++r) cols(r, i) = fx[r];
  }
  CHECK(rank(cols) == 4);

  const HullProjector hull(two.aff);
  const HullDecomposition f = hull.decompose(to_double(outside), to_double(x2));
  CHECK(f.residual == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hull.decompose(to_double(mat_vec(two.aff[3], x2)), to_double(x2)).residual < 1e-12);
}

TEST_CASE("straight lines for the trivial connection") {
  const CurveState init{{1.0, -2.0}, {0.5, 0.25}, 0.0};
  const auto traj = integrate_curve(FlatConnection(2), init, 1.0, 1e-3);
  REQUIRE(traj.size() == 1001);
  for (const auto& sample : traj) {
    const double t = sample.state.time;
    // Round-off accumulates over the 1000 additions of h * v.
    CHECK(std::abs(sample.state.position[0] - (1.0 + 0.5 * t)) < 1e-12);
    CHECK(std::abs(sample.state.position[1] - (-2.0 + 0.25 * t)) < 1e-12);
  }
  CHECK(traj.back().state.time == doctest::Approx(1.0));
}

TEST_CASE("RK4 error drops about sixteenfold when the step halves") {
  // x'' = -(x')^2 with x(0) = 0, x'(0) = 1 has x(t) = log(1 + t).
  BilinearMap g(1);
  g(0, 0, 0) = 1;
  const FlatConnection conn(g);
  const CurveState init{{0.0}, {1.0}, 0.0};
  auto error = [&](double h) {
    return std::abs(integrate_curve(conn, init, 1.0, h).back().state.position[0] - std::log(2.0));
  };
  const double ratio = error(0.1) / error(0.05);
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
}

TEST_CASE("reversing time returns to the start") {
  testing::Gen gen(39);
  const Setup s(Signature(0, 2));
  std::vector<Rational> u = gen.vector(s.n);
  for (auto& q : u) q /= 10;
  const FlatConnection conn = deform(FlatConnection(s.n), OneForm{u}, s.aff, s.eps);
  CurveState init{std::vector<double>(s.n, 0.0), {0.3, -0.2, 0.1, 0.4}, 0.0};
  const auto forward = integrate_curve(conn, init, 1.0, 1e-3);
  CurveState back = forward.back().state;
  for (double& v : back.velocity) v = -v;
  const auto backward = integrate_curve(conn, back, 1.0, 1e-3);
  for (std::size_t i = 0; i < s.n; ++i) {
    CHECK(backward.back().state.position[i] == doctest::Approx(0.0).epsilon(1e-9).scale(1.0));
    CHECK(-backward.back().state.velocity[i] == doctest::Approx(init.velocity[i]).epsilon(1e-9));
  }
}

TEST_CASE("integrator input validation") {
  const CurveState init{{0.0}, {1.0}, 0.0};
  CHECK_THROWS_AS(integrate_curve(FlatConnection(1), init, 1.0, 0.0), InvalidInput);
  CHECK_THROWS_AS(integrate_curve(FlatConnection(2), init, 1.0, 0.1), DimensionMismatch);
  const Forcing nan_forcing = [](const CurveState&) { return std::vector<double>{std::numeric_limits<double>::quiet_NaN()}; };
  CHECK_THROWS_AS(integrate_curve(FlatConnection(1), init, 1.0, 0.1, nan_forcing), Error);
}

TEST_CASE("geodesics of one connection are planar for every deformation") {
  testing::Gen gen(40);
  for (const auto& sig : testing::signatures(3)) {
    const Setup s(sig);
    const FlatConnection trivial(s.n);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rational> u = gen.vector(s.n);
      const FlatConnection deformed = deform(trivial, OneForm{u}, s.aff, s.eps);
      CurveState init{to_double(gen.vector(s.n)), to_double(gen.vector(s.n)), 0.0};
      init.velocity[0] += 0.5;
      const auto straight = integrate_curve(trivial, init, 1.0, 1e-3);
      CHECK(planarity_report(straight, deformed, s.aff).max_residual <= 1e-7);
      CHECK(planarity_report(straight, trivial, s.aff).max_residual <= 1e-9);

      // And the other way round, with a mild deformation and unit speed.
      for (auto& q : u) q /= 20;
      const FlatConnection mild = deform(trivial, OneForm{u}, s.aff, s.eps);
      const double speed = norm(init.velocity);
      for (double& v : init.velocity) v /= speed;
      const auto curved = integrate_curve(mild, init, 1.0, 1e-3);
      CHECK(planarity_report(curved, trivial, s.aff).max_residual <= 1e-7);
      CHECK(planarity_report(curved, mild, s.aff).max_residual <= 1e-9);
    }
  }
}

TEST_CASE("forcing outside the hull is detected") {
  const Setup s(Signature(0, 2), 2);
  const FlatConnection trivial(s.n);
  CurveState init{std::vector<double>(s.n, 0.0), std::vector<double>(s.n, 0.0), 0.0};
  init.velocity[0] = 1.0;
  std::vector<double> push(s.n, 0.0);
  push[5] = 1.0;
  const auto outside = integrate_curve(trivial, init, 1.0, 1e-2, [&](const CurveState&) { return push; });
  const PlanarityReport bad = planarity_report(outside, trivial, s.aff);
  CHECK(bad.residuals.front() == doctest::Approx(1.0));
  CHECK(bad.max_residual > 0.5);

  // Forcing along F_2 of the velocity stays in the hull.
  const auto inside = integrate_curve(trivial, init, 1.0, 1e-2, [&](const CurveState& st) {
    std::vector<double> f(s.n, 0.0);
    for (std::size_t r = 0; r < s.n; ++r) {
      for (std::size_t c = 0; c < s.n; ++c) f[r] += s.aff[1](r, c).get_d() * st.velocity[c];
    }
    return f;
  });
  CHECK(planarity_report(inside, trivial, s.aff).max_residual < 1e-12);
}

TEST_CASE("trajectory csv") {
  const CurveState init{{0.0, 1.0}, {1.0, 0.5}, 0.0};
  const auto traj = integrate_curve(FlatConnection(2), init, 0.2, 0.1);
  std::ostringstream out;
  const std::vector<double> residuals(traj.size(), 0.0);
  write_trajectory_csv(out, traj, residuals);
  CHECK(out.str() == "t,x1,x2,v1,v2,residual\n0,0,1,1,0.5,0\n0.1,0.1,1.05,1,0.5,0\n0.2,0.2,1.1,1,0.5,0\n");
  CHECK_THROWS_AS(write_trajectory_csv(out, traj, std::vector<double>{}), DimensionMismatch);
}

}  // TEST_SUITE
