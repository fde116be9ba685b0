#include "cliffconn/acceptance.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "cliffconn/json_io.hpp"
#include "cliffconn/planar.hpp"

namespace cliffconn::acceptance {

namespace {

std::vector<Signature> signatures_up_to(int max_generators, int min_generators = 1) {
  std::vector<Signature> out;
  for (int n = min_generators; n <= max_generators; ++n) {
    for (int s = n; s >= 0; --s) out.emplace_back(s, n - s);
  }
  return out;
}

constexpr RepKind kKinds[] = {RepKind::LeftRegular, RepKind::RightRegular, RepKind::Periodicity};

std::string sig_text(const Signature& sig) { return "(" + std::to_string(sig.s()) + "," + std::to_string(sig.t()) + ")"; }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", x);
  return buf;
}

// Small integers in [-r, r] independent of the standard library's
// distribution implementations.
class SmallInts {
 public:
  explicit SmallInts(std::uint64_t seed) : rng_(seed) {}
  long next(long r) { return static_cast<long>(rng_() % static_cast<std::uint64_t>(2 * r + 1)) - r; }

 private:
  std::mt19937_64 rng_;
};

std::vector<Rational> random_vector(SmallInts& gen, std::size_t n, long r) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = gen.next(r);
  return v;
}

CriterionResult make(int id, std::string title) { return CriterionResult{id, std::move(title), true, {}}; }

void fail(CriterionResult& r, const std::string& why) {
  if (r.passed) r.detail.clear();
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += why;
  r.passed = false;
}

// 2x2 block matrix [[a, b], [c, d]].
RationalMatrix blocks(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                      const RationalMatrix& d) {
  const std::size_t n = a.rows();
  RationalMatrix out(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t col = 0; col < n; ++col) {
      out(r, col) = a(r, col);
      out(r, n + col) = b(r, col);
      out(n + r, col) = c(r, col);
      out(n + r, n + col) = d(r, col);
    }
  }
  return out;
}

std::vector<RationalMatrix> displayed_cl30() {
  const RationalMatrix e = RationalMatrix::identity(4);
  const RationalMatrix i1 = RationalMatrix::from_rows({{0, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  const RationalMatrix i2 = RationalMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  const RationalMatrix i3 = RationalMatrix::from_rows({{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
  const RationalMatrix z(4, 4);
  std::vector<RationalMatrix> out;
  for (const auto* m : {&e, &i1, &i2, &i3}) out.push_back(blocks(*m, z, z, *m));
  for (const auto* m : {&e, &i1, &i2, &i3}) out.push_back(blocks(z, *m, -*m, z));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string planar_sample(std::uint64_t seed) {
  const GroupSpec spec(Signature(0, 2), 1, Flavor::Cliffordian);
  const auto aff = structure_affinors(spec);
  const SignVector eps = structure_signs(spec);
  SmallInts gen(seed);
  const std::size_t n = spec.model_dimension();
  const FlatConnection trivial(n);
  const FlatConnection deformed = deform(trivial, OneForm{random_vector(gen, n, 3)}, aff, eps);
  CurveState init;
  init.position.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) init.velocity.push_back(static_cast<double>(gen.next(3)) + 0.5);
  const auto traj = integrate_curve(trivial, init, 0.1, 1e-2);
  const auto report = planarity_report(traj, deformed, aff);
  std::ostringstream out;
  write_trajectory_csv(out, traj, report.residuals);
  return out.str();
}

}  // namespace

std::vector<SignVector> exhaustive_sign_solutions(const RepSet& rep) {
  const std::size_t k = rep.dimension();
  const std::size_t big = k * k;
  const int n = rep.sig.generators();
  const BladeBasis basis = rep.basis();

  struct Entry {
    std::size_t index;
    long value;
  };
  auto nonzeros = [k](const RationalMatrix& m) {
    std::vector<std::tuple<std::size_t, std::size_t, long>> out;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        if (sgn(m(r, c)) != 0) out.emplace_back(r, c, m(r, c).get_num().get_si());
      }
    }
    return out;
  };
  // contribution[i] lists the entries of C_ij = (F_i I_j) (x) F_i - F_i (x) (I_j F_i)
  // over all generators j, offset by j * big^2.
  std::vector<std::vector<Entry>> contribution(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto fi = nonzeros(rep.matrices[i]);
    for (int j = 0; j < n; ++j) {
      const RationalMatrix& ij = rep.matrices[basis.generator_index(j)];
      const auto left = nonzeros(rep.matrices[i] * ij);
      const auto right = nonzeros(ij * rep.matrices[i]);
      const std::size_t offset = static_cast<std::size_t>(j) * big * big;
      auto add = [&](const auto& a, const auto& b, long sign) {
        for (const auto& [ra, ca, va] : a) {
          for (const auto& [rb, cb, vb] : b) {
            const std::size_t row = ra * k + rb;
            const std::size_t col = ca * k + cb;
            contribution[i].push_back({offset + row * big + col, sign * va * vb});
          }
        }
      };
      add(left, fi, 1);
      add(fi, right, -1);
    }
  }

  std::vector<long> defect(static_cast<std::size_t>(n) * big * big, 0);
  std::vector<int> eps(k, 1);
  std::size_t nonzero = 0;
  auto apply = [&](std::size_t i, long factor) {
    for (const auto& e : contribution[i]) {
      long& d = defect[e.index];
      const bool was = d != 0;
      d += factor * e.value;
      nonzero += (d != 0) - was;
    }
  };
  for (std::size_t i = 0; i < k; ++i) apply(i, 1);

  std::vector<SignVector> solutions;
  if (nonzero == 0) solutions.push_back(SignVector{eps});
  const std::uint64_t count = std::uint64_t{1} << (k - 1);
  for (std::uint64_t g = 1; g < count; ++g) {
    const std::size_t bit = static_cast<std::size_t>(std::countr_zero(g)) + 1;
    eps[bit] = -eps[bit];
    apply(bit, 2 * eps[bit]);
    if (nonzero == 0) solutions.push_back(SignVector{eps});
  }
  return solutions;
}

CriterionResult relation_suite() {
  CriterionResult r = make(1, "relation suite, 1 <= s+t <= 5, all construction kinds");
  std::size_t checked = 0;
  for (const auto& sig : signatures_up_to(5)) {
    for (RepKind kind : kKinds) {
      const auto report = verify_relations(make_rep(sig, kind));
      ++checked;
      if (!report.ok()) {
        fail(r, sig_text(sig) + " " + to_string(kind) + ": " + std::to_string(report.violations.size()) +
                    " violations, first: " + report.violations.front().message);
      }
    }
  }
  if (r.passed) r.detail = std::to_string(checked) + " representations, no violations";
  return r;
}

CriterionResult cl30_display() {
  CriterionResult r = make(2, "Cl(3,0) periodicity matrices match the displayed eight");
  const auto expected = displayed_cl30();
  const auto product_basis = periodicity_tensor_basis(Signature(3, 0));
  if (product_basis.size() != expected.size()) {
    fail(r, "expected 8 matrices, got " + std::to_string(product_basis.size()));
    return r;
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!(product_basis[i] == expected[i])) fail(r, "product basis matrix " + std::to_string(i + 1) + " differs");
  }
  // The blade-aligned set must consist of the same matrices up to sign, and
  // its generators must appear verbatim.
  const RepSet rep = periodicity_rep(Signature(3, 0));
  const BladeBasis basis = rep.basis();
  std::size_t sign_flips = 0;
  for (std::size_t i = 0; i < rep.matrices.size(); ++i) {
    bool same = false;
    bool flipped = false;
    for (const auto& m : expected) {
      same = same || rep.matrices[i] == m;
      flipped = flipped || rep.matrices[i] == -m;
    }
    const bool generator = basis[i].grade() == 1;
    if (same) continue;
    if (flipped && !generator) {
      ++sign_flips;
      continue;
    }
    fail(r, "blade " + basis.names()[i] + " is not among the displayed matrices");
  }
  if (r.passed) {
    r.detail = "8/8 entry-for-entry; blade-aligned products agree up to sign (" + std::to_string(sign_flips) +
               " negated)";
  }
  return r;
}

CriterionResult span_lemma_suite() {
  CriterionResult r = make(3, "monomial representations with span witness X = e1, s+t <= 5");
  std::size_t checked = 0;
  for (const auto& sig : signatures_up_to(5)) {
    for (RepKind kind : kKinds) {
      const RepSet rep = make_rep(sig, kind);
      ++checked;
      const std::string where = sig_text(sig) + " " + to_string(kind);
      if (!monomial_check(rep)) fail(r, where + ": not monomial");
      try {
        const SpanWitness w = span_witness(rep);
        if (w.source != "e1" || w.rank != rep.dimension()) {
          fail(r, where + ": witness " + w.source + " rank " + std::to_string(w.rank));
        }
      } catch (const NoWitness& e) {
        fail(r, where + ": " + e.what());
      }
    }
  }
  if (r.passed) r.detail = std::to_string(checked) + " representations, rank k at e1";
  return r;
}

CriterionResult prolongation_vanishing() {
  CriterionResult r = make(4, "first prolongation vanishes for the Clifford flavor");
  const std::vector<std::pair<Signature, int>> cases = {
      {Signature(2, 0), 1}, {Signature(1, 1), 1}, {Signature(0, 2), 1}, {Signature(3, 0), 1}, {Signature(0, 3), 1},
      {Signature(2, 1), 1}, {Signature(1, 2), 1}, {Signature(0, 4), 1}, {Signature(0, 2), 2}};
  std::string dims;
  for (const auto& [sig, m] : cases) {
    const Prolongation p(GroupSpec(sig, m, Flavor::Clifford));
    const std::size_t dim = p.basis().size();
    dims += (dims.empty() ? "" : " ") + sig_text(sig) + "m" + std::to_string(m) + ":" + std::to_string(dim);
    if (dim != 0) fail(r, sig_text(sig) + " m=" + std::to_string(m) + " has dim g1 = " + std::to_string(dim));
  }
  if (r.passed) r.detail = "dim g1 = 0 for all 9 cases [" + dims + "]";
  return r;
}

CriterionResult quaternionic_prolongation() {
  CriterionResult r = make(5, "Cliffordian (0,2), m = 1: dim g1 = 4 spanned by S^xi");
  const Prolongation p(GroupSpec(Signature(0, 2), 1, Flavor::Cliffordian));
  const std::size_t n = p.model_dimension();
  const SignVector eps = structure_signs(p.spec());
  if (p.basis().size() != 4) fail(r, "dim g1 = " + std::to_string(p.basis().size()));
  RowEchelon span(n * n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const BilinearMap s = s_xi_element(p.affinors(), eps, OneForm::basis(n, a));
    if (!p.contains(s)) fail(r, "S^e" + std::to_string(a + 1) + "* not in g1");
    span.insert(to_sparse(s.coefficients()));
  }
  if (span.rank() != 4) fail(r, "S^xi span has rank " + std::to_string(span.rank()));
  if (r.passed) r.detail = "dim g1 = 4 = km; the four S^(e_a*) are independent members";
  return r;
}

CriterionResult sxi_membership_suite() {
  CriterionResult r = make(6, "S^xi membership and injectivity, m = 1");
  std::string ranks;
  for (const Signature& sig : {Signature(0, 2), Signature(2, 0), Signature(1, 1), Signature(0, 3)}) {
    const Prolongation p(GroupSpec(sig, 1, Flavor::Cliffordian));
    const SignVector eps = structure_signs(p.spec());
    const std::size_t n = p.model_dimension();
    for (std::size_t a = 0; a < n; ++a) {
      if (!verify_sxi_membership(p, eps, OneForm::basis(n, a)).ok()) {
        fail(r, sig_text(sig) + ": S^e" + std::to_string(a + 1) + "* fails membership");
      }
    }
    const std::size_t rk = sxi_rank(p.spec(), eps);
    if (rk != n) fail(r, sig_text(sig) + ": rank " + std::to_string(rk) + " != " + std::to_string(n));
    ranks += (ranks.empty() ? "" : " ") + sig_text(sig) + ":" + std::to_string(rk);
  }
  if (r.passed) r.detail = "all basis one-forms members; rank = km [" + ranks + "]";
  return r;
}

CriterionResult epsilon_suite(const Options& options) {
  CriterionResult r = make(7, "epsilon signs: consistency, exhaustive agreement, identity table");
  std::size_t reps = 0;
  std::size_t unique = 0;
  for (const auto& sig : signatures_up_to(kEpsilonTableGenerators)) {
    for (RepKind kind : kKinds) {
      const RepSet rep = make_rep(sig, kind);
      const std::string where = sig_text(sig) + " " + to_string(kind);
      SignVector eps;
      try {
        eps = epsilon_signs(rep);
      } catch (const InconsistentPropagation& e) {
        fail(r, where + ": " + e.what());
        continue;
      }
      ++reps;
      if (!check_sa_identity(rep, eps).hull()) fail(r, where + ": hull-level identity fails");
      const auto solutions = exhaustive_sign_solutions(rep);
      bool found = false;
      for (const auto& s : solutions) found = found || s == eps;
      if (!found) fail(r, where + ": propagated signs not among " + std::to_string(solutions.size()) + " solutions");
      unique += solutions.size() == 1;
    }
  }
  const SignVector e01 = epsilon_signs(left_regular_rep(Signature(0, 1)));
  const SignVector e02 = epsilon_signs(left_regular_rep(Signature(0, 2)));
  if (!(e01 == SignVector{{1, -1}})) fail(r, "(0,1) signs differ from (+1,-1)");
  if (!(e02 == SignVector{{1, -1, -1, -1}})) fail(r, "(0,2) signs differ from (+1,-1,-1,-1)");

  const std::string table = epsilon_table_text(kEpsilonTableGenerators);
  if (options.epsilon_table_path.empty()) {
    fail(r, "no committed epsilon table given");
  } else {
    const std::string committed = read_file(options.epsilon_table_path);
    if (committed.empty()) {
      fail(r, "cannot read " + options.epsilon_table_path);
    } else if (committed != table) {
      fail(r, "committed epsilon table differs from the regenerated one");
    }
  }
  const Json rows = epsilon_table(kEpsilonTableGenerators);
  std::size_t exact = 0;
  for (const auto& row : rows) exact += row["exact_identity"].get<bool>();
  if (r.passed) {
    r.detail = std::to_string(reps) + " representations consistent and oracle-confirmed (" + std::to_string(unique) +
               " with a unique solution); table matches, exact identity in " + std::to_string(exact) + "/" +
               std::to_string(rows.size()) + " signatures";
  }
  return r;
}

CriterionResult connection_class(const Options& options) {
  CriterionResult r = make(8, "connection class: torsion, planarity, linearity");
  constexpr int kTrials = 100;
  constexpr int kModelCopies = 2;
  constexpr double kStep = 1e-3;
  constexpr double kHorizon = 1.0;
  SmallInts gen(options.seed);
  double worst = 0;
  std::size_t signatures = 0;
  for (const auto& sig : signatures_up_to(3)) {
    const GroupSpec spec(sig, kModelCopies, Flavor::Cliffordian);
    const auto aff = structure_affinors(spec);
    const SignVector eps = structure_signs(spec);
    const std::size_t n = spec.model_dimension();
    const FlatConnection trivial(n);
    const std::string where = sig_text(sig);
    ++signatures;
    if (!check_structure(trivial, aff).parallel) {
      fail(r, where + ": trivial connection does not preserve the affinors");
      continue;
    }
    OneForm previous{random_vector(gen, n, 3)};
    for (int trial = 0; trial < kTrials; ++trial) {
      const OneForm upsilon{random_vector(gen, n, 3)};

      const FlatConnection base(BilinearMap(n, random_vector(gen, n * n * n, 2)));
      const FlatConnection deformed = deform(base, upsilon, aff, eps);
      if (!(deformed.torsion() == base.torsion())) fail(r, where + ": torsion changed in trial " + std::to_string(trial));

      std::vector<Rational> diff = upsilon.components;
      for (std::size_t i = 0; i < n; ++i) diff[i] -= previous.components[i];
      const BilinearMap lhs = difference_tensor(deform(base, previous, aff, eps), deformed);
      if (!(lhs == deformation_tensor(OneForm{diff}, aff, eps))) {
        fail(r, where + ": deformation not linear in trial " + std::to_string(trial));
      }
      previous = upsilon;

      CurveState init;
      for (std::size_t i = 0; i < n; ++i) init.position.push_back(static_cast<double>(gen.next(3)));
      for (std::size_t i = 0; i < n; ++i) init.velocity.push_back(static_cast<double>(gen.next(3)) + 0.5);
      const auto traj = integrate_curve(trivial, init, kHorizon, kStep);
      const auto report = planarity_report(traj, deform(trivial, upsilon, aff, eps), aff);
      worst = std::max(worst, report.max_residual);
      if (report.max_residual > kPlanarityTolerance) {
        fail(r, where + ": residual " + sci(report.max_residual) + " in trial " + std::to_string(trial));
      }
    }
  }
  if (r.passed) {
    r.detail = std::to_string(signatures) + " signatures, m = 2, " + std::to_string(kTrials) +
               " deformations each; torsion and linearity exact; max residual " + sci(worst) + " <= " +
               sci(kPlanarityTolerance);
  }
  return r;
}

CriterionResult determinism(const Options& options) {
  CriterionResult r = make(9, "deterministic output");
  auto render = [&] {
    std::string out = dump_compact(to_json(periodicity_rep(Signature(3, 0))));
    out += dump_compact(prolongation_json(Prolongation(GroupSpec(Signature(0, 2), 1, Flavor::Cliffordian))));
    out += epsilon_table_text(3);
    out += planar_sample(options.seed);
    return out;
  };
  const std::string first = render();
  const std::string second = render();
  if (first != second) fail(r, "two renderings differ");
  if (r.passed) r.detail = "repeated rendering of " + std::to_string(first.size()) + " bytes is byte-identical";
  return r;
}

std::vector<CriterionResult> run_all(const Options& options) {
  return {relation_suite(),          cl30_display(),         span_lemma_suite(),
          prolongation_vanishing(),  quaternionic_prolongation(), sxi_membership_suite(),
          epsilon_suite(options),    connection_class(options),   determinism(options)};
}

std::string format_line(const CriterionResult& r) {
  return std::string(r.passed ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + "  " + r.title + ": " + r.detail;
}

}  // namespace cliffconn::acceptance
