#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "cliffconn/acceptance.hpp"
#include "cliffconn/json_io.hpp"
#include "cliffconn/planar.hpp"
#include "cliffconn/prolongation.hpp"

namespace py = pybind11;
using namespace cliffconn;

namespace {

py::object fraction(const Rational& q) {
  static const py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

Rational rational(const py::handle& x) {
  if (py::isinstance<py::int_>(x)) return from_strings(py::str(x), "1");
  if (py::hasattr(x, "numerator") && py::hasattr(x, "denominator")) {
    return from_strings(py::str(x.attr("numerator")), py::str(x.attr("denominator")));
  }
  throw InvalidInput("expected an int or a Fraction");
}

py::list matrix(const RationalMatrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(fraction(m(r, c)));
    rows.append(row);
  }
  return rows;
}

py::list flat(std::span<const Rational> values) {
  py::list out;
  for (const auto& q : values) out.append(fraction(q));
  return out;
}

OneForm one_form(const py::sequence& seq) {
  OneForm f;
  for (const auto& x : seq) f.components.push_back(rational(x));
  return f;
}

GroupSpec spec(int s, int t, int m, const std::string& flavor, const std::string& side) {
  return GroupSpec(Signature(s, t), m, flavor_from_string(flavor), side_from_string(side));
}

py::dict rep(int s, int t, const std::string& kind) {
  const RepSet r = make_rep(Signature(s, t), rep_kind_from_string(kind));
  py::dict out;
  out["blades"] = r.basis().names();
  py::list mats;
  for (const auto& m : r.matrices) mats.append(matrix(m));
  out["matrices"] = mats;
  return out;
}

py::dict verify(int s, int t, const std::string& kind) {
  const RepSet r = make_rep(Signature(s, t), rep_kind_from_string(kind));
  const VerificationReport report = verify_relations(r);
  std::vector<std::string> messages;
  for (const auto& v : report.violations) messages.push_back(v.message);
  py::dict out;
  out["violations"] = messages;
  out["monomial"] = monomial_check(r);
  const SpanWitness w = span_witness(r);
  out["witness_source"] = w.source;
  out["witness_rank"] = w.rank;
  return out;
}

py::dict identity(int s, int t, const std::vector<int>& signs, const std::string& kind) {
  const RepSet r = make_rep(Signature(s, t), rep_kind_from_string(kind));
  const IdentityReport report = check_sa_identity(r, SignVector{signs});
  py::dict out;
  out["exact"] = report.exact();
  out["hull"] = report.hull();
  return out;
}

py::list prolongation_basis(int s, int t, int m, const std::string& flavor, const std::string& side) {
  const Prolongation p(spec(s, t, m, flavor, side));
  py::list out;
  for (const auto& b : p.basis()) out.append(flat(b.coefficients()));
  return out;
}

py::dict sxi(int s, int t, int m, const py::sequence& xi) {
  const Prolongation p(spec(s, t, m, "cliffordian", "right"));
  const SignVector eps = structure_signs(p.spec());
  const OneForm form = one_form(xi);
  if (form.dim() != p.model_dimension()) throw DimensionMismatch("xi must have length k*m");
  const SxiMembership mem = verify_sxi_membership(p, eps, form);
  py::dict out;
  out["tensor"] = flat(s_xi_element(p.affinors(), eps, form).coefficients());
  out["symmetric"] = mem.symmetric;
  out["slots_in_algebra"] = mem.slots_in_algebra;
  out["in_prolongation"] = mem.in_prolongation;
  return out;
}

py::dict planarity(int s, int t, int m, const py::sequence& upsilon, std::vector<double> velocity, double horizon,
                   double step) {
  const GroupSpec g = spec(s, t, m, "cliffordian", "right");
  const auto aff = structure_affinors(g);
  const SignVector eps = structure_signs(g);
  const std::size_t n = g.model_dimension();
  const FlatConnection trivial(n);
  const FlatConnection deformed = deform(trivial, one_form(upsilon), aff, eps);
  CurveState init{std::vector<double>(n, 0.0), std::move(velocity), 0.0};
  const auto traj = integrate_curve(trivial, init, horizon, step);
  const PlanarityReport report = planarity_report(traj, deformed, aff);
  py::dict out;
  out["max_residual"] = report.max_residual;
  out["samples"] = traj.size();
  out["torsion_preserved"] = deformed.torsion() == trivial.torsion();
  return out;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

py::list acceptance_report(const std::string& table) {
  acceptance::Options options;
  options.epsilon_table_path = table;
  py::list out;
  for (const auto& r : acceptance::run_all(options)) {
    py::dict row;
    row["id"] = r.id;
    row["title"] = r.title;
    row["passed"] = r.passed;
    row["detail"] = r.detail;
    out.append(row);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Clifford algebra representations, prolongations and planar connections";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<InconsistentPropagation>(m, "InconsistentPropagation", PyExc_RuntimeError);

  m.def("rep", &rep, py::arg("s"), py::arg("t"), py::arg("kind") = "periodicity",
        "Blade names and matrices (lists of Fractions) of a representation of Cl(s,t).");
  m.def("verify", &verify, py::arg("s"), py::arg("t"), py::arg("kind") = "periodicity");
  m.def(
      "classify",
      [](int s, int t) {
        const DecompositionRecipe r = classify(Signature(s, t));
        std::vector<std::pair<int, int>> factors;
        for (const auto& f : r.factors) factors.emplace_back(f.s(), f.t());
        return py::make_tuple(std::string(1, r.case_label), factors);
      },
      py::arg("s"), py::arg("t"));
  m.def(
      "epsilon_signs",
      [](int s, int t, const std::string& kind) {
        return epsilon_signs(make_rep(Signature(s, t), rep_kind_from_string(kind))).signs;
      },
      py::arg("s"), py::arg("t"), py::arg("kind") = "left");
  m.def("check_identity", &identity, py::arg("s"), py::arg("t"), py::arg("signs"), py::arg("kind") = "left");
  m.def(
      "lie_algebra_dimension",
      [](int s, int t, int mm, const std::string& flavor, const std::string& side) {
        return lie_algebra_basis(spec(s, t, mm, flavor, side)).dimension();
      },
      py::arg("s"), py::arg("t"), py::arg("m") = 1, py::arg("flavor") = "clifford", py::arg("side") = "right");
  m.def("prolongation_basis", &prolongation_basis, py::arg("s"), py::arg("t"), py::arg("m") = 1,
        py::arg("flavor") = "clifford", py::arg("side") = "right",
        "Basis tensors as flat lists; entry (a*N + b)*N + c is component c of t(e_a, e_b).");
  m.def("sxi", &sxi, py::arg("s"), py::arg("t"), py::arg("m"), py::arg("xi"));
  m.def("planarity", &planarity, py::arg("s"), py::arg("t"), py::arg("m"), py::arg("upsilon"), py::arg("velocity"),
        py::arg("horizon") = 1.0, py::arg("step") = 1e-3,
        "Maximum normalised hull residual of a straight line measured against the deformed connection.");
  m.def("epsilon_table", [](int n) { return epsilon_table_text(n); }, py::arg("max_generators") = 4);
  m.def("run_cli", &run_cli, py::arg("args"), "Run the command-line tool in-process: (exit code, stdout, stderr).");
  m.def("acceptance_report", &acceptance_report, py::arg("epsilon_table"));
}
