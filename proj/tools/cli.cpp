#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "cliffconn/acceptance.hpp"
#include "cliffconn/json_io.hpp"
#include "cliffconn/planar.hpp"
#include "cliffconn/prolongation.hpp"

#ifndef CLIFFCONN_DEFAULT_TABLE
#define CLIFFCONN_DEFAULT_TABLE ""
#endif

namespace cliffconn::cli {

namespace {

struct Flags {
  int s = -1;
  int t = -1;
  int m = 1;
  std::string kind;
  std::string flavor = "clifford";
  std::string side = "right";
  std::string emit = "json";
  std::string out;
  std::uint64_t seed = 1;
  // planar-demo
  double horizon = 1.0;
  double step = 1e-3;
  // sxi
  int xi = 0;
  // report
  std::string table = CLIFFCONN_DEFAULT_TABLE;
  std::string write_table;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Result text plus check status.
struct Output {
  std::string text;
  bool ok = true;
};

void add_signature(CLI::App* cmd, Flags& f) {
  cmd->add_option("--s", f.s, "number of generators squaring to +1")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--t", f.t, "number of generators squaring to -1")->required()->check(CLI::NonNegativeNumber);
}

void add_emit(CLI::App* cmd, Flags& f, std::vector<std::string> allowed) {
  cmd->add_option("--emit", f.emit, "output format")->check(CLI::IsMember(std::move(allowed)));
}

void add_out(CLI::App* cmd, Flags& f) { cmd->add_option("--out", f.out, "write the result to this file"); }

void add_kind(CLI::App* cmd, Flags& f) {
  cmd->add_option("--kind", f.kind, "left | right | periodicity")
      ->check(CLI::IsMember({"left", "right", "periodicity"}));
}

void add_model(CLI::App* cmd, Flags& f) {
  cmd->add_option("--m", f.m, "number of copies of the algebra in the model space")->check(CLI::PositiveNumber);
  cmd->add_option("--side", f.side, "right | left")->check(CLI::IsMember({"right", "left"}));
}

std::string line(const Json& j) { return dump_compact(j) + "\n"; }

std::string signs_text(const SignVector& eps) {
  std::string out;
  for (int e : eps.signs) out += e > 0 ? '+' : '-';
  return out;
}

Signature signature(const Flags& f) {
  try {
    return Signature(f.s, f.t);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

GroupSpec group_spec(const Flags& f, Flavor flavor) {
  try {
    return GroupSpec(signature(f), f.m, flavor, side_from_string(f.side));
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

RepSet representation(const Flags& f, const std::string& fallback) {
  const Signature sig = signature(f);
  if (sig.generators() == 0) throw UsageError("Cl(0,0) has no generators to represent");
  return make_rep(sig, rep_kind_from_string(f.kind.empty() ? fallback : f.kind));
}

Output cmd_rep(const Flags& f) {
  const RepSet rep = representation(f, "periodicity");
  if (f.emit == "pretty") return {pretty_rep(rep)};
  return {line(to_json(rep))};
}

Output cmd_verify(const Flags& f) {
  const RepSet rep = representation(f, "periodicity");
  const VerificationReport report = verify_relations(rep);
  const bool monomial = monomial_check(rep);
  std::optional<SpanWitness> witness;
  try {
    witness = span_witness(rep, f.seed);
  } catch (const NoWitness&) {
  }
  const bool ok = report.ok() && monomial && witness && witness->rank == rep.dimension();

  if (f.emit == "pretty") {
    std::ostringstream out;
    out << rep.sig.label() << " " << to_string(rep.kind) << "\n";
    out << "relations: " << (report.ok() ? "ok" : std::to_string(report.violations.size()) + " violations") << "\n";
    for (const auto& v : report.violations) out << "  " << v.message << "\n";
    out << "monomial: " << (monomial ? "yes" : "no") << "\n";
    if (witness) {
      out << "span witness: " << witness->source << ", rank " << witness->rank << " of " << rep.dimension() << "\n";
    } else {
      out << "span witness: none found\n";
    }
    return {out.str(), ok};
  }
  Json j;
  j["s"] = rep.sig.s();
  j["t"] = rep.sig.t();
  j["kind"] = to_string(rep.kind);
  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back(v.message);
  j["violations"] = std::move(violations);
  j["monomial"] = monomial;
  if (witness) {
    Json w;
    w["source"] = witness->source;
    w["rank"] = witness->rank;
    Json x = Json::array();
    for (const auto& q : witness->x) x.push_back(q.get_str());
    w["x"] = std::move(x);
    j["span_witness"] = std::move(w);
  } else {
    j["span_witness"] = nullptr;
  }
  j["ok"] = ok;
  return {line(j), ok};
}

Output cmd_classify(const Flags& f) {
  DecompositionRecipe recipe;
  try {
    recipe = classify(signature(f));
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  if (f.emit == "pretty") {
    std::string out = recipe.sig.label() + " case " + recipe.case_label + ": ";
    for (std::size_t i = 0; i < recipe.factors.size(); ++i) out += (i ? " (x) " : "") + recipe.factors[i].label();
    return {out + "\n"};
  }
  Json j;
  j["s"] = recipe.sig.s();
  j["t"] = recipe.sig.t();
  j["case"] = std::string(1, recipe.case_label);
  Json factors = Json::array();
  for (const auto& sig : recipe.factors) factors.push_back(Json::array({sig.s(), sig.t()}));
  j["factors"] = std::move(factors);
  return {line(j)};
}

Output cmd_epsilons(const Flags& f) {
  const RepSet rep = representation(f, "left");
  const SignVector eps = epsilon_signs(rep);
  const IdentityReport report = check_sa_identity(rep, eps);
  if (f.emit == "pretty") {
    std::ostringstream out;
    const auto names = rep.basis().names();
    out << rep.sig.label() << " signs " << signs_text(eps) << "\n";
    for (std::size_t i = 0; i < names.size(); ++i) out << "  " << names[i] << " " << (eps[i] > 0 ? "+1" : "-1") << "\n";
    for (const auto& g : report.generators) {
      out << "generator " << g.generator + 1 << ": exact " << (g.exact ? "yes" : "no") << ", hull "
          << (g.hull ? "yes" : "no") << "\n";
    }
    return {out.str(), report.hull()};
  }
  return {line(epsilon_json(eps, report)), report.hull()};
}

Output cmd_prolong(const Flags& f) {
  const Prolongation p(group_spec(f, flavor_from_string(f.flavor)));
  if (f.emit == "pretty") {
    std::ostringstream out;
    out << p.spec().sig().label() << " m=" << p.spec().m() << " " << to_string(p.spec().flavor()) << ": N "
        << p.model_dimension() << ", dim g " << p.algebra().dimension() << ", dim g1 " << p.basis().size() << "\n";
    return {out.str()};
  }
  return {line(prolongation_json(p))};
}

Output cmd_sxi(const Flags& f) {
  const Prolongation p(group_spec(f, Flavor::Cliffordian));
  const SignVector eps = structure_signs(p.spec());
  const std::size_t n = p.model_dimension();
  if (f.xi < 0 || static_cast<std::size_t>(f.xi) > n) {
    throw UsageError("--xi must lie between 1 and " + std::to_string(n));
  }
  std::vector<std::size_t> forms;
  if (f.xi > 0) {
    forms.push_back(static_cast<std::size_t>(f.xi - 1));
  } else {
    for (std::size_t a = 0; a < n; ++a) forms.push_back(a);
  }
  Json members = Json::array();
  bool all = true;
  for (std::size_t a : forms) {
    const SxiMembership m = verify_sxi_membership(p, eps, OneForm::basis(n, a));
    all = all && m.ok();
    Json row;
    row["xi"] = a + 1;
    row["symmetric"] = m.symmetric;
    row["slots_in_algebra"] = m.slots_in_algebra;
    row["in_prolongation"] = m.in_prolongation;
    members.push_back(std::move(row));
  }
  const std::size_t rk = sxi_rank(p.spec(), eps);
  const bool ok = all && rk == n;
  if (f.emit == "pretty") {
    std::ostringstream out;
    out << p.spec().sig().label() << " m=" << p.spec().m() << ", N " << n << ", signs " << signs_text(eps) << "\n";
    for (const auto& row : members) {
      out << "  e" << row["xi"].get<std::size_t>() << "*: "
          << (row["in_prolongation"].get<bool>() && row["slots_in_algebra"].get<bool>() ? "member" : "NOT a member")
          << "\n";
    }
    out << "rank of xi -> S^xi: " << rk << " of " << n << "\n";
    return {out.str(), ok};
  }
  Json j;
  j["N"] = n;
  j["dim_g1"] = p.basis().size();
  j["signs"] = eps.signs;
  j["members"] = std::move(members);
  j["rank"] = rk;
  j["injective"] = rk == n;
  return {line(j), ok};
}

Output cmd_planar_demo(const Flags& f) {
  const GroupSpec spec = group_spec(f, Flavor::Cliffordian);
  if (!(f.step > 0) || !(f.horizon >= 0)) throw UsageError("--step must be positive and --horizon non-negative");
  const auto aff = structure_affinors(spec);
  const SignVector eps = structure_signs(spec);
  const std::size_t n = spec.model_dimension();

  std::mt19937_64 rng(f.seed);
  auto small = [&rng](long r) { return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * r + 1)) - r; };
  OneForm upsilon;
  for (std::size_t i = 0; i < n; ++i) upsilon.components.emplace_back(small(3));
  CurveState init;
  for (std::size_t i = 0; i < n; ++i) init.position.push_back(static_cast<double>(small(3)));
  for (std::size_t i = 0; i < n; ++i) init.velocity.push_back(static_cast<double>(small(3)) + 0.5);

  const FlatConnection trivial(n);
  const FlatConnection deformed = deform(trivial, upsilon, aff, eps);
  const bool parallel = check_structure(trivial, aff).parallel;
  const bool torsion = deformed.torsion() == trivial.torsion();
  const auto traj = integrate_curve(trivial, init, f.horizon, f.step);
  const PlanarityReport report = planarity_report(traj, deformed, aff);
  const bool ok = parallel && torsion && report.max_residual <= acceptance::kPlanarityTolerance;

  if (f.emit == "csv") {
    std::ostringstream out;
    write_trajectory_csv(out, traj, report.residuals);
    return {out.str(), ok};
  }
  Json j;
  j["s"] = spec.sig().s();
  j["t"] = spec.sig().t();
  j["m"] = spec.m();
  j["N"] = n;
  j["seed"] = f.seed;
  Json u = Json::array();
  for (const auto& q : upsilon.components) u.push_back(q.get_str());
  j["upsilon"] = std::move(u);
  j["velocity"] = init.velocity;
  j["samples"] = traj.size();
  j["parallel_structure"] = parallel;
  j["torsion_preserved"] = torsion;
  j["max_residual"] = report.max_residual;
  j["tolerance"] = acceptance::kPlanarityTolerance;
  j["planar"] = report.max_residual <= acceptance::kPlanarityTolerance;
  if (f.emit == "pretty") {
    std::ostringstream out;
    out << spec.sig().label() << " m=" << spec.m() << ", N " << n << ", " << traj.size() << " samples\n"
        << "max normalised residual " << format_double(report.max_residual) << " (tolerance "
        << format_double(acceptance::kPlanarityTolerance) << "): " << (ok ? "planar" : "NOT planar") << "\n";
    return {out.str(), ok};
  }
  return {line(j), ok};
}

Output cmd_report(const Flags& f) {
  if (!f.write_table.empty()) {
    std::ofstream file(f.write_table, std::ios::binary);
    if (!file) throw UsageError("cannot write " + f.write_table);
    file << epsilon_table_text(acceptance::kEpsilonTableGenerators);
  }
  acceptance::Options options;
  options.epsilon_table_path = f.table;
  options.seed = f.seed;
  const auto results = acceptance::run_all(options);
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (f.emit == "json") {
    Json rows = Json::array();
    for (const auto& r : results) {
      Json row;
      row["id"] = r.id;
      row["title"] = r.title;
      row["passed"] = r.passed;
      row["detail"] = r.detail;
      rows.push_back(std::move(row));
    }
    Json j;
    j["criteria"] = std::move(rows);
    j["passed"] = ok;
    return {line(j), ok};
  }
  std::string out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    out += acceptance::format_line(r) + "\n";
    passed += r.passed;
  }
  out += std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed\n";
  return {out, ok};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app("Exact Clifford algebra representations, prolongations and planar connections", "cliffconn");
  app.require_subcommand(1);

  auto* rep = app.add_subcommand("rep", "matrix representation of Cl(s,t)");
  add_signature(rep, f);
  add_kind(rep, f);
  add_emit(rep, f, {"json", "pretty"});
  add_out(rep, f);

  auto* verify = app.add_subcommand("verify", "check relations, monomiality and a span witness");
  add_signature(verify, f);
  add_kind(verify, f);
  verify->add_option("--seed", f.seed, "seed for random witness candidates");
  add_emit(verify, f, {"json", "pretty"});
  add_out(verify, f);

  auto* cls = app.add_subcommand("classify", "periodicity decomposition of Cl(s,t)");
  add_signature(cls, f);
  add_emit(cls, f, {"json", "pretty"});
  add_out(cls, f);

  auto* eps = app.add_subcommand("epsilons", "sign coefficients and the S^A identity");
  add_signature(eps, f);
  add_kind(eps, f);
  add_emit(eps, f, {"json", "pretty"});
  add_out(eps, f);

  auto* prolong = app.add_subcommand("prolong", "first prolongation of the structure algebra");
  add_signature(prolong, f);
  add_model(prolong, f);
  prolong->add_option("--flavor", f.flavor, "clifford | cliffordian | full")
      ->check(CLI::IsMember({"clifford", "cliffordian", "full"}));
  add_emit(prolong, f, {"json", "pretty"});
  add_out(prolong, f);

  auto* sxi = app.add_subcommand("sxi", "S^xi elements for the Cliffordian algebra");
  add_signature(sxi, f);
  add_model(sxi, f);
  sxi->add_option("--xi", f.xi, "check only the one-form e_xi^* (1-based)");
  add_emit(sxi, f, {"json", "pretty"});
  add_out(sxi, f);

  auto* planar = app.add_subcommand("planar-demo", "planarity of a geodesic under a random deformation");
  add_signature(planar, f);
  add_model(planar, f);
  planar->add_option("--seed", f.seed, "seed for the deformation and initial velocity");
  planar->add_option("--horizon", f.horizon, "integration time");
  planar->add_option("--step", f.step, "RK4 step");
  add_emit(planar, f, {"json", "csv", "pretty"});
  add_out(planar, f);

  auto* report = app.add_subcommand("report", "run the acceptance criteria");
  report->add_option("--seed", f.seed, "seed for randomised criteria");
  report->add_option("--table", f.table, "committed epsilon table to compare against");
  report->add_option("--write-table", f.write_table, "write a freshly generated epsilon table here first");
  add_emit(report, f, {"pretty", "json"});
  add_out(report, f);

  // Subcommand-specific defaults.
  planar->preparse_callback([&f](std::size_t) { f.m = 2; });
  report->preparse_callback([&f](std::size_t) {
    f.emit = "pretty";
    f.seed = acceptance::Options{}.seed;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "cliffconn: " << e.what() << "\n";
    return kUsage;
  }

  Output result;
  try {
    if (*rep) result = cmd_rep(f);
    else if (*verify) result = cmd_verify(f);
    else if (*cls) result = cmd_classify(f);
    else if (*eps) result = cmd_epsilons(f);
    else if (*prolong) result = cmd_prolong(f);
    else if (*sxi) result = cmd_sxi(f);
    else if (*planar) result = cmd_planar_demo(f);
    else if (*report) result = cmd_report(f);
  } catch (const UsageError& e) {
    err << "cliffconn: " << e.what() << "\n";
    return kUsage;
  } catch (const InconsistentPropagation& e) {
    err << "cliffconn: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    err << "cliffconn: " << e.what() << "\n";
    return kCheckFailed;
  }

  if (f.out.empty()) {
    out << result.text;
  } else {
    std::ofstream file(f.out, std::ios::binary);
    if (!file) {
      err << "cliffconn: cannot write " << f.out << "\n";
      return kUsage;
    }
    file << result.text;
  }
  return result.ok ? kOk : kCheckFailed;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace cliffconn::cli
