#pragma once

#include <ostream>
#include <span>
#include <string>

#include "json.hpp"

#include "cliffconn/planar.hpp"
#include "cliffconn/prolongation.hpp"
#include "cliffconn/representation.hpp"

namespace cliffconn {

using Json = nlohmann::ordered_json;

// Single line, ", " and ": " separators, keys in insertion order.
std::string dump_compact(const Json& j);

// {"rows": r, "cols": c, "entries": [["num", "den"], ...]}, row-major.
Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

// {"s", "t", "kind", "blades", "matrices"}
Json to_json(const RepSet& rep);

// {"dim_g1": 0} when the prolongation vanishes; otherwise also N, the flat
// index legend and each basis tensor as a list of ["num", "den"] pairs.
Json prolongation_json(const Prolongation& p);
Json to_json(const BilinearMap& t);

// {"signs": [...], "exact_identity": bool}
Json epsilon_json(const SignVector& eps, const IdentityReport& report);

// One row per signature with 1 <= s + t <= max_generators:
// {"s", "t", "signs", "exact_identity", "hull_identity"}.
Json epsilon_table(int max_generators);

// The table as text: a JSON array with one compact row per line.
std::string epsilon_table_text(int max_generators);

// Header t,x1..xN,v1..vN,residual; shortest round-trip decimal output.
void write_trajectory_csv(std::ostream& out, std::span<const TrajectorySample> trajectory,
                          std::span<const double> residuals);

std::string format_double(double x);

// Human-readable forms for --emit pretty.
std::string pretty_matrix(const RationalMatrix& m);
std::string pretty_rep(const RepSet& rep);

}  // namespace cliffconn
