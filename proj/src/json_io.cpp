#include "cliffconn/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace cliffconn {

namespace {

void dump_into(const Json& j, std::string& out) {
  if (j.is_object()) {
    out += '{';
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ", ";
      first = false;
      out += Json(key).dump();
      out += ": ";
      dump_into(value, out);
    }
    out += '}';
  } else if (j.is_array()) {
    out += '[';
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ", ";
      dump_into(j[i], out);
    }
    out += ']';
  } else {
    out += j.dump();
  }
}

Json rational_json(const Rational& q) {
  auto [num, den] = to_strings(q);
  return Json::array({num, den});
}

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw InvalidInput("expected a [\"num\", \"den\"] pair");
  }
  return from_strings(j[0].get<std::string>(), j[1].get<std::string>());
}

std::string entry_text(const Rational& q) {
  if (sgn(q) == 0) return ".";
  return q.get_str();
}

}  // namespace

std::string dump_compact(const Json& j) {
  std::string out;
  dump_into(j, out);
  return out;
}

Json to_json(const RationalMatrix& m) {
  Json entries = Json::array();
  for (const auto& q : m.entries()) entries.push_back(rational_json(q));
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = std::move(entries);
  return j;
}

RationalMatrix matrix_from_json(const Json& j) {
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols) {
      throw InvalidInput("matrix entries do not match rows * cols");
    }
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(entries[r * cols + c]);
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed matrix json: ") + e.what());
  }
}

Json to_json(const RepSet& rep) {
  Json j;
  j["s"] = rep.sig.s();
  j["t"] = rep.sig.t();
  j["kind"] = to_string(rep.kind);
  j["blades"] = rep.basis().names();
  Json mats = Json::array();
  for (const auto& m : rep.matrices) mats.push_back(to_json(m));
  j["matrices"] = std::move(mats);
  return j;
}

Json to_json(const BilinearMap& t) {
  Json out = Json::array();
  for (const auto& q : t.coefficients()) out.push_back(rational_json(q));
  return out;
}

Json prolongation_json(const Prolongation& p) {
  Json j;
  j["dim_g1"] = p.basis().size();
  if (p.basis().empty()) return j;
  j["N"] = p.model_dimension();
  j["legend"] = "entry (a*N + b)*N + c is component c of t(e_a, e_b)";
  Json basis = Json::array();
  for (const auto& t : p.basis()) basis.push_back(to_json(t));
  j["basis"] = std::move(basis);
  return j;
}

Json epsilon_json(const SignVector& eps, const IdentityReport& report) {
  Json j;
  j["signs"] = eps.signs;
  j["exact_identity"] = report.exact();
  return j;
}

Json epsilon_table(int max_generators) {
  Json rows = Json::array();
  for (int n = 1; n <= max_generators; ++n) {
    for (int s = n; s >= 0; --s) {
      const RepSet rep = left_regular_rep(Signature(s, n - s));
      const SignVector eps = epsilon_signs(rep);
      const IdentityReport report = check_sa_identity(rep, eps);
      Json row;
      row["s"] = s;
      row["t"] = n - s;
      row["signs"] = eps.signs;
      row["exact_identity"] = report.exact();
      row["hull_identity"] = report.hull();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string epsilon_table_text(int max_generators) {
  const Json table = epsilon_table(max_generators);
  std::string out = "[\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    out += "  " + dump_compact(table[i]);
    out += i + 1 < table.size() ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_trajectory_csv(std::ostream& out, std::span<const TrajectorySample> trajectory,
                          std::span<const double> residuals) {
  if (residuals.size() != trajectory.size()) throw DimensionMismatch("one residual per sample expected");
  const std::size_t n = trajectory.empty() ? 0 : trajectory.front().state.position.size();
  out << 't';
  for (std::size_t i = 1; i <= n; ++i) out << ",x" << i;
  for (std::size_t i = 1; i <= n; ++i) out << ",v" << i;
  out << ",residual\n";
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    const auto& s = trajectory[k].state;
    out << format_double(s.time);
    for (double x : s.position) out << ',' << format_double(x);
    for (double v : s.velocity) out << ',' << format_double(v);
    out << ',' << format_double(residuals[k]) << '\n';
  }
}

std::string pretty_matrix(const RationalMatrix& m) {
  std::size_t width = 1;
  for (const auto& q : m.entries()) width = std::max(width, entry_text(q).size());
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string e = entry_text(m(r, c));
      out << (c ? " " : "") << std::string(width - e.size(), ' ') << e;
    }
    out << "]\n";
  }
  return out.str();
}

std::string pretty_rep(const RepSet& rep) {
  const BladeBasis basis = rep.basis();
  const auto names = basis.names();
  std::ostringstream out;
  out << rep.sig.label() << ", " << to_string(rep.kind) << " representation, " << rep.dimension() << " x "
      << rep.dimension() << "\n";
  for (std::size_t i = 0; i < rep.matrices.size(); ++i) {
    out << names[i] << ":\n" << pretty_matrix(rep.matrices[i]);
  }

  // Signed pattern of the generic element: which blade sits in each cell.
  const std::size_t k = rep.dimension();
  std::vector<std::string> cells(k * k);
  for (std::size_t i = 0; i < rep.matrices.size(); ++i) {
    const auto& m = rep.matrices[i];
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        const int sign = sgn(m(r, c));
        if (sign == 0) continue;
        std::string& cell = cells[r * k + c];
        if (!cell.empty()) cell += ' ';
        cell += (sign > 0 ? "+" : "-") + names[i];
      }
    }
  }
  std::size_t width = 1;
  for (auto& c : cells) {
    if (c.empty()) c = ".";
    width = std::max(width, c.size());
  }
  out << "generic element:\n";
  for (std::size_t r = 0; r < k; ++r) {
    out << "  [";
    for (std::size_t c = 0; c < k; ++c) {
      const std::string& e = cells[r * k + c];
      out << (c ? " " : "") << std::string(width - e.size(), ' ') << e;
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace cliffconn
