// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "cliffconn/acceptance.hpp"

using namespace cliffconn;

namespace {

struct Timed {
  acceptance::CriterionResult result;
  double seconds;
};

Timed timed(const std::function<acceptance::CriterionResult()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  acceptance::CriterionResult r = fn();
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {std::move(r), s};
}

}  // namespace

int main(int argc, char** argv) {
  acceptance::Options options;
  options.epsilon_table_path = argc > 1 ? argv[1] : CLIFFCONN_EPSILON_TABLE;

  // Wall-clock limits in seconds; 0 means none.
  const std::vector<std::pair<std::function<acceptance::CriterionResult()>, double>> criteria = {
      {acceptance::relation_suite, 10.0},
      {acceptance::cl30_display, 0},
      {acceptance::span_lemma_suite, 5.0},
      {acceptance::prolongation_vanishing, 60.0},
      {acceptance::quaternionic_prolongation, 0},
      {acceptance::sxi_membership_suite, 0},
      {[&] { return acceptance::epsilon_suite(options); }, 0},
      {[&] { return acceptance::connection_class(options); }, 0},
  };

  bool all = true;
  for (const auto& [fn, limit] : criteria) {
    Timed t = timed(fn);
    char timing[64];
    std::snprintf(timing, sizeof timing, " [%.2f s", t.seconds);
    std::string suffix = timing;
    if (limit > 0) {
      std::snprintf(timing, sizeof timing, ", limit %.0f s", limit);
      suffix += timing;
      if (t.seconds >= limit) {
        t.result.passed = false;
        t.result.detail += "; exceeded the time limit";
      }
    }
    suffix += "]";
    all = all && t.result.passed;
    std::cout << acceptance::format_line(t.result) << suffix << std::endl;
  }

  // Determinism: the in-library re-rendering check plus two full report runs.
  Timed det = timed([&] {
    acceptance::CriterionResult r = acceptance::determinism(options);
    const std::vector<std::string> args = {"report", "--table", options.epsilon_table_path};
    std::ostringstream first, second, err;
    const int c1 = cli::run(args, first, err);
    const int c2 = cli::run(args, second, err);
    if (first.str() != second.str()) {
      r.passed = false;
      r.detail += "; two report runs differ";
    } else {
      r.detail += "; two report runs byte-identical (" + std::to_string(first.str().size()) + " bytes, exit " +
                  std::to_string(c1) + "/" + std::to_string(c2) + ")";
    }
    return r;
  });
  all = all && det.result.passed;
  std::printf("%s [%.2f s]\n", acceptance::format_line(det.result).c_str(), det.seconds);

  std::cout << (all ? "all acceptance criteria passed" : "some acceptance criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
