#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffconn/prolongation.hpp"

namespace cliffconn::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

struct Options {
  // Committed copy of the epsilon table; compared against a fresh one.
  std::string epsilon_table_path;
  std::uint64_t seed = 20240917;
};

// Every sign vector with eps_E = +1 for which the coefficient identity
// sum_i eps_i (F_i I_j) (x) F_i = sum_i eps_i F_i (x) (I_j F_i) holds for all
// generators, found by enumerating all 2^(k-1) candidates.
std::vector<SignVector> exhaustive_sign_solutions(const RepSet& rep);

// Largest number of generators covered by the committed epsilon table.
inline constexpr int kEpsilonTableGenerators = 4;

// Residual threshold for the planarity criterion.
inline constexpr double kPlanarityTolerance = 1e-7;

CriterionResult relation_suite();
CriterionResult cl30_display();
CriterionResult span_lemma_suite();
CriterionResult prolongation_vanishing();
CriterionResult quaternionic_prolongation();
CriterionResult sxi_membership_suite();
CriterionResult epsilon_suite(const Options& options);
CriterionResult connection_class(const Options& options);
CriterionResult determinism(const Options& options);

// Criteria 1 to 9 in order. Output is a pure function of the options.
std::vector<CriterionResult> run_all(const Options& options);

std::string format_line(const CriterionResult& r);

}  // namespace cliffconn::acceptance
