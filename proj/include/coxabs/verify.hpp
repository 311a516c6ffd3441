#pragma once

/**
 * @file verify.hpp
 * @brief The acceptance checks, shared by `coxabs verify` and the test suite.
 */

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxabs/root_system.hpp"

namespace coxabs {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// One row per conjugacy class of involutions.
struct InvolutionClassRow {
  std::string type;
  std::string closure_type;
  std::string representative;
  std::size_t class_size = 0;
  int reflection_length = 0;
  std::size_t interval_size = 0;
  bool classification = true;
  bool structural = true;
  std::optional<bool> bruteforce;
  bool agree = true;
};

struct SweepSummary {
  std::vector<InvolutionClassRow> rows;
  std::size_t involutions = 0;
  std::size_t disagreements = 0;
  std::size_t bruteforce_checked = 0;
  std::size_t reducible = 0;
  std::size_t product_failures = 0;
  std::vector<std::string> failures;
};

/// Every involution of W (identity included): classification, structural
/// and, when |P(u)| <= bruteforce_cap, brute-force lattice verdicts, plus
/// the product decomposition check for reducible closures. Rows are grouped
/// by conjugacy class.
SweepSummary sweep_involutions(const RootSystemPtr& system, const std::string& type_name,
                               std::size_t bruteforce_cap);

struct VerifyOptions {
  /// Includes E6 in the classification sweep and w0 of H4 in the interval
  /// comparison.
  bool deep = true;
  /// Progress lines, or nullptr.
  std::ostream* log = nullptr;
};

class Verifier {
 public:
  static constexpr int kCriteria = 10;

  explicit Verifier(VerifyOptions options = {});

  /// Runs criterion 1..10. Exceptions are caught and reported as failures.
  CriterionResult run(int id);
  std::vector<CriterionResult> run_all();

 private:
  CriterionResult classification_positives();
  CriterionResult classification_negatives();
  CriterionResult exceptional_witnesses();
  CriterionResult classification_sweep();
  CriterionResult reflection_length_oracle();
  CriterionResult proposition_suite();
  CriterionResult interval_identity();
  CriterionResult hurwitz_orbits_b2();
  CriterionResult product_decomposition();
  CriterionResult field_kernel();

  const std::map<std::string, SweepSummary>& sweeps();
  void note(const std::string& line) const;

  VerifyOptions options_;
  std::optional<std::map<std::string, SweepSummary>> sweeps_;
};

/// "PASS  [n] title: detail (x.xx s)".
std::string format_result(const CriterionResult& result);

/// Types swept for the final classification criterion.
std::vector<std::string> sweep_types(bool deep);
/// Groups of order at most 1152 used by the proposition and interval checks.
std::vector<std::string> small_group_types();

/// Randomized field-axiom and sign checks with a fixed seed; returns the
/// number of failures and writes the first few to failures.
std::size_t field_kernel_checks(std::size_t iterations, unsigned long seed, std::vector<std::string>& failures);

}  // namespace coxabs
