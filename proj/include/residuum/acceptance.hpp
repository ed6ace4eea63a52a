#ifndef RESIDUUM_ACCEPTANCE_HPP
#define RESIDUUM_ACCEPTANCE_HPP

#include <string>
#include <vector>

#include "residuum/report.hpp"

namespace residuum {

struct CriterionResult {
  int number;
  std::string name;
  bool pass;
  std::string detail; // populated on failure
};

/// Criteria 1-11: the exact verification battery (tolerance 0 throughout).
std::vector<CriterionResult> run_acceptance_criteria();

/// Criteria 1-11 plus the determinism criterion, assembled as a report.
Report selftest_report();

} // namespace residuum

#endif
