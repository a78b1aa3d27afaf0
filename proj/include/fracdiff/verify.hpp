#ifndef FRACDIFF_VERIFY_HPP
#define FRACDIFF_VERIFY_HPP

#include <string>
#include <vector>

#include "fracdiff/tolerances.hpp"

namespace fracdiff::verify {

struct CheckResult {
    std::string suite;
    std::string name;
    double worst_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

// Suites runnable by name from the command line.  run_all preserves this
// order.  Unknown names throw DomainError.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name, const Tolerances& tol);
std::vector<CheckResult> run_all(const Tolerances& tol);

// The numbered acceptance checks (1-8) map onto suites:
//   1 step, 2 bromwich, 3 kummer, 4 integer-reduction, 5 semigroup,
//   6 cable, 7 habitual, 8 oracles.
std::vector<CheckResult> run_criterion(int criterion, const Tolerances& tol);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace fracdiff::verify

#endif
