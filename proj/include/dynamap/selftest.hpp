#pragma once

#include "dynamap/tolerances.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dynamap::selftest {

struct CriterionResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;  // worst observed value for this criterion
    double threshold = 0.0; // bound the measured value must respect
    std::string detail;
};

/// Runs the full acceptance suite. Criterion thresholds are fixed constants;
/// where a bound plays the role of an equality tolerance it additionally
/// tightens to the configured tol_eq, so an unsatisfiable override fails the
/// suite rather than silently loosening it.
std::vector<CriterionResult> run_acceptance(const Tolerances& tol = {}, std::uint64_t seed = 42);

bool all_passed(const std::vector<CriterionResult>& results);

/// One pass/fail line per criterion with the measured value and threshold.
void print_results(std::ostream& out, const std::vector<CriterionResult>& results);

} // namespace dynamap::selftest
