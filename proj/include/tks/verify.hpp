#pragma once

// The built-in acceptance battery. Every criterion compares exact values and
// reports a diff line per mismatch; the log carries no timings, so two runs
// produce identical output.

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "tks/lattice.hpp"

namespace tks {

// Reference values for the P(1,2,3) fan with w = (-1, 0). Editable so the
// harness can be shown to fail.
struct SuiteExpectations {
    Rat A = 2;
    Rat tau = 3;
    Rat eps = 3;
    std::vector<Rat> vol_breakpoints = {0, 3};
    std::vector<Rat> vol_coeffs = {6, 0, Rat(-2, 3)};
    Rat S = 12;
    Rat beta = 0;
    Rat degree = 6;
    Rat alpha = Rat(1, 6);
    Rat alpha_p1 = Rat(1, 2);
};

// Overrides one scalar field ("beta=1", "alpha=1/5", ...). Throws parse_error
// for unknown keys or malformed values.
void apply_expectation_override(SuiteExpectations& exp, const std::string& assignment);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::vector<std::string> diffs;
};

// Runs the criteria in `only` (all eight when empty), in order.
std::vector<CriterionResult> run_acceptance_suite(const SuiteExpectations& exp = {}, const std::set<int>& only = {});

// Prints one PASS/FAIL line per criterion followed by its diffs. Returns 0
// when everything passed, 1 otherwise.
int run_builtin_suite(std::ostream& out, const SuiteExpectations& exp = {}, const std::set<int>& only = {});

}  // namespace tks
