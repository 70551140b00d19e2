// Acceptance battery: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <iostream>

#include "tks/verify.hpp"

int main() { return tks::run_builtin_suite(std::cout); }
