#pragma once

// Alpha invariant of a toric Q-Fano variety.
//
// The infimum over effective D ~_Q -K_X is attained on torus-invariant
// divisors (taken on authority, as for the known value 1/6 of P(1,2,3)).
// A torus-invariant pair (X, sum d_i D_i) is log canonical iff every d_i <= 1,
// and the torus-invariant D ~_Q -K_X are exactly d_i = 1 + <m, v_i> with m in
// the anticanonical polytope P. Hence
//
//   alpha(X) = 1 / max_j (1 + max_{m in P} <m, v_j>),
//
// solved by vertex evaluation over P.

#include <span>
#include <string>
#include <vector>

#include "tks/toric.hpp"

namespace tks {

struct AlphaResult {
    Rat alpha;
    std::size_t witness_ray_index = 0;
    DualVec witness_m;                   // d_i = 1 + <witness_m, v_i>
    std::vector<Rat> witness_divisor;    // the d_i, one per ray
    std::vector<Rat> ray_thresholds;     // 1 + max_P <m, v_j>, one per ray
};

AlphaResult alpha(const ToricVariety& X);

// Log canonicity of (X, sum d_i D_i) for effective torus-invariant boundary.
// Throws math_error "not effective" for a negative coefficient.
bool is_lc_torus_pair(const Fan& fan, std::span<const Rat> coeffs);

enum class MainTheoremGate { hypothesis_met, hypothesis_not_met, inapplicable_singular };

std::string to_string(MainTheoremGate g);

struct GateResult {
    MainTheoremGate verdict;
    Rat alpha;
    Rat threshold;  // n / (n + 1)
};

// Whether alpha(X) >= n/(n+1), the hypothesis under which smooth Fano
// manifolds of dimension n >= 2 are K-stable. Singular fans are reported as
// outside the statement.
GateResult alpha_gate_main_theorem(const ToricVariety& X);

}  // namespace tks
