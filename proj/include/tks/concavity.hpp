#pragma once

// Exact midpoint-concavity test for x -> Q(x)^(1/k) without irrational
// arithmetic. k-th roots are either found exactly (perfect powers, directly
// or after dividing through by one endpoint) or bracketed by rational
// intervals that are refined until the two sides separate.

#include <optional>
#include <string>
#include <vector>

#include "tks/lattice.hpp"
#include "tks/piecewise.hpp"

namespace tks {

struct RootBracket {
    Rat lo;
    Rat hi;  // lo^k <= q <= hi^k, hi - lo <= requested width
};

// q >= 0, k >= 1.
RootBracket root_bracket(const Rat& q, unsigned k, const Rat& width);
std::optional<Int> exact_integer_root(const Int& a, unsigned k);
std::optional<Rat> exact_root(const Rat& q, unsigned k);

enum class RootOrder { less, equal, greater };

struct MidpointComparison {
    RootOrder order;
    // true when equality could only be concluded by exhausting refinement
    // (the brackets never separated down to 1e-90).
    bool by_refinement = false;
};

// Sign of qm^(1/k) - (qa^(1/k) + qb^(1/k)) / 2.
MidpointComparison compare_midpoint_root(const Rat& qa, const Rat& qm, const Rat& qb, unsigned k);

struct ConcavityReport {
    int triples = 0;
    int violations = 0;
    int declared_equal_by_refinement = 0;
    std::vector<std::string> details;
};

// Midpoint concavity of Q^(1/(n-1)) at `triples` consecutive triples of the
// grid tau*i/(triples+1). Dimension 1 has nothing to test.
ConcavityReport check_root_concavity(const PiecewisePolynomial& Q, unsigned n, int triples = 100);

}  // namespace tks
