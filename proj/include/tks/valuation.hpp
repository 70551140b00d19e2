#pragma once

// Invariants of torus-invariant divisorial valuations over a toric Q-Fano
// variety X. A valuation is a nonzero w in N; primitive w is the prime
// divisor F_w extracted by the star subdivision of the fan at w, and the
// order of vanishing of the section u in M along it is <u, w> + A_X(w).
// Under that dictionary every quantity below is an exact polytope computation:
//
//   A_X(w)               sum of the cone coordinates of w
//   vol(-K_X - x F_w)    n! vol(P cap {<u, w> >= x - A_X(w)})
//   tau(w)               A_X(w) + max_P <u, w>
//   S(w)                 integral of the volume function over [0, tau]
//   beta(w)              A_X(w) (-K_X)^n - S(w)
//
// Toric valuations are always dreamy (the Cox ring is a polynomial ring), so
// no finite-generation check is made.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tks/piecewise.hpp"
#include "tks/polytope.hpp"
#include "tks/toric.hpp"

namespace tks {

class ToricValuation {
public:
    // Throws math_error for w = 0 or a dimension mismatch.
    ToricValuation(VarietyPtr variety, LatticeVec w);

    const ToricVariety& variety() const noexcept { return *variety_; }
    const VarietyPtr& variety_ptr() const noexcept { return variety_; }
    const LatticeVec& w() const noexcept { return w_; }
    // Prime divisors over X are the primitive w; others are rescaled valuations.
    bool primitive() const { return w_.content() == 1; }
    ToricValuation primitive_direction() const;
    Int multiplicity() const { return w_.content(); }

private:
    VarietyPtr variety_;
    LatticeVec w_;
};

Rat log_discrepancy(const ToricValuation& v);
Rat tau(const ToricValuation& v);
PiecewisePolynomial volume_function(const ToricValuation& v);

// #{u in kP cap M : <u, w> + k A_X(w) >= j}, the section count behind the
// volume function. Throws budget_error past `budget` enumerated points.
std::uint64_t h0_count(const ToricValuation& v, const Int& k, const Int& j,
                       std::uint64_t budget = oracle_budget_from_env());

Rat s_integral(const ToricValuation& v);
Rat beta(const ToricValuation& v);
// -(1/n) times the derivative of the volume function; the boundary pieces
// supply the extended values at 0 and tau.
PiecewisePolynomial restricted_volume(const ToricValuation& v);

// Largest eps with sigma^*(-K_X) - eps F nef on the star subdivision at w.
// For w on a ray of the fan, F is a divisor on X itself and the test runs on
// the original fan. Non-primitive w scales the primitive answer.
Rat nef_threshold(const ToricValuation& v);

// Dimension of the smallest cone of the fan containing w; the center of the
// valuation on X is the corresponding orbit closure, a point iff this is n.
int center_codim(const ToricValuation& v);

// -(n! vol P) <barycenter, w>: the closed form beta takes for toric
// valuations. Independent of the slab integration path.
Rat beta_from_barycenter(const ToricValuation& v);

struct ValuationProfile {
    LatticeVec w;
    bool primitive = true;
    Rat A;
    Rat tau;
    Rat eps;
    Rat S;
    Rat beta;
    PiecewisePolynomial vol_fn;
    PiecewisePolynomial Q;
    int center_codim = 0;
    // First interior breakpoint of the merged volume function (tau if none).
    Rat first_wall;
};

ValuationProfile compute_profile(const ToricValuation& v);

enum class CertificateStatus { pass, fail, hypothesis_not_met };

std::string to_string(CertificateStatus s);

struct CertificateResult {
    CertificateStatus status = CertificateStatus::hypothesis_not_met;
    // (name, exact value) pairs in a fixed order.
    std::vector<std::pair<std::string, Rat>> quantities;
    // One line per checked conclusion: "label: ok" or "label: FAILED (...)".
    std::vector<std::string> checks;
    // Certificates concern prime divisors; non-primitive w are reduced first.
    bool reduced_to_primitive = false;
};

// Hypothesis: (n/(n+1)) tau (-K_X)^n <= S. Conclusions checked: equality,
// tau = eps, center is a point, and vol(x) = V - x^n V / tau^n on [0, tau].
CertificateResult check_integral_equality_certificate(const ToricValuation& v);

// Hypotheses: A >= (n/(n+1)) tau and beta <= 0. Conclusions checked:
// A = n, tau = eps = n + 1, center is a point.
CertificateResult check_discrepancy_certificate(const ToricValuation& v);

}  // namespace tks
