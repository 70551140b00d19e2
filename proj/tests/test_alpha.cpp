#include <doctest.h>

#include "support.hpp"
#include "tks/alpha.hpp"
#include "tks/valuation.hpp"

using namespace tks;
using tks::test::R;

TEST_CASE("known alpha invariants") {
    CHECK(alpha(*test::builtin("P1")).alpha == R(1, 2));
    CHECK(alpha(*test::builtin("P2")).alpha == R(1, 3));
    CHECK(alpha(*test::builtin("P3")).alpha == R(1, 4));
    CHECK(alpha(*test::builtin("P1xP1")).alpha == R(1, 2));
    CHECK(alpha(*test::builtin("Bl1P2")).alpha == R(1, 3));
    CHECK(alpha(*test::builtin("Bl3P2")).alpha == R(1, 2));
    CHECK(alpha(*test::builtin("P(1,2,3)")).alpha == R(1, 6));
}

TEST_CASE("alpha is the reciprocal of the largest ray tau, with a valid witness") {
    for (const auto& X : test::corpus()) {
        CAPTURE(X->name());
        auto a = alpha(*X);
        const auto& rays = X->fan().rays();
        Rat best = 0;
        for (std::size_t j = 0; j < rays.size(); ++j) {
            Rat t = tau(ToricValuation(X, rays[j]));
            CHECK(a.ray_thresholds[j] == t);
            best = std::max(best, t);
        }
        CHECK(a.alpha == 1 / best);
        CHECK(X->polytope().contains(a.witness_m));
        CHECK(a.witness_divisor[a.witness_ray_index] == 1 / a.alpha);
        for (std::size_t i = 0; i < rays.size(); ++i) {
            CHECK(a.witness_divisor[i] >= 0);
            CHECK(a.witness_divisor[i] == 1 + pairing(a.witness_m, rays[i]));
        }
        // alpha * D is log canonical and is the boundary of lc pairs.
        std::vector<Rat> scaled;
        for (const auto& d : a.witness_divisor) scaled.push_back(d * a.alpha);
        CHECK(is_lc_torus_pair(X->fan(), scaled));
        for (auto& d : scaled) d *= R(101, 100);
        CHECK_FALSE(is_lc_torus_pair(X->fan(), scaled));
    }
}

TEST_CASE("lc check rejects negative coefficients") {
    auto X = test::builtin("P2");
    std::vector<Rat> bad = {R(1), R(-1), R(0)};
    CHECK_THROWS_AS(is_lc_torus_pair(X->fan(), bad), Error);
}

TEST_CASE("main theorem gate") {
    CHECK(alpha_gate_main_theorem(*test::builtin("P(1,2,3)")).verdict == MainTheoremGate::inapplicable_singular);
    CHECK(to_string(MainTheoremGate::inapplicable_singular) == "theorem inapplicable (singular)");
    for (const auto& X : test::corpus()) {
        if (!X->smooth() || X->dim() < 2) continue;
        CAPTURE(X->name());
        auto g = alpha_gate_main_theorem(*X);
        CHECK(g.threshold == Rat(static_cast<long>(X->dim()), static_cast<long>(X->dim() + 1)));
        CHECK(g.verdict == MainTheoremGate::hypothesis_not_met);
    }
}
