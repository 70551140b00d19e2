#include <doctest.h>

#include "support.hpp"
#include "tks/concavity.hpp"

using namespace tks;
using tks::test::R;

TEST_CASE("exact roots") {
    CHECK(exact_integer_root(Int(343), 3) == std::optional<Int>(Int(7)));
    CHECK_FALSE(exact_integer_root(Int(344), 3).has_value());
    CHECK(exact_root(R(8, 27), 3) == std::optional<Rat>(R(2, 3)));
    CHECK_FALSE(exact_root(R(2), 2).has_value());
}

TEST_CASE("root brackets enclose the root at the requested width") {
    auto b = root_bracket(R(2), 2, R(1, 1000000));
    CHECK(b.lo * b.lo <= 2);
    CHECK(b.hi * b.hi >= 2);
    CHECK(b.hi - b.lo <= R(1, 1000000));
    CHECK(b.lo > R(14142, 10000));
}

TEST_CASE("midpoint comparisons") {
    // sqrt: 1, 2, 3 at q = 1, 4, 9 is exactly linear.
    CHECK(compare_midpoint_root(R(1), R(4), R(9), 2).order == RootOrder::equal);
    CHECK(compare_midpoint_root(R(1), R(5), R(9), 2).order == RootOrder::greater);
    CHECK(compare_midpoint_root(R(1), R(3), R(9), 2).order == RootOrder::less);
    // Irrational roots that separate quickly.
    CHECK(compare_midpoint_root(R(2), R(3), R(4), 2).order == RootOrder::greater);
    // Equal up to a common factor: 2, 8, 18 = 2 * (1, 4, 9).
    CHECK(compare_midpoint_root(R(2), R(8), R(18), 2).order == RootOrder::equal);
}

TEST_CASE("concavity of Q^(1/(n-1))") {
    // Q = x^2 on [0, 1] with n = 3: sqrt(Q) = x is linear.
    PiecewisePolynomial lin({R(0), R(1)}, {Polynomial({R(0), R(0), R(1)})});
    auto r = check_root_concavity(lin, 3);
    CHECK(r.triples == 100);
    CHECK(r.violations == 0);

    // Q = x^4 with n = 3: sqrt(Q) = x^2 is convex.
    PiecewisePolynomial convex({R(0), R(1)}, {Polynomial({R(0), R(0), R(0), R(0), R(1)})});
    CHECK(check_root_concavity(convex, 3).violations > 0);

    // Dimension 1 has nothing to test.
    CHECK(check_root_concavity(convex, 1).triples == 0);
}
