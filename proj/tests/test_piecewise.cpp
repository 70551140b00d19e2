#include <doctest.h>

#include "support.hpp"
#include "tks/piecewise.hpp"

using namespace tks;
using tks::test::R;

TEST_CASE("polynomial arithmetic and calculus") {
    Polynomial p({R(6), R(0), R(-2, 3)});
    CHECK(p.degree() == 2);
    CHECK(p(R(3)) == 0);
    CHECK(p.to_string() == "6 - 2/3*x^2");
    CHECK(p.derivative() == Polynomial({R(0), R(-4, 3)}));
    CHECK(p.antiderivative() == Polynomial({R(0), R(6), R(0), R(-2, 9)}));
    CHECK(p.integral(R(0), R(3)) == 12);
    CHECK((p - p).is_zero());
    CHECK((p * R(3)) == Polynomial({R(18), R(0), R(-2)}));
    CHECK(Polynomial({R(1), R(0), R(0)}).degree() == 0);
}

TEST_CASE("interpolation recovers a polynomial from degree+1 samples") {
    Polynomial p({R(1, 2), R(-3), R(0), R(5, 7)});
    std::vector<Rat> xs = {R(-1), R(0), R(2), R(7, 3)};
    std::vector<Rat> ys;
    for (const auto& x : xs) ys.push_back(p(x));
    CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("Bernstein certificate") {
    CHECK(certify_nonnegative(Polynomial({R(6), R(0), R(-2, 3)}), R(0), R(3)));
    CHECK_FALSE(certify_nonnegative(Polynomial({R(-1, 100), R(0), R(1)}), R(-1), R(1)));
    CHECK(certify_nonnegative(Polynomial({R(26, 100), R(-1), R(1)}), R(0), R(1)));
}

TEST_CASE("piecewise evaluation, merging and continuity checks") {
    // |x - 1| on [0, 3] with a redundant breakpoint at 2.
    PiecewisePolynomial f({R(0), R(1), R(2), R(3)},
                          {Polynomial({R(1), R(-1)}), Polynomial({R(-1), R(1)}), Polynomial({R(-1), R(1)})});
    CHECK(f(R(1, 2)) == R(1, 2));
    CHECK(f(R(5, 2)) == R(3, 2));
    CHECK(f.piece_index(R(1)) == 0);
    CHECK_THROWS_AS(f(R(4)), Error);
    CHECK(f.integral() == R(5, 2));
    CHECK(f.discontinuities().empty());
    CHECK(f.derivative_jumps() == std::vector<Rat>{R(1)});
    auto m = f.merged();
    CHECK(m.breakpoints() == std::vector<Rat>{R(0), R(1), R(3)});
    CHECK_FALSE(f.certify_non_increasing());

    PiecewisePolynomial g({R(0), R(1), R(2)}, {Polynomial({R(1)}), Polynomial({R(0)})});
    CHECK(g.discontinuities() == std::vector<Rat>{R(1)});

    PiecewisePolynomial h({R(0), R(2)}, {Polynomial({R(4), R(0), R(-1)})});
    CHECK(h.certify_non_increasing());
    CHECK(h.derivative()(R(1)) == -2);
}
