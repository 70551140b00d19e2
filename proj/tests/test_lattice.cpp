#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tks/lattice.hpp"

using namespace tks;
using tks::test::R;

TEST_CASE("rationals stay in lowest terms and print as p/q") {
    Rat x = Rat(6, 4) + Rat(1, 2);
    CHECK(x == 2);
    CHECK(fraction_string(x) == "2/1");
    CHECK(fraction_string(Rat(-4, 6)) == "-2/3");
    CHECK(short_string(Rat(4, 2)) == "2");
    CHECK(parse_rat("  -10/4 ") == Rat(-5, 2));
    CHECK(parse_rat("7") == 7);
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat("abc"), Error);
    CHECK(floor_rat(Rat(-1, 2)) == -1);
    CHECK(ceil_rat(Rat(-1, 2)) == 0);
    CHECK(ceil_rat(Rat(3)) == 3);
    CHECK(pow_rat(Rat(2, 3), 3) == Rat(8, 27));
}

TEST_CASE("primitive vectors") {
    CHECK(primitivize(LatticeVec{4, -6}) == LatticeVec{2, -3});
    CHECK(LatticeVec{4, -6}.content() == 2);
    CHECK(LatticeVec{0, 0}.content() == 0);
    try {
        primitivize(LatticeVec{0, 0, 0});
        FAIL("zero vector accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::math);
        CHECK(std::string(e.what()).find("zero vector") != std::string::npos);
    }
}

TEST_CASE("determinant, rank and linear solves") {
    RatMatrix A = {{R(2), R(1)}, {R(1), R(3)}};
    CHECK(determinant(A) == 5);
    CHECK(matrix_rank(A) == 2);
    CHECK(matrix_rank({{R(1), R(2)}, {R(2), R(4)}}) == 1);
    auto x = solve_linear(A, {R(3), R(4)});
    CHECK(x[0] == 1);
    CHECK(x[1] == 1);
    CHECK_THROWS_AS(solve_linear({{R(1), R(2)}, {R(2), R(4)}}, {R(1), R(1)}), Error);
}

TEST_CASE("cone coordinates reconstruct 1000 random points") {
    std::mt19937_64 rng(20260917);
    std::uniform_int_distribution<long> d(-9, 9);
    int inside = 0, outside = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 2 + trial % 3;
        std::vector<LatticeVec> gens;
        RatMatrix M(n, std::vector<Rat>(n));
        do {
            gens.clear();
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Int> c;
                for (std::size_t j = 0; j < n; ++j) c.emplace_back(d(rng));
                gens.emplace_back(std::move(c));
            }
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) M[i][j] = Rat(gens[j][i]);
        } while (determinant(M) == 0);
        std::vector<Int> wc;
        for (std::size_t j = 0; j < n; ++j) wc.emplace_back(d(rng));
        LatticeVec w(std::move(wc));
        auto coords = cone_coordinates(w, gens);

        // Independent route: solve the system directly.
        std::vector<Rat> rhs;
        for (const Int& c : w) rhs.push_back(Rat(c));
        auto lambda = solve_linear(M, rhs);
        for (std::size_t i = 0; i < n; ++i) {
            Rat sum = 0;
            for (std::size_t j = 0; j < n; ++j) sum += lambda[j] * Rat(gens[j][i]);
            REQUIRE(sum == Rat(w[i]));
        }
        bool nonneg = std::all_of(lambda.begin(), lambda.end(), [](const Rat& l) { return l >= 0; });
        REQUIRE(coords.has_value() == nonneg);
        if (coords) {
            CHECK(*coords == lambda);
            ++inside;
        } else {
            ++outside;
        }
    }
    CHECK(inside > 0);
    CHECK(outside > 0);
}

TEST_CASE("cone coordinates reject non-simplicial generator sets") {
    std::vector<LatticeVec> gens = {LatticeVec{1, 0}, LatticeVec{2, 0}};
    CHECK_THROWS_AS(cone_coordinates(LatticeVec{1, 1}, gens), Error);
}

TEST_CASE("affine dimension") {
    std::vector<DualVec> pts = {DualVec{R(0), R(0)}, DualVec{R(1), R(1)}, DualVec{R(2), R(2)}};
    CHECK(affine_dimension(pts) == 1);
    pts.push_back(DualVec{R(0), R(1)});
    CHECK(affine_dimension(pts) == 2);
}
