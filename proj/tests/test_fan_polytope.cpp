#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tks/polytope.hpp"

using namespace tks;
using tks::test::R;

namespace {

std::string invariant_message(std::size_t dim, std::vector<LatticeVec> rays, std::vector<Cone> cones) {
    try {
        Fan f(dim, std::move(rays), std::move(cones));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invariant);
        return e.what();
    }
    return "";
}

bool contains_text(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("fan validation names the offending ray or cone") {
    using V = LatticeVec;
    CHECK(contains_text(invariant_message(2, {V{1, 0}, V{0, 1}, V{1, 0}, V{-1, -1}}, {{{0, 1}}, {{1, 3}}, {{3, 2}}}),
                        "ray 2 duplicates ray 0"));
    CHECK(contains_text(invariant_message(2, {V{2, 0}, V{0, 1}, V{-1, -1}}, {{{0, 1}}, {{1, 2}}, {{2, 0}}}),
                        "ray 0 (2,0) is not primitive"));
    CHECK(contains_text(invariant_message(2, {V{1, 0}, V{0, 1}, V{-1, -1}}, {{{0, 1}}, {{1, 2}}}), "fan not complete"));
    CHECK(contains_text(invariant_message(2, {V{1, 0}, V{0, 1}, V{-1, -1}}, {{{0, 1, 2}}}), "not simplicial"));
    CHECK(contains_text(invariant_message(2, {V{1, 0}, V{0, 1}, V{-1, -1}}, {{{0, 1}}, {{1, 5}}, {{2, 0}}}),
                        "cone 1 references missing ray 5"));
    CHECK(contains_text(invariant_message(2, {V{1, 0}, V{0, 1}, V{-1, 0}, V{0, -1}},
                                          {{{0, 1}}, {{1, 2}}, {{2, 3}}, {{3, 0}}, {{0, 2}}}),
                        "cone 4"));
}

TEST_CASE("the surface Y and its contraction P(1,2,3) load") {
    auto Y = test::builtin("Y");
    CHECK(Y->fan().rays().size() == 4);
    CHECK(Y->fan().cones().size() == 4);
    auto X = test::builtin("P(1,2,3)");
    CHECK(X->fan().cones().size() == 3);
    CHECK_FALSE(X->smooth());
}

TEST_CASE("P(1,2,3) anticanonical polytope") {
    auto X = test::builtin("P(1,2,3)");
    std::vector<DualVec> expected = {DualVec{R(-1), R(-1)}, DualVec{R(-1), R(1)}, DualVec{R(2), R(-1)}};
    CHECK(X->polytope().vertices() == expected);
    CHECK(X->polytope_volume() == 3);
    CHECK(X->degree() == 6);
    CHECK(X->barycenter() == DualVec{R(0), R(-1, 3)});
}

TEST_CASE("Fano gate rejects a complete fan whose support function is not strictly convex") {
    // Hirzebruch surface F_2: complete and smooth, -K nef but not ample.
    FanSpec f2{"F2", 2, {LatticeVec{1, 0}, LatticeVec{0, 1}, LatticeVec{-1, 2}, LatticeVec{0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    CHECK_NOTHROW(build_fan(f2));
    try {
        load_variety(f2);
        FAIL("F2 accepted as Fano");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invariant);
        CHECK(contains_text(e.what(), "not Q-Fano"));
    }
}

TEST_CASE("corpus degrees are positive and 2D degrees match the shoelace formula") {
    for (const auto& X : test::corpus()) {
        CAPTURE(X->name());
        CHECK(X->degree() > 0);
        CHECK(X->polytope().strictly_contains(DualVec(X->dim())));
        if (X->dim() == 2) {
            Rat area = test::shoelace(test::ccw_polygon(X->polytope().vertices()));
            CHECK(X->degree() == 2 * area);
        }
    }
    // Known anticanonical degrees.
    std::map<std::string, long> known = {{"P1", 2},    {"P2", 9},        {"P3", 64},       {"P4", 625},
                                         {"P5", 7776}, {"P1xP1", 8},     {"Bl1P2", 8},     {"Bl2P2", 7},
                                         {"Bl3P2", 6}, {"P(1,2,3)", 6},  {"P(1,1,2)", 8},  {"P1xP1xP1", 48},
                                         {"P1xP2", 54}};
    for (const auto& [name, degree] : known) {
        CAPTURE(name);
        CHECK(test::builtin(name)->degree() == degree);
    }
}

TEST_CASE("hull facets of the vertices reproduce the anticanonical halfspaces") {
    for (const auto& X : test::corpus()) {
        CAPTURE(X->name());
        auto facets = hull_facets(X->polytope().vertices(), X->dim());
        const auto& rays = X->fan().rays();
        REQUIRE(facets.size() == rays.size());
        for (const auto& r : rays) {
            Halfspace h{r, Rat(-1)};
            CHECK(std::find(facets.begin(), facets.end(), h) != facets.end());
        }
    }
}

TEST_CASE("volume does not depend on the triangulation base point") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coord(-6, 6);
    std::uniform_int_distribution<long> weight(1, 9);
    int tested = 0;
    while (tested < 50) {
        std::size_t n = 2 + tested % 2;
        std::vector<DualVec> pts;
        for (int i = 0; i < 7; ++i) {
            DualVec p(n);
            for (std::size_t j = 0; j < n; ++j) p[j] = coord(rng);
            pts.push_back(p);
        }
        if (affine_dimension(pts) != static_cast<int>(n)) continue;
        RationalPolytope P(n, hull_facets(pts, n));
        auto base_default = polytope_volume(P);

        DualVec base(n);
        Rat total = 0;
        for (const auto& v : P.vertices()) {
            Rat wgt = weight(rng);
            base = base + v * wgt;
            total += wgt;
        }
        base = base * (1 / total);
        auto base_random = polytope_volume(P, base);
        CHECK(base_default.volume == base_random.volume);
        CHECK_FALSE(base_default.lower_dimensional);
        if (n == 2) CHECK(base_default.volume == test::shoelace(test::ccw_polygon(P.vertices())));
        ++tested;
    }
}

TEST_CASE("lower-dimensional polytopes are flagged") {
    RationalPolytope flat(2, {{LatticeVec{0, 1}, R(0)}, {LatticeVec{0, -1}, R(0)}, {LatticeVec{1, 0}, R(0)}, {LatticeVec{-1, 0}, R(-1)}});
    auto v = polytope_volume(flat);
    CHECK(v.volume == 0);
    CHECK(v.lower_dimensional);
}

TEST_CASE("unbounded halfspace systems are rejected") {
    CHECK_THROWS_AS(RationalPolytope(2, {{LatticeVec{1, 0}, R(0)}, {LatticeVec{0, 1}, R(0)}}), Error);
}

TEST_CASE("lattice counts approach the volume at rate C/k") {
    for (const auto& X : test::corpus()) {
        if (X->dim() > 3) continue;
        CAPTURE(X->name());
        const Rat& vol = X->polytope_volume();
        auto err = [&](long k) -> Rat {
            Rat count(Int(count_lattice_points(X->polytope(), Int(k), {}, kDefaultOracleBudget)));
            return abs(count / pow_rat(Rat(k), static_cast<unsigned>(X->dim())) - vol);
        };
        Rat C = 0;
        for (long k = 1; k <= 10; ++k) C = std::max(C, Rat(k) * err(k));
        CHECK(C > 0);
        long last = X->dim() == 3 ? 20 : 30;
        for (long k = 11; k <= last; ++k) {
            CAPTURE(k);
            CHECK(err(k) <= C / k);
        }
    }
}

TEST_CASE("lattice counting respects the budget") {
    auto X = test::builtin("P2");
    CHECK(count_lattice_points(X->polytope(), Int(1), {}, 100) == 10);
    try {
        count_lattice_points(X->polytope(), Int(50), {}, 100);
        FAIL("budget not enforced");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::budget);
    }
}

TEST_CASE("cone location") {
    auto X = test::builtin("P2");
    auto loc = X->fan().locate(LatticeVec{-2, -1});
    const auto& gens = X->fan().cone_generators(loc.cone);
    Rat x = 0, y = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        CHECK(loc.coords[i] >= 0);
        x += loc.coords[i] * Rat(gens[i][0]);
        y += loc.coords[i] * Rat(gens[i][1]);
    }
    CHECK(x == -2);
    CHECK(y == -1);
    CHECK(X->fan().ray_index(LatticeVec{-1, -1}) == std::optional<std::size_t>(2));
    CHECK_FALSE(X->fan().ray_index(LatticeVec{1, 1}).has_value());
}
