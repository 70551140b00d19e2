#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "support.hpp"
#include "tks/verify.hpp"
#include "tks/workbench.hpp"

using namespace tks;
using tks::test::R;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::math;
}

std::set<LatticeVec> witness_set(const ScreenResult& s) {
    std::set<LatticeVec> out;
    for (const auto& w : s.witnesses) out.insert(w.w);
    return out;
}

}  // namespace

TEST_CASE("battery sizes and contents") {
    CHECK(valuation_battery(2, 1).size() == 8);
    CHECK(valuation_battery(2, 2).size() == 16);
    CHECK(valuation_battery(3, 1).size() == 26);
    auto b = valuation_battery(2, 2);
    CHECK(std::is_sorted(b.begin(), b.end()));
    for (const auto& w : b) CHECK(w.content() == 1);
    for (const auto& X : test::corpus()) {
        if (X->dim() > 3) continue;
        auto battery = valuation_battery(X->dim(), 2);
        for (const auto& r : X->fan().rays()) {
            bool within = std::all_of(r.begin(), r.end(), [](const Int& c) { return abs(c) <= 2; });
            CHECK(within == (std::find(battery.begin(), battery.end(), r) != battery.end()));
        }
    }
    CHECK_THROWS_AS(valuation_battery(2, 0), Error);
}

TEST_CASE("FanSpec parsing") {
    std::vector<std::string> warnings;
    auto spec = parse_fanspec(R"({"name":"P2","dim":2,"rays":[[1,0],[0,1],[-1,-1]],"cones":[[0,1],[1,2],[2,0]],
                                  "metadata":{"source":"test"},"colour":"blue"})",
                              &warnings);
    CHECK(spec.name == "P2");
    CHECK(spec.rays.size() == 3);
    CHECK(spec.metadata["source"] == "test");
    REQUIRE(warnings.size() == 1);
    CHECK(warnings.front().find("colour") != std::string::npos);
    CHECK(load_variety(spec)->degree() == 9);

    auto big = parse_fanspec(R"({"name":"big","dim":1,"rays":[["1"],["-1"]],"cones":[[0],[1]]})");
    CHECK(big.rays[1] == LatticeVec{-1});

    CHECK(kind_of([] { parse_fanspec("{not json"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_fanspec(R"({"name":"x","dim":2,"rays":[[1,0.5]],"cones":[]})"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_fanspec(R"({"name":"x","dim":2,"rays":[]})"); }) == ErrorKind::parse);
    CHECK(kind_of([] { read_fanspec_file("/nonexistent/fan.json"); }) == ErrorKind::io);
    CHECK(kind_of([] { resolve_fanspec("builtin:nope"); }) == ErrorKind::parse);

    auto gap = parse_fanspec(R"({"name":"gap","dim":2,"rays":[[1,0],[0,1],[-1,-1]],"cones":[[0,1],[1,2]]})");
    CHECK(kind_of([&] { build_fan(gap); }) == ErrorKind::invariant);
}

TEST_CASE("FanSpec round trip through JSON") {
    for (const auto& spec : builtin_corpus()) {
        auto again = parse_fanspec(fanspec_to_json(spec).dump());
        CHECK(again.name == spec.name);
        CHECK(again.rays == spec.rays);
        CHECK(again.cones == spec.cones);
    }
}

TEST_CASE("analyze P(1,2,3)") {
    auto r = analyze(test::builtin("P(1,2,3)"), 4);
    CHECK(r.degree == 6);
    CHECK(r.alpha.alpha == R(1, 6));
    CHECK(r.barycenter == DualVec{R(0), R(-1, 3)});
    CHECK_FALSE(r.toric_divisorial_semistable);
    REQUIRE(r.destabilizing_direction.has_value());
    CHECK(r.destabilizing_direction->w == LatticeVec{0, -1});
    CHECK(r.destabilizing_direction->beta == -2);
    CHECK(r.min_beta < 0);
    CHECK_FALSE(r.strictly_stable_over_toric);
    CHECK(r.screen.verdict == ScreenVerdict::singular_counterexample);
    CHECK(r.profiles.size() == valuation_battery(2, 4).size());
}

TEST_CASE("projective spaces and P1xP1 are semistable but not strictly stable") {
    for (const std::string name : {"P1", "P2", "P3", "P1xP1"}) {
        CAPTURE(name);
        auto r = analyze(test::builtin(name), name == "P3" ? 2 : 4);
        CHECK(r.toric_divisorial_semistable);
        CHECK(r.min_beta == 0);
        CHECK_FALSE(r.destabilizing_direction.has_value());
        CHECK_FALSE(r.strictly_stable_over_toric);
        CHECK(r.strict_stability_reason.find("beta(-w) = -beta(w)") != std::string::npos);
        for (const auto& p : r.profiles) CHECK(p.beta == 0);
    }
}

TEST_CASE("three-way verdict agreement over the corpus") {
    for (const auto& X : test::corpus()) {
        // Radius 4 in dimensions up to 3; the 4- and 5-dimensional spaces at
        // radius 1 keep the battery small.
        int radius = X->dim() <= 3 ? 4 : 1;
        CAPTURE(X->name());
        auto r = analyze(X, radius);
        bool all_nonnegative = std::all_of(r.profiles.begin(), r.profiles.end(), [](const auto& p) { return p.beta >= 0; });
        CHECK(r.toric_divisorial_semistable == r.barycenter.is_zero());
        CHECK(r.toric_divisorial_semistable == (r.min_beta >= 0));
        CHECK(r.toric_divisorial_semistable == all_nonnegative);
    }
}

TEST_CASE("reports are deterministic and independent of scheduling") {
    auto X = test::builtin("Bl2P2");
    auto a = report_to_json(analyze(X, 3, true)).dump();
    auto b = report_to_json(analyze(X, 3, false)).dump();
    auto c = report_to_json(analyze(test::builtin("Bl2P2"), 3, true)).dump();
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a.find("\"beta\":\"") != std::string::npos);
}

TEST_CASE("projective-space screen") {
    for (std::size_t n = 2; n <= 4; ++n) {
        auto s = screen_projective_space(load_variety(projective_space_spec(n)), 1);
        CHECK(s.verdict == ScreenVerdict::projective_space_recognized);
        CHECK(witness_set(s).count(LatticeVec(std::vector<Int>(n, Int(1)))) == 1);
    }
    for (const auto& name : smooth_toric_del_pezzo_names()) {
        CAPTURE(name);
        auto X = test::builtin(name);
        auto s = screen_projective_space(X, 4);
        CHECK(s.verdict == (name == "P2" ? ScreenVerdict::projective_space_recognized : ScreenVerdict::no_witness));
        for (const auto& w : s.witnesses) {
            CHECK(3 * w.A >= 2 * w.tau);
            CHECK(w.beta <= 0);
        }
    }
    auto s = screen_projective_space(test::builtin("P(1,2,3)"), 2);
    CHECK(s.verdict == ScreenVerdict::singular_counterexample);
    CHECK(to_string(s.verdict) == "singular counterexample");
    CHECK(witness_set(s).count(LatticeVec{-1, 0}) == 1);
}

TEST_CASE("screen witnesses grow with the radius") {
    for (const std::string name : {"P2", "P(1,2,3)", "P(1,1,2)", "Y", "P1xP1"}) {
        auto X = test::builtin(name);
        for (int r = 1; r < 4; ++r) {
            auto small = witness_set(screen_projective_space(X, r));
            auto large = witness_set(screen_projective_space(X, r + 1));
            CAPTURE(name);
            CAPTURE(r);
            CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
        }
    }
}

TEST_CASE("volume CSV") {
    ToricValuation v(test::builtin("P(1,2,3)"), LatticeVec{-1, 0});
    CHECK(volume_csv(v, 4) ==
          "x,vol,Q,exact\n"
          "0,6,0,0/1 6/1 0/1\n"
          "1,5.33333333333,0.666666666667,1/1 16/3 2/3\n"
          "2,3.33333333333,1.33333333333,2/1 10/3 4/3\n"
          "3,0,2,3/1 0/1 2/1\n");
    CHECK(volume_csv(v, 2) == "x,vol,Q,exact\n0,6,0,0/1 6/1 0/1\n3,0,2,3/1 0/1 2/1\n");
    CHECK_THROWS_AS(volume_csv(v, 1), Error);

    auto path = std::filesystem::temp_directory_path() / "tks_volume_test.csv";
    export_volume_csv(v, 4, path);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "x,vol,Q,exact");
    std::filesystem::remove(path);
    CHECK(kind_of([&] { export_volume_csv(v, 4, "/nonexistent/dir/out.csv"); }) == ErrorKind::io);
}

TEST_CASE("acceptance harness reports perturbed expectations") {
    SuiteExpectations exp;
    apply_expectation_override(exp, "beta=1");
    std::ostringstream out;
    CHECK(run_builtin_suite(out, exp, {1}) == 1);
    CHECK(out.str().find("beta: expected 1, computed 0") != std::string::npos);

    std::ostringstream clean;
    CHECK(run_builtin_suite(clean, {}, {1, 7}) == 0);
    CHECK_THROWS_AS(apply_expectation_override(exp, "gamma=1"), Error);
}
