#include "tks/corpus.hpp"

#include <algorithm>

namespace tks {

namespace {

// Product of two complete fans: rays are the two ray sets padded with zeros,
// maximal cones are all pairs of maximal cones.
FanSpec product_spec(std::string name, const FanSpec& a, const FanSpec& b) {
    FanSpec out;
    out.name = std::move(name);
    out.dim = a.dim + b.dim;
    for (const auto& r : a.rays) {
        std::vector<Int> c(r.begin(), r.end());
        c.resize(out.dim, Int(0));
        out.rays.emplace_back(std::move(c));
    }
    for (const auto& r : b.rays) {
        std::vector<Int> c(a.dim, Int(0));
        c.insert(c.end(), r.begin(), r.end());
        out.rays.emplace_back(std::move(c));
    }
    for (const auto& ca : a.cones) {
        for (const auto& cb : b.cones) {
            std::vector<std::size_t> cone = ca;
            for (std::size_t i : cb) cone.push_back(a.rays.size() + i);
            out.cones.push_back(std::move(cone));
        }
    }
    return out;
}

}  // namespace

FanSpec projective_space_spec(std::size_t n) {
    FanSpec spec;
    spec.name = "P" + std::to_string(n);
    spec.dim = n;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> e(n, Int(0));
        e[i] = 1;
        spec.rays.emplace_back(std::move(e));
    }
    spec.rays.emplace_back(std::vector<Int>(n, Int(-1)));
    // Every n-subset of the n+1 rays spans a maximal cone.
    for (std::size_t skip = n + 1; skip-- > 0;) {
        std::vector<std::size_t> cone;
        for (std::size_t i = 0; i <= n; ++i) {
            if (i != skip) cone.push_back(i);
        }
        spec.cones.push_back(std::move(cone));
    }
    return spec;
}

FanSpec polygon_fan_spec(std::string name, const std::vector<LatticeVec>& rays) {
    FanSpec spec;
    spec.name = std::move(name);
    spec.dim = 2;
    spec.rays = rays;
    for (std::size_t i = 0; i < rays.size(); ++i) spec.cones.push_back({i, (i + 1) % rays.size()});
    return spec;
}

std::vector<FanSpec> builtin_corpus() {
    std::vector<FanSpec> out;
    for (std::size_t n = 1; n <= 5; ++n) out.push_back(projective_space_spec(n));
    auto p1 = projective_space_spec(1);
    out.push_back(product_spec("P1xP1", p1, p1));
    using V = LatticeVec;
    out.push_back(polygon_fan_spec("Bl1P2", {V{1, 0}, V{1, 1}, V{0, 1}, V{-1, -1}}));
    out.push_back(polygon_fan_spec("Bl2P2", {V{1, 0}, V{1, 1}, V{0, 1}, V{-1, 0}, V{-1, -1}}));
    out.push_back(polygon_fan_spec("Bl3P2", {V{1, 0}, V{1, 1}, V{0, 1}, V{-1, 0}, V{-1, -1}, V{0, -1}}));
    out.push_back(polygon_fan_spec("P(1,2,3)", {V{1, 0}, V{0, 1}, V{-2, -3}}));
    out.push_back(polygon_fan_spec("Y", {V{1, 0}, V{0, 1}, V{-1, 0}, V{-2, -3}}));
    out.push_back(polygon_fan_spec("P(1,1,2)", {V{1, 0}, V{0, 1}, V{-1, -2}}));
    out.push_back(product_spec("P1xP1xP1", out[5], p1));
    out.push_back(product_spec("P1xP2", p1, projective_space_spec(2)));
    return out;
}

std::optional<FanSpec> builtin_fan(std::string_view name) {
    auto corpus = builtin_corpus();
    auto it = std::find_if(corpus.begin(), corpus.end(), [&](const FanSpec& s) { return s.name == name; });
    if (it == corpus.end()) return std::nullopt;
    return *it;
}

std::vector<std::string> smooth_toric_del_pezzo_names() { return {"P2", "P1xP1", "Bl1P2", "Bl2P2", "Bl3P2"}; }

std::vector<std::string> crosscheck_corpus_names() {
    return {"P1", "P2", "P1xP1", "Bl1P2", "Bl2P2", "Bl3P2", "P(1,2,3)", "Y", "P(1,1,2)", "P3"};
}

}  // namespace tks
