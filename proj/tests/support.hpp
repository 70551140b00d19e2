#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "tks/corpus.hpp"
#include "tks/fanspec.hpp"

namespace tks::test {

inline VarietyPtr builtin(const std::string& name) {
    auto spec = builtin_fan(name);
    REQUIRE_MESSAGE(spec.has_value(), "missing built-in fan " << name);
    return load_variety(*spec);
}

inline std::vector<VarietyPtr> corpus() {
    std::vector<VarietyPtr> out;
    for (const auto& spec : builtin_corpus()) out.push_back(load_variety(spec));
    return out;
}

inline Rat R(long p, long q = 1) { return Rat(p, q); }

using Point2 = std::pair<Rat, Rat>;

// Shoelace area of a simple polygon listed in cyclic order.
inline Rat shoelace(const std::vector<Point2>& poly) {
    Rat twice = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& [x0, y0] = poly[i];
        const auto& [x1, y1] = poly[(i + 1) % poly.size()];
        twice += x0 * y1 - x1 * y0;
    }
    return abs(twice) / 2;
}

// Sutherland-Hodgman clip of a convex polygon to a*x + b*y >= c.
inline std::vector<Point2> clip(const std::vector<Point2>& poly, const Rat& a, const Rat& b, const Rat& c) {
    std::vector<Point2> out;
    auto value = [&](const Point2& p) -> Rat { return a * p.first + b * p.second - c; };
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        Rat vp = value(p), vq = value(q);
        if (vp >= 0) out.push_back(p);
        if ((vp > 0 && vq < 0) || (vp < 0 && vq > 0)) {
            Rat t = vp / (vp - vq);
            out.push_back({p.first + t * (q.first - p.first), p.second + t * (q.second - p.second)});
        }
    }
    return out;
}

// Vertices of a 2-dimensional polytope in counterclockwise order.
inline std::vector<Point2> ccw_polygon(const std::vector<DualVec>& vertices) {
    Rat cx = 0, cy = 0;
    for (const auto& v : vertices) {
        cx += v[0];
        cy += v[1];
    }
    cx /= Rat(static_cast<long>(vertices.size()));
    cy /= Rat(static_cast<long>(vertices.size()));
    std::vector<Point2> pts;
    for (const auto& v : vertices) pts.push_back({v[0], v[1]});
    auto half = [&](const Point2& p) { return p.second < cy || (p.second == cy && p.first < cx) ? 1 : 0; };
    std::sort(pts.begin(), pts.end(), [&](const Point2& p, const Point2& q) {
        int hp = half(p), hq = half(q);
        if (hp != hq) return hp < hq;
        return (p.first - cx) * (q.second - cy) - (p.second - cy) * (q.first - cx) > 0;
    });
    return pts;
}

}  // namespace tks::test
