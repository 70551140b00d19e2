#include "tks/alpha.hpp"

namespace tks {

AlphaResult alpha(const ToricVariety& X) {
    const auto& rays = X.fan().rays();
    const auto& verts = X.polytope().vertices();
    AlphaResult res;
    Rat best = 0;
    std::size_t best_vertex = 0;
    for (std::size_t j = 0; j < rays.size(); ++j) {
        std::size_t arg = 0;
        Rat mx = pairing(verts[0], rays[j]);
        for (std::size_t i = 1; i < verts.size(); ++i) {
            Rat val = pairing(verts[i], rays[j]);
            if (val > mx) {
                mx = val;
                arg = i;
            }
        }
        Rat threshold = 1 + mx;
        res.ray_thresholds.push_back(threshold);
        if (threshold > best) {
            best = threshold;
            res.witness_ray_index = j;
            best_vertex = arg;
        }
    }
    res.alpha = 1 / best;
    res.witness_m = verts[best_vertex];
    for (const auto& r : rays) res.witness_divisor.push_back(1 + pairing(res.witness_m, r));
    return res;
}

bool is_lc_torus_pair(const Fan& fan, std::span<const Rat> coeffs) {
    if (coeffs.size() != fan.rays().size()) throw math_error("one coefficient per ray expected");
    bool lc = true;
    for (const Rat& d : coeffs) {
        if (d < 0) throw math_error("not effective");
        if (d > 1) lc = false;
    }
    return lc;
}

std::string to_string(MainTheoremGate g) {
    switch (g) {
        case MainTheoremGate::hypothesis_met: return "hypothesis met";
        case MainTheoremGate::hypothesis_not_met: return "hypothesis not met";
        case MainTheoremGate::inapplicable_singular: return "theorem inapplicable (singular)";
    }
    return "unknown";
}

GateResult alpha_gate_main_theorem(const ToricVariety& X) {
    const auto n = static_cast<unsigned>(X.dim());
    GateResult g{MainTheoremGate::hypothesis_not_met, alpha(X).alpha, Rat(n, n + 1)};
    if (!X.smooth()) {
        g.verdict = MainTheoremGate::inapplicable_singular;
    } else if (g.alpha >= g.threshold) {
        g.verdict = MainTheoremGate::hypothesis_met;
    }
    return g;
}

}  // namespace tks
