#include "tks/valuation.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace tks {

ToricValuation::ToricValuation(VarietyPtr variety, LatticeVec w) : variety_(std::move(variety)), w_(std::move(w)) {
    if (!variety_) throw math_error("valuation without a variety");
    require_same_dim(w_.dim(), variety_->dim(), "ToricValuation");
    if (w_.is_zero()) throw math_error("valuation vector must be nonzero");
}

ToricValuation ToricValuation::primitive_direction() const { return {variety_, primitivize(w_)}; }

Rat log_discrepancy(const ToricValuation& v) {
    auto loc = v.variety().fan().locate(v.w());
    Rat A = 0;
    for (const Rat& a : loc.coords) A += a;
    return A;
}

int center_codim(const ToricValuation& v) {
    auto loc = v.variety().fan().locate(v.w());
    return static_cast<int>(std::count_if(loc.coords.begin(), loc.coords.end(), [](const Rat& a) { return a > 0; }));
}

namespace {

Rat tau_given(const ToricValuation& v, const Rat& A) { return A + max_linear_functional(v.variety().polytope(), v.w()); }

// n! vol(P cap {<u, w> >= x - A}).
Rat slab_volume(const ToricValuation& v, const Rat& A, const Rat& x) {
    const auto& X = v.variety();
    auto slab = X.polytope().clipped(Halfspace{v.w(), x - A});
    return polytope_volume(slab).volume * factorial(static_cast<unsigned>(X.dim()));
}

PiecewisePolynomial volume_function_given(const ToricValuation& v, const Rat& A, const Rat& tau) {
    const auto& X = v.variety();
    const std::size_t n = X.dim();

    std::vector<Rat> bps;
    for (const auto& vert : X.polytope().vertices()) bps.push_back(A + pairing(vert, v.w()));
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    if (bps.front() != 0 || bps.back() != tau) {
        throw math_error("volume function breakpoints do not span [0, tau]");
    }

    // Between consecutive vertex values the slab volume is a polynomial of
    // degree <= n, so n + 1 exact samples per interval determine it.
    std::map<Rat, Rat> cache{{Rat(0), X.degree()}, {tau, Rat(0)}};
    auto sample = [&](const Rat& x) -> const Rat& {
        auto it = cache.find(x);
        if (it == cache.end()) it = cache.emplace(x, slab_volume(v, A, x)).first;
        return it->second;
    };

    std::vector<Polynomial> pieces;
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        std::vector<Rat> xs, ys;
        const Rat step = (bps[i + 1] - bps[i]) / n;
        for (std::size_t k = 0; k <= n; ++k) {
            xs.push_back(bps[i] + step * k);
            ys.push_back(sample(xs.back()));
        }
        pieces.push_back(interpolate(xs, ys));
    }
    return {std::move(bps), std::move(pieces)};
}

struct WallConstraint {
    Rat c0;  // value at eps = 0
    Rat c1;  // slope in eps
};

// Rays and cones of the fan on which sigma^*(-K_X) - eps F lives, with the
// index of F's ray. For w on an existing ray this is the original fan.
struct ExtractionFan {
    std::vector<LatticeVec> rays;
    std::vector<std::vector<std::size_t>> cones;
    std::size_t special = 0;
    Rat special_coeff0;  // coefficient of D_special at eps = 0
};

ExtractionFan extraction_fan(const ToricValuation& prim) {
    const Fan& fan = prim.variety().fan();
    ExtractionFan ef;
    ef.rays = fan.rays();
    if (auto idx = fan.ray_index(prim.w())) {
        for (const auto& c : fan.cones()) ef.cones.push_back(c.rays);
        ef.special = *idx;
        ef.special_coeff0 = 1;
        return ef;
    }
    // Star subdivision: every maximal cone containing the minimal cone of w is
    // split by replacing one ray of that minimal cone with w.
    auto loc = fan.locate(prim.w());
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < loc.coords.size(); ++i) {
        if (loc.coords[i] > 0) support.push_back(fan.cones()[loc.cone].rays[i]);
    }
    ef.special = ef.rays.size();
    ef.rays.push_back(prim.w());
    ef.special_coeff0 = log_discrepancy(prim);
    for (const auto& c : fan.cones()) {
        bool contains_support = std::all_of(support.begin(), support.end(), [&](std::size_t r) {
            return std::find(c.rays.begin(), c.rays.end(), r) != c.rays.end();
        });
        if (!contains_support) {
            ef.cones.push_back(c.rays);
            continue;
        }
        for (std::size_t drop : support) {
            std::vector<std::size_t> nc;
            for (std::size_t r : c.rays) {
                if (r != drop) nc.push_back(r);
            }
            nc.push_back(ef.special);
            std::sort(nc.begin(), nc.end());
            ef.cones.push_back(std::move(nc));
        }
    }
    return ef;
}

// The divisor sum_rho a_rho(eps) D_rho with a = 1 on ordinary rays and
// a = special_coeff0 - eps on F is nef iff, across every wall, the linear form
// of one cone stays above the support function at the opposite ray.
std::vector<WallConstraint> wall_constraints(const ExtractionFan& ef) {
    const std::size_t n = ef.rays.front().dim();
    auto coeff0 = [&](std::size_t r) { return r == ef.special ? ef.special_coeff0 : Rat(1); };
    auto coeff1 = [&](std::size_t r) { return r == ef.special ? Rat(-1) : Rat(0); };

    // m_sigma(eps) = m0 + eps m1 with <m, v_r> = -a_r(eps) on the cone's rays.
    std::vector<std::pair<DualVec, DualVec>> forms;
    for (const auto& c : ef.cones) {
        RatMatrix A;
        std::vector<Rat> b0, b1;
        for (std::size_t r : c) {
            A.push_back(to_dual(ef.rays[r]).coords());
            b0.push_back(-coeff0(r));
            b1.push_back(-coeff1(r));
        }
        forms.emplace_back(DualVec(solve_linear(A, b0)), DualVec(solve_linear(A, b1)));
    }

    std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> walls;
    for (std::size_t ci = 0; ci < ef.cones.size(); ++ci) {
        const auto& c = ef.cones[ci];
        for (std::size_t drop = 0; drop < n; ++drop) {
            std::vector<std::size_t> wall;
            for (std::size_t i = 0; i < n; ++i) {
                if (i != drop) wall.push_back(c[i]);
            }
            walls[wall].emplace_back(ci, c[drop]);
        }
    }

    std::vector<WallConstraint> out;
    for (const auto& [wall, owners] : walls) {
        if (owners.size() != 2) throw math_error("extraction fan is not complete");
        for (int side = 0; side < 2; ++side) {
            const auto& [m0, m1] = forms[owners[side].first];
            std::size_t opposite = owners[1 - side].second;
            const LatticeVec& v = ef.rays[opposite];
            out.push_back({pairing(m0, v) + coeff0(opposite), pairing(m1, v) + coeff1(opposite)});
        }
    }
    return out;
}

}  // namespace

Rat tau(const ToricValuation& v) { return tau_given(v, log_discrepancy(v)); }

PiecewisePolynomial volume_function(const ToricValuation& v) {
    Rat A = log_discrepancy(v);
    return volume_function_given(v, A, tau_given(v, A));
}

std::uint64_t h0_count(const ToricValuation& v, const Int& k, const Int& j, std::uint64_t budget) {
    if (k <= 0) throw math_error("h0_count: k must be positive");
    if (j < 0) throw math_error("h0_count: j must be nonnegative");
    Rat A = log_discrepancy(v);
    // <u, w> + k A >= j, in the coordinates of kP.
    Halfspace order{v.w(), Rat(j) - A * k};
    return count_lattice_points(v.variety().polytope(), k, std::span<const Halfspace>(&order, 1), budget);
}

Rat s_integral(const ToricValuation& v) { return volume_function(v).integral(); }

Rat beta(const ToricValuation& v) { return log_discrepancy(v) * v.variety().degree() - s_integral(v); }

PiecewisePolynomial restricted_volume(const ToricValuation& v) {
    return volume_function(v).derivative() * Rat(-1, v.variety().dim());
}

Rat nef_threshold(const ToricValuation& v) {
    ToricValuation prim = v.primitive_direction();
    auto constraints = wall_constraints(extraction_fan(prim));
    std::optional<Rat> eps;
    for (const auto& c : constraints) {
        if (c.c0 < 0) throw math_error("pullback of -K_X fails to be nef");
        if (c.c1 >= 0) continue;
        Rat bound = c.c0 / -c.c1;
        if (!eps || bound < *eps) eps = bound;
    }
    if (!eps || *eps <= 0) throw math_error("nef threshold is not a positive rational");
    return *eps * v.multiplicity();
}

Rat beta_from_barycenter(const ToricValuation& v) {
    const auto& X = v.variety();
    return -X.degree() * pairing(X.barycenter(), v.w());
}

ValuationProfile compute_profile(const ToricValuation& v) {
    ValuationProfile p;
    p.w = v.w();
    p.primitive = v.primitive();
    p.A = log_discrepancy(v);
    p.tau = tau_given(v, p.A);
    p.vol_fn = volume_function_given(v, p.A, p.tau);
    p.Q = p.vol_fn.derivative() * Rat(-1, v.variety().dim());
    p.S = p.vol_fn.integral();
    p.beta = p.A * v.variety().degree() - p.S;
    p.eps = nef_threshold(v);
    p.center_codim = center_codim(v);
    auto merged = p.vol_fn.merged();
    p.first_wall = merged.breakpoints().size() > 2 ? merged.breakpoints()[1] : p.tau;
    return p;
}

std::string to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::pass: return "pass";
        case CertificateStatus::fail: return "fail";
        case CertificateStatus::hypothesis_not_met: return "hypothesis not met";
    }
    return "unknown";
}

namespace {

void record(CertificateResult& r, const std::string& label, bool ok, const std::string& detail) {
    r.checks.push_back(label + (ok ? ": ok" : ": FAILED (" + detail + ")"));
    if (!ok) r.status = CertificateStatus::fail;
}

std::string vs(const Rat& a, const Rat& b) { return short_string(a) + " vs " + short_string(b); }

}  // namespace

CertificateResult check_integral_equality_certificate(const ToricValuation& v) {
    CertificateResult r;
    r.reduced_to_primitive = !v.primitive();
    ToricValuation prim = v.primitive_direction();
    ValuationProfile p = compute_profile(prim);
    const auto n = static_cast<unsigned>(prim.variety().dim());
    const Rat& V = prim.variety().degree();
    const Rat bound = Rat(n, n + 1) * p.tau * V;

    r.quantities = {{"n", Rat(n)}, {"degree", V}, {"tau", p.tau}, {"eps", p.eps}, {"S", p.S},
                    {"lower_bound", bound}, {"center_codim", Rat(p.center_codim)}};
    if (!(bound <= p.S)) {
        r.status = CertificateStatus::hypothesis_not_met;
        r.checks.push_back("hypothesis (n/(n+1)) tau V <= S: not met (" + vs(bound, p.S) + ")");
        return r;
    }
    r.status = CertificateStatus::pass;
    record(r, "equality S = (n/(n+1)) tau V", p.S == bound, vs(p.S, bound));
    record(r, "tau = eps", p.tau == p.eps, vs(p.tau, p.eps));
    record(r, "center is a point", p.center_codim == static_cast<int>(n),
           "minimal cone dimension " + std::to_string(p.center_codim));
    // vol(x) = V - x^n V / tau^n on the whole of [0, tau].
    std::vector<Rat> expected(n + 1);
    expected[0] = V;
    expected[n] -= V / pow_rat(p.tau, n);
    Polynomial shape(std::move(expected));
    bool shape_ok = std::all_of(p.vol_fn.pieces().begin(), p.vol_fn.pieces().end(),
                                [&](const Polynomial& piece) { return piece == shape; });
    record(r, "vol(x) = V - x^n V / tau^n", shape_ok, "expected " + shape.to_string());
    return r;
}

CertificateResult check_discrepancy_certificate(const ToricValuation& v) {
    CertificateResult r;
    r.reduced_to_primitive = !v.primitive();
    ToricValuation prim = v.primitive_direction();
    ValuationProfile p = compute_profile(prim);
    const auto n = static_cast<unsigned>(prim.variety().dim());
    const Rat ratio = Rat(n, n + 1) * p.tau;

    r.quantities = {{"n", Rat(n)}, {"A", p.A}, {"tau", p.tau}, {"eps", p.eps},
                    {"beta", p.beta}, {"center_codim", Rat(p.center_codim)}};
    if (!(p.A >= ratio) || !(p.beta <= 0)) {
        r.status = CertificateStatus::hypothesis_not_met;
        std::ostringstream os;
        os << "hypotheses A >= (n/(n+1)) tau [" << vs(p.A, ratio) << "] and beta <= 0 [beta = "
           << short_string(p.beta) << "]: not met";
        r.checks.push_back(os.str());
        return r;
    }
    r.status = CertificateStatus::pass;
    record(r, "A = n", p.A == n, vs(p.A, Rat(n)));
    record(r, "tau = n + 1", p.tau == n + 1, vs(p.tau, Rat(n + 1)));
    record(r, "eps = n + 1", p.eps == n + 1, vs(p.eps, Rat(n + 1)));
    record(r, "center is a point", p.center_codim == static_cast<int>(n),
           "minimal cone dimension " + std::to_string(p.center_codim));
    return r;
}

}  // namespace tks
