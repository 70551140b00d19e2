#include "tks/workbench.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

namespace tks {

using nlohmann::ordered_json;

std::vector<LatticeVec> valuation_battery(std::size_t dim, int radius) {
    if (radius < 1) throw math_error("battery radius must be at least 1");
    std::vector<LatticeVec> out;
    std::vector<long> c(dim, -radius);
    while (true) {
        LatticeVec w(std::vector<Int>(c.begin(), c.end()));
        if (!w.is_zero() && w.content() == 1) out.push_back(std::move(w));
        std::size_t i = dim;
        while (i > 0 && c[i - 1] == radius) c[--i] = -radius;
        if (i == 0) break;
        ++c[i - 1];
    }
    return out;
}

std::string to_string(ScreenVerdict v) {
    switch (v) {
        case ScreenVerdict::no_witness: return "no witness";
        case ScreenVerdict::projective_space_recognized: return "projective space recognized";
        case ScreenVerdict::violation: return "violation: witness on a smooth fan that is not P^n";
        case ScreenVerdict::singular_counterexample: return "singular counterexample";
    }
    return "?";
}

ScreenResult screen_projective_space(const VarietyPtr& X, int radius) {
    ScreenResult out;
    out.radius = radius;
    out.smooth = X->smooth();
    out.projective_space = is_projective_space(X->fan());
    const Rat n(static_cast<long>(X->dim()));
    for (auto& w : valuation_battery(X->dim(), radius)) {
        ToricValuation v(X, w);
        Rat A = log_discrepancy(v);
        Rat t = tau(v);
        if ((n + 1) * A < n * t) continue;
        Rat b = beta(v);
        if (b > 0) continue;
        out.witnesses.push_back({std::move(w), std::move(A), std::move(t), std::move(b)});
    }
    if (out.witnesses.empty()) {
        out.verdict = ScreenVerdict::no_witness;
    } else if (!out.smooth) {
        out.verdict = ScreenVerdict::singular_counterexample;
    } else {
        out.verdict = out.projective_space ? ScreenVerdict::projective_space_recognized : ScreenVerdict::violation;
    }
    return out;
}

namespace {

std::vector<ValuationProfile> battery_profiles(const VarietyPtr& X, const std::vector<LatticeVec>& battery,
                                               bool parallel) {
    std::vector<ValuationProfile> out(battery.size());
    auto work = [&](std::size_t start, std::size_t stride) {
        for (std::size_t i = start; i < battery.size(); i += stride) out[i] = compute_profile(ToricValuation(X, battery[i]));
    };
    std::size_t workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    workers = std::min<std::size_t>(workers, std::max<std::size_t>(1, battery.size()));
    if (workers == 1) {
        work(0, 1);
        return out;
    }
    std::vector<std::future<void>> jobs;
    for (std::size_t t = 0; t < workers; ++t) jobs.push_back(std::async(std::launch::async, work, t, workers));
    for (auto& j : jobs) j.get();
    return out;
}

LatticeVec primitive_along(const DualVec& u) {
    Int l = 1;
    for (const Rat& c : u) l = boost::multiprecision::lcm(l, Int(boost::multiprecision::denominator(c)));
    std::vector<Int> coords;
    for (const Rat& c : u) coords.push_back(Int(boost::multiprecision::numerator(Rat(c * l))));
    return primitivize(LatticeVec(std::move(coords)));
}

ordered_json rat_json(const Rat& r) { return fraction_string(r); }

ordered_json vec_json(const LatticeVec& v) {
    ordered_json j = ordered_json::array();
    for (const Int& c : v) j.push_back(c.str());
    return j;
}

ordered_json dual_json(const DualVec& v) {
    ordered_json j = ordered_json::array();
    for (const Rat& c : v) j.push_back(fraction_string(c));
    return j;
}

ordered_json piecewise_json(const PiecewisePolynomial& p) {
    ordered_json j = ordered_json::array();
    for (std::size_t i = 0; i < p.pieces().size(); ++i) {
        ordered_json coeffs = ordered_json::array();
        for (const Rat& c : p.pieces()[i].coeffs()) coeffs.push_back(fraction_string(c));
        j.push_back({{"from", fraction_string(p.breakpoints()[i])},
                     {"to", fraction_string(p.breakpoints()[i + 1])},
                     {"coefficients", std::move(coeffs)},
                     {"text", p.pieces()[i].to_string()}});
    }
    return j;
}

ordered_json witness_json(const ScreenWitness& w) {
    return {{"w", vec_json(w.w)}, {"A", rat_json(w.A)}, {"tau", rat_json(w.tau)}, {"beta", rat_json(w.beta)}};
}

}  // namespace

StabilityReport analyze(const VarietyPtr& X, int radius, bool parallel) {
    StabilityReport r;
    r.name = X->name();
    r.n = X->dim();
    r.degree = X->degree();
    r.alpha = alpha(*X);
    r.barycenter = X->barycenter();
    r.smooth = X->smooth();
    r.radius = radius;

    auto battery = valuation_battery(r.n, radius);
    r.profiles = battery_profiles(X, battery, parallel);

    bool all_nonnegative = true;
    for (std::size_t i = 0; i < r.profiles.size(); ++i) {
        const auto& p = r.profiles[i];
        if (i == 0 || p.beta < r.min_beta) {
            r.min_beta = p.beta;
            r.min_beta_w = p.w;
        }
        all_nonnegative = all_nonnegative && p.beta >= 0;
    }
    bool barycenter_zero = r.barycenter.is_zero();
    bool min_nonnegative = r.min_beta >= 0;
    if (barycenter_zero != min_nonnegative || min_nonnegative != all_nonnegative) {
        throw invariant_error("verdict disagreement on " + r.name + ": barycenter zero = " +
                              (barycenter_zero ? "yes" : "no") + ", min beta = " + fraction_string(r.min_beta));
    }
    r.toric_divisorial_semistable = barycenter_zero;

    if (!barycenter_zero) {
        ToricValuation v(X, primitive_along(r.barycenter));
        r.destabilizing_direction = ScreenWitness{v.w(), log_discrepancy(v), tau(v), beta(v)};
    }

    r.strictly_stable_over_toric = false;
    {
        std::ostringstream os;
        os << "beta(-w) = -beta(w) for every toric w, so beta > 0 cannot hold on both w and -w; here w = "
           << r.min_beta_w << " has beta = " << fraction_string(r.min_beta);
        r.strict_stability_reason = os.str();
    }

    r.screen = screen_projective_space(X, radius);

    r.assumptions = {
        "toric valuations are dreamy: the Cox ring of a toric variety is a polynomial ring",
        "the alpha invariant is attained on torus-invariant divisors (alpha = 1/max_j tau(v_j))",
        "the semistability verdict is toric-divisorial: it tests torus-invariant divisorial valuations only",
    };
    r.exact_claims = {
        "beta(w) = -(degree) <barycenter, w> for every w in N, so the toric-divisorial verdict follows from the "
        "barycenter alone and holds for all w, not just the battery",
        "strict positivity fails on every toric variety because beta is antisymmetric",
    };
    r.search_claims = {
        "battery minimum of beta and its first witness (radius " + std::to_string(radius) + ")",
        "projective-space screen witnesses (radius " + std::to_string(radius) + ")",
    };
    return r;
}

ordered_json profile_to_json(const ValuationProfile& p) {
    ordered_json j;
    j["w"] = vec_json(p.w);
    j["primitive"] = p.primitive;
    j["A"] = rat_json(p.A);
    j["tau"] = rat_json(p.tau);
    j["eps"] = rat_json(p.eps);
    j["S"] = rat_json(p.S);
    j["beta"] = rat_json(p.beta);
    j["center_codim"] = p.center_codim;
    j["first_wall"] = rat_json(p.first_wall);
    j["vol"] = piecewise_json(p.vol_fn);
    j["Q"] = piecewise_json(p.Q);
    return j;
}

ordered_json screen_to_json(const ScreenResult& s) {
    ordered_json j;
    j["radius"] = s.radius;
    j["smooth"] = s.smooth;
    j["projective_space"] = s.projective_space;
    j["verdict"] = to_string(s.verdict);
    j["witnesses"] = ordered_json::array();
    for (const auto& w : s.witnesses) j["witnesses"].push_back(witness_json(w));
    return j;
}

ordered_json report_to_json(const StabilityReport& r) {
    ordered_json j;
    j["name"] = r.name;
    j["n"] = r.n;
    j["degree"] = rat_json(r.degree);
    j["alpha"] = {{"value", rat_json(r.alpha.alpha)},
                  {"witness_ray", r.alpha.witness_ray_index},
                  {"witness_m", dual_json(r.alpha.witness_m)},
                  {"witness_divisor", ordered_json::array()},
                  {"ray_thresholds", ordered_json::array()}};
    for (const Rat& d : r.alpha.witness_divisor) j["alpha"]["witness_divisor"].push_back(fraction_string(d));
    for (const Rat& t : r.alpha.ray_thresholds) j["alpha"]["ray_thresholds"].push_back(fraction_string(t));
    j["barycenter"] = dual_json(r.barycenter);
    j["smooth"] = r.smooth;
    j["radius"] = r.radius;

    ordered_json verdicts;
    verdicts["toric_divisorial_semistable"] = r.toric_divisorial_semistable;
    verdicts["min_beta"] = rat_json(r.min_beta);
    verdicts["min_beta_w"] = vec_json(r.min_beta_w);
    verdicts["destabilizing_direction"] =
        r.destabilizing_direction ? witness_json(*r.destabilizing_direction) : ordered_json(nullptr);
    verdicts["strictly_stable_over_toric"] = r.strictly_stable_over_toric;
    verdicts["strict_stability_reason"] = r.strict_stability_reason;
    verdicts["projective_space_screen"] = screen_to_json(r.screen);
    j["verdicts"] = std::move(verdicts);

    j["assumptions"] = r.assumptions;
    j["claims"] = {{"exact", r.exact_claims}, {"search", r.search_claims}};
    j["profiles"] = ordered_json::array();
    for (const auto& p : r.profiles) j["profiles"].push_back(profile_to_json(p));
    return j;
}

namespace {

std::string decimal(const Rat& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", to_double(r));
    return buf;
}

}  // namespace

std::string volume_csv(const ToricValuation& v, int samples) {
    if (samples < 2) throw math_error("samples must be at least 2");
    auto vol = volume_function(v);
    auto Q = restricted_volume(v);
    Rat t = vol.upper();
    std::ostringstream os;
    os << "x,vol,Q,exact\n";
    for (int i = 0; i < samples; ++i) {
        Rat x = t * Rat(i) / Rat(samples - 1);
        Rat a = vol(x), q = Q(x);
        os << decimal(x) << ',' << decimal(a) << ',' << decimal(q) << ',' << fraction_string(x) << ' '
           << fraction_string(a) << ' ' << fraction_string(q) << '\n';
    }
    return os.str();
}

void export_volume_csv(const ToricValuation& v, int samples, const std::filesystem::path& path) {
    std::string text = volume_csv(v, samples);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write " + path.string());
    out << text;
    if (!out.flush()) throw io_error("cannot write " + path.string());
}

}  // namespace tks
