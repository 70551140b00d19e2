#include "tks/verify.hpp"

#include <chrono>
#include <map>
#include <ostream>
#include <sstream>

#include "tks/concavity.hpp"
#include "tks/corpus.hpp"
#include "tks/workbench.hpp"

namespace tks {

namespace {

using Clock = std::chrono::steady_clock;

struct Recorder {
    CriterionResult& r;

    template <class T>
    void expect_eq(const std::string& what, const T& expected, const T& computed) {
        if (expected == computed) return;
        std::ostringstream os;
        os << what << ": expected " << render(expected) << ", computed " << render(computed);
        r.diffs.push_back(os.str());
    }

    void expect(const std::string& what, bool ok) {
        if (!ok) r.diffs.push_back(what);
    }

    static std::string render(const Rat& x) { return short_string(x); }
    static std::string render(const std::string& s) { return s; }
    static std::string render(bool b) { return b ? "true" : "false"; }
    static std::string render(const std::vector<Rat>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + short_string(v[i]);
        return s + "]";
    }
    static std::string render(const LatticeVec& v) {
        std::ostringstream os;
        os << v;
        return os.str();
    }
};

void within(Recorder& rec, Clock::time_point start, double limit_seconds) {
    double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed >= limit_seconds) {
        std::ostringstream os;
        os << "time limit " << limit_seconds << " s exceeded (" << elapsed << " s)";
        rec.r.diffs.push_back(os.str());
    }
}

VarietyPtr builtin(const std::string& name) {
    auto spec = builtin_fan(name);
    if (!spec) throw invariant_error("missing built-in fan " + name);
    return load_variety(*spec);
}

LatticeVec all_ones(std::size_t n) { return LatticeVec(std::vector<Int>(n, Int(1))); }

void criterion_example(Recorder& rec, const SuiteExpectations& exp) {
    auto start = Clock::now();
    auto X = builtin("P(1,2,3)");
    ToricValuation v(X, LatticeVec{-1, 0});
    auto p = compute_profile(v);
    rec.expect_eq("A", exp.A, p.A);
    rec.expect_eq("tau", exp.tau, p.tau);
    rec.expect_eq("eps", exp.eps, p.eps);
    auto vol = p.vol_fn.merged();
    rec.expect_eq("vol breakpoints", exp.vol_breakpoints, vol.breakpoints());
    rec.expect_eq("vol pieces", std::string("1"), std::to_string(vol.pieces().size()));
    if (!vol.pieces().empty()) rec.expect_eq("vol coefficients", exp.vol_coeffs, vol.pieces().front().coeffs());
    rec.expect_eq("S", exp.S, p.S);
    rec.expect_eq("beta", exp.beta, p.beta);
    rec.expect_eq("degree", exp.degree, X->degree());
    rec.expect_eq("alpha", exp.alpha, alpha(*X).alpha);
    within(rec, start, 1.0);
}

void criterion_projective_spaces(Recorder& rec) {
    auto start = Clock::now();
    for (std::size_t n = 2; n <= 5; ++n) {
        auto X = load_variety(projective_space_spec(n));
        const std::string tag = "P" + std::to_string(n) + " ";
        auto w = all_ones(n);
        auto p = compute_profile(ToricValuation(X, w));
        Rat nn(static_cast<long>(n));
        rec.expect_eq(tag + "A", nn, p.A);
        rec.expect_eq(tag + "tau", Rat(nn + 1), p.tau);
        rec.expect_eq(tag + "eps", Rat(nn + 1), p.eps);
        rec.expect_eq(tag + "beta", Rat(0), p.beta);
        auto s = screen_projective_space(X, 1);
        rec.expect_eq(tag + "screen verdict", to_string(ScreenVerdict::projective_space_recognized),
                      to_string(s.verdict));
        bool found = false;
        for (const auto& wit : s.witnesses) found = found || wit.w == w;
        rec.expect(tag + "screen misses w = (1,...,1)", found);
    }
    within(rec, start, 10.0);
}

void criterion_screen(Recorder& rec) {
    auto start = Clock::now();
    for (const auto& name : smooth_toric_del_pezzo_names()) {
        auto s = screen_projective_space(builtin(name), kDefaultBatteryRadius);
        auto expected = name == "P2" ? ScreenVerdict::projective_space_recognized : ScreenVerdict::no_witness;
        rec.expect_eq(name + " screen verdict", to_string(expected), to_string(s.verdict));
    }
    auto s = screen_projective_space(builtin("P(1,2,3)"), kDefaultBatteryRadius);
    rec.expect_eq("P(1,2,3) screen verdict", to_string(ScreenVerdict::singular_counterexample), to_string(s.verdict));
    bool found = false;
    for (const auto& wit : s.witnesses) {
        if (wit.w == LatticeVec{-1, 0}) {
            found = true;
            rec.expect_eq("P(1,2,3) witness A", Rat(2), wit.A);
            rec.expect_eq("P(1,2,3) witness beta", Rat(0), wit.beta);
        }
    }
    rec.expect("P(1,2,3) screen misses w = (-1,0)", found);
    within(rec, start, 60.0);
}

void criterion_barycenter(Recorder& rec) {
    for (const auto& name : crosscheck_corpus_names()) {
        auto X = builtin(name);
        std::map<LatticeVec, Rat> betas;
        for (const auto& w : valuation_battery(X->dim(), 3)) {
            ToricValuation v(X, w);
            Rat b = beta(v);
            std::ostringstream tag;
            tag << name << " w=" << w;
            rec.expect_eq(tag.str() + " beta vs barycenter", beta_from_barycenter(v), b);
            rec.expect_eq(tag.str() + " beta(2w)", Rat(2 * b), beta(ToricValuation(X, w.scaled(2))));
            betas.emplace(w, b);
        }
        for (const auto& [w, b] : betas) {
            auto it = betas.find(-w);
            std::ostringstream tag;
            tag << name << " w=" << w;
            rec.expect(tag.str() + " has no opposite in the battery", it != betas.end());
            if (it != betas.end()) rec.expect_eq(tag.str() + " beta(-w)", Rat(-b), it->second);
        }
    }
}

void criterion_lattice_count(Recorder& rec) {
    auto X = builtin("P(1,2,3)");
    ToricValuation v(X, LatticeVec{-1, 0});
    auto vol = volume_function(v);
    const Rat tolerance(7, 100);
    for (const Rat& x : {Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)}) {
        Rat previous = -1;
        for (int k : {10, 20, 30}) {
            Int j = ceil_rat(Rat(k) * x);
            auto count = h0_count(v, Int(k), j);
            Rat normalized = Rat(Int(count)) / (Rat(k * k) / 2);
            Rat err = abs(normalized - vol(x)) / vol(x);
            std::string tag = "x=" + short_string(x) + " k=" + std::to_string(k);
            if (previous >= 0) rec.expect(tag + " error increased: " + short_string(err), err <= previous);
            if (k == 30) rec.expect(tag + " relative error " + short_string(err) + " above 7/100", err <= tolerance);
            previous = err;
        }
    }
}

void criterion_concavity(Recorder& rec, int& triples) {
    auto check = [&](const std::string& tag, const ValuationProfile& p, std::size_t n) {
        auto report = check_root_concavity(p.Q, static_cast<unsigned>(n));
        triples += report.triples;
        for (const auto& d : report.details) rec.r.diffs.push_back(tag + ": " + d);
        rec.expect(tag + ": " + std::to_string(report.violations) + " violations", report.violations == 0);
    };
    for (const auto& name : crosscheck_corpus_names()) {
        auto X = builtin(name);
        for (const auto& w : valuation_battery(X->dim(), 2)) {
            std::ostringstream tag;
            tag << name << " w=" << w;
            check(tag.str(), compute_profile(ToricValuation(X, w)), X->dim());
        }
    }
    for (std::size_t n = 2; n <= 5; ++n) {
        auto X = load_variety(projective_space_spec(n));
        check("P" + std::to_string(n) + " w=(1,...,1)", compute_profile(ToricValuation(X, all_ones(n))), n);
    }
}

void criterion_alpha(Recorder& rec, const SuiteExpectations& exp) {
    rec.expect_eq("alpha(P1)", exp.alpha_p1, alpha(*builtin("P1")).alpha);
    rec.expect_eq("alpha(P(1,2,3))", exp.alpha, alpha(*builtin("P(1,2,3)")).alpha);
    for (const auto& spec : builtin_corpus()) {
        auto X = load_variety(spec);
        auto a = alpha(*X);
        const auto& rays = X->fan().rays();
        Rat max_tau = 0;
        for (std::size_t j = 0; j < rays.size(); ++j) {
            Rat t = tau(ToricValuation(X, rays[j]));
            rec.expect_eq(spec.name + " ray " + std::to_string(j) + " threshold", t, a.ray_thresholds[j]);
            if (t > max_tau) max_tau = t;
        }
        rec.expect_eq(spec.name + " alpha vs 1/max tau", Rat(1 / max_tau), a.alpha);
        rec.expect(spec.name + " witness m outside P", X->polytope().contains(a.witness_m));
        Rat extremal = 0;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            const Rat& d = a.witness_divisor[i];
            rec.expect(spec.name + " witness coefficient " + std::to_string(i) + " negative", d >= 0);
            // D - (-K_X) = div(chi^m) forces d_i = 1 + <m, v_i>.
            rec.expect_eq(spec.name + " witness coefficient " + std::to_string(i), Rat(1 + pairing(a.witness_m, rays[i])),
                          d);
            if (d > extremal) extremal = d;
        }
        rec.expect_eq(spec.name + " extremal coefficient", Rat(1 / a.alpha), extremal);
        rec.expect_eq(spec.name + " extremal ray coefficient", Rat(1 / a.alpha), a.witness_divisor[a.witness_ray_index]);
    }
}

const std::map<int, std::string>& titles() {
    static const std::map<int, std::string> t = {
        {1, "P(1,2,3), w=(-1,0): exact A, tau, eps, vol, S, beta, degree, alpha"},
        {2, "P^n, n=2..5, w=(1,...,1): A=n, tau=eps=n+1, beta=0; screen recognizes P^n"},
        {3, "projective-space screen: smooth del Pezzo witnesses only on P2; P(1,2,3) singular counterexample"},
        {4, "barycenter identity, beta(-w)=-beta(w), beta(2w)=2beta(w) on 10 fans at radius 3"},
        {5, "lattice-count limit on P(1,2,3): error <= 7% at k=30, non-increasing over k=10,20,30"},
        {6, "midpoint concavity of Q^(1/(n-1)), 100 triples per profile"},
        {7, "alpha(P1)=1/2, alpha(P(1,2,3))=1/6, alpha=1/max tau(v_j), witness validity"},
        {8, "scope: non-toric Fano manifolds are outside this artifact; covered by criteria 4 and 6 only"},
    };
    return t;
}

}  // namespace

void apply_expectation_override(SuiteExpectations& exp, const std::string& assignment) {
    auto eq = assignment.find('=');
    if (eq == std::string::npos) throw parse_error("expected KEY=VALUE, got '" + assignment + "'");
    std::string key = assignment.substr(0, eq);
    Rat value = parse_rat(assignment.substr(eq + 1));
    std::map<std::string, Rat*> fields = {{"A", &exp.A},         {"tau", &exp.tau},     {"eps", &exp.eps},
                                          {"S", &exp.S},         {"beta", &exp.beta},   {"degree", &exp.degree},
                                          {"alpha", &exp.alpha}, {"alpha_p1", &exp.alpha_p1}};
    auto it = fields.find(key);
    if (it == fields.end()) throw parse_error("unknown expectation '" + key + "'");
    *it->second = value;
}

std::vector<CriterionResult> run_acceptance_suite(const SuiteExpectations& exp, const std::set<int>& only) {
    std::vector<CriterionResult> results;
    std::map<int, bool> passed;
    for (const auto& [id, title] : titles()) {
        if (!only.empty() && !only.count(id)) continue;
        CriterionResult r{id, title, false, {}};
        Recorder rec{r};
        try {
            switch (id) {
                case 1: criterion_example(rec, exp); break;
                case 2: criterion_projective_spaces(rec); break;
                case 3: criterion_screen(rec); break;
                case 4: criterion_barycenter(rec); break;
                case 5: criterion_lattice_count(rec); break;
                case 6: {
                    int triples = 0;
                    criterion_concavity(rec, triples);
                    rec.expect("no triples were tested", triples > 0);
                    break;
                }
                case 7: criterion_alpha(rec, exp); break;
                case 8: {
                    // The statement stands only if the property suites that
                    // substitute for the full-scale claim are green.
                    for (int dep : {4, 6}) {
                        if (!passed.count(dep)) {
                            auto sub = run_acceptance_suite(exp, {dep});
                            passed[dep] = sub.front().passed;
                        }
                        rec.expect("criterion " + std::to_string(dep) + " failed", passed[dep]);
                    }
                    break;
                }
            }
        } catch (const std::exception& e) {
            r.diffs.push_back(std::string("error: ") + e.what());
        }
        r.passed = r.diffs.empty();
        passed[id] = r.passed;
        results.push_back(std::move(r));
    }
    return results;
}

int run_builtin_suite(std::ostream& out, const SuiteExpectations& exp, const std::set<int>& only) {
    int failed = 0;
    for (const auto& r : run_acceptance_suite(exp, only)) {
        out << (r.passed ? "PASS" : "FAIL") << " C" << r.id << ": " << r.title << '\n';
        for (const auto& d : r.diffs) out << "    " << d << '\n';
        if (!r.passed) ++failed;
    }
    out << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}

}  // namespace tks
