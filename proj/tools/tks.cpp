// tks: command-line front end for the toric stability workbench.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tks/corpus.hpp"
#include "tks/fanspec.hpp"
#include "tks/verify.hpp"
#include "tks/workbench.hpp"

namespace {

using namespace tks;

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse:
        case ErrorKind::io: return 2;
        case ErrorKind::invariant:
        case ErrorKind::math: return 3;
        case ErrorKind::budget: return 4;
    }
    return 3;
}

VarietyPtr load(const std::string& ref) {
    std::vector<std::string> warnings;
    auto spec = resolve_fanspec(ref, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    return load_variety(spec);
}

LatticeVec parse_w(const std::string& text, std::size_t dim) {
    std::vector<Int> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Rat r = parse_rat(item);
        if (denominator(r) != 1) throw parse_error("w coordinate '" + item + "' is not an integer");
        coords.push_back(numerator(r));
    }
    if (coords.size() != dim) {
        throw parse_error("w has " + std::to_string(coords.size()) + " coordinates, fan has dimension " +
                          std::to_string(dim));
    }
    return LatticeVec(std::move(coords));
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) throw io_error("cannot write " + path);
}

void print_profile(const ValuationProfile& p) {
    std::cout << "w            " << p.w << '\n'
              << "A            " << short_string(p.A) << '\n'
              << "tau          " << short_string(p.tau) << '\n'
              << "eps          " << short_string(p.eps) << '\n'
              << "S            " << short_string(p.S) << '\n'
              << "beta         " << short_string(p.beta) << '\n'
              << "center_codim " << p.center_codim << '\n';
    const auto& vol = p.vol_fn;
    for (std::size_t i = 0; i < vol.pieces().size(); ++i) {
        std::cout << "vol on [" << short_string(vol.breakpoints()[i]) << ", " << short_string(vol.breakpoints()[i + 1])
                  << "]: " << vol.pieces()[i].to_string() << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact K-stability invariants of toric Fano varieties"};
    app.require_subcommand(1);

    std::string fanspec, w_text, out_path, csv_path;
    int radius = kDefaultBatteryRadius;
    int samples = 11;
    std::set<int> only;
    std::vector<std::string> overrides;

    auto* analyze_cmd = app.add_subcommand("analyze", "Stability report over the valuation battery");
    analyze_cmd->add_option("fanspec", fanspec, "FanSpec file or builtin:<name>")->required();
    analyze_cmd->add_option("--radius", radius, "Battery radius")->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--out", out_path, "Write the JSON report here instead of stdout");

    auto* beta_cmd = app.add_subcommand("beta", "Invariants of one toric valuation");
    beta_cmd->add_option("fanspec", fanspec, "FanSpec file or builtin:<name>")->required();
    beta_cmd->add_option("--w", w_text, "Comma-separated lattice vector")->required();

    auto* alpha_cmd = app.add_subcommand("alpha", "Alpha invariant with witness divisor");
    alpha_cmd->add_option("fanspec", fanspec, "FanSpec file or builtin:<name>")->required();

    auto* volfn_cmd = app.add_subcommand("volfn", "Volume function and restricted volume samples");
    volfn_cmd->add_option("fanspec", fanspec, "FanSpec file or builtin:<name>")->required();
    volfn_cmd->add_option("--w", w_text, "Comma-separated lattice vector")->required();
    volfn_cmd->add_option("--samples", samples, "Number of evenly spaced sample points (>= 2)");
    volfn_cmd->add_option("--csv", csv_path, "Write the CSV here instead of stdout");

    auto* screen_cmd = app.add_subcommand("screen", "Projective-space screen over the battery");
    screen_cmd->add_option("fanspec", fanspec, "FanSpec file or builtin:<name>")->required();
    screen_cmd->add_option("--radius", radius, "Battery radius")->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "Run the built-in acceptance suite");
    verify_cmd->add_option("--only", only, "Criterion numbers to run (default: all)");
    verify_cmd->add_option("--expect", overrides, "Override an expected value, e.g. beta=1");

    std::string k_text = "1", j_text = "0";
    auto* h0_cmd = app.add_subcommand("h0", "Count sections of order >= j in kP (lattice-point oracle)");
    h0_cmd->add_option("fanspec", fanspec, "FanSpec file or builtin:<name>")->required();
    h0_cmd->add_option("--w", w_text, "Comma-separated lattice vector")->required();
    h0_cmd->add_option("--k", k_text, "Dilation factor (positive integer)");
    h0_cmd->add_option("--j", j_text, "Order threshold");

    auto* list_cmd = app.add_subcommand("list", "List built-in fans");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*list_cmd) {
            for (const auto& spec : builtin_corpus()) std::cout << spec.name << '\n';
        } else if (*verify_cmd) {
            SuiteExpectations exp;
            for (const auto& o : overrides) apply_expectation_override(exp, o);
            return run_builtin_suite(std::cout, exp, only);
        } else if (*analyze_cmd) {
            auto text = report_to_json(analyze(load(fanspec), radius)).dump(2) + "\n";
            if (out_path.empty()) {
                std::cout << text;
            } else {
                write_text(out_path, text);
            }
        } else if (*beta_cmd) {
            auto X = load(fanspec);
            ToricValuation v(X, parse_w(w_text, X->dim()));
            print_profile(compute_profile(v));
            std::cout << "beta (barycenter) " << short_string(beta_from_barycenter(v)) << '\n';
        } else if (*alpha_cmd) {
            auto X = load(fanspec);
            auto a = alpha(*X);
            std::cout << "alpha        " << short_string(a.alpha) << '\n'
                      << "witness ray  " << a.witness_ray_index << ' ' << X->fan().rays()[a.witness_ray_index] << '\n'
                      << "witness m    " << a.witness_m << '\n'
                      << "divisor     ";
            for (const Rat& d : a.witness_divisor) std::cout << ' ' << short_string(d);
            std::cout << "\nthresholds  ";
            for (const Rat& t : a.ray_thresholds) std::cout << ' ' << short_string(t);
            std::cout << "\ngate         " << to_string(alpha_gate_main_theorem(*X).verdict) << '\n';
        } else if (*volfn_cmd) {
            auto X = load(fanspec);
            ToricValuation v(X, parse_w(w_text, X->dim()));
            if (csv_path.empty()) {
                std::cout << volume_csv(v, samples);
            } else {
                export_volume_csv(v, samples, csv_path);
            }
        } else if (*h0_cmd) {
            auto X = load(fanspec);
            ToricValuation v(X, parse_w(w_text, X->dim()));
            Rat k = parse_rat(k_text), j = parse_rat(j_text);
            if (denominator(k) != 1 || denominator(j) != 1) throw parse_error("k and j must be integers");
            std::cout << h0_count(v, numerator(k), numerator(j)) << '\n';
        } else if (*screen_cmd) {
            auto s = screen_projective_space(load(fanspec), radius);
            std::cout << screen_to_json(s).dump(2) << '\n';
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
