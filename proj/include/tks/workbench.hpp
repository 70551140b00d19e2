#pragma once

// Battery-level analysis of a toric Q-Fano variety: stability reports,
// the projective-space screen and plot-friendly volume tables.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tks/alpha.hpp"
#include "tks/valuation.hpp"

namespace tks {

inline constexpr int kDefaultBatteryRadius = 4;

// Primitive w with max-norm <= radius, in lexicographic order. Primitivity
// already removes every duplicate direction.
std::vector<LatticeVec> valuation_battery(std::size_t dim, int radius);

struct ScreenWitness {
    LatticeVec w;
    Rat A;
    Rat tau;
    Rat beta;
};

enum class ScreenVerdict {
    no_witness,
    projective_space_recognized,
    violation,                // witness on a smooth fan other than P^n
    singular_counterexample,  // witness on a singular fan; nothing is asserted
};

std::string to_string(ScreenVerdict v);

struct ScreenResult {
    int radius = 0;
    bool smooth = false;
    bool projective_space = false;
    std::vector<ScreenWitness> witnesses;
    ScreenVerdict verdict = ScreenVerdict::no_witness;
};

// Battery valuations with (n+1) A >= n tau and beta <= 0. On a smooth fan any
// such witness must come from P^n.
ScreenResult screen_projective_space(const VarietyPtr& X, int radius = kDefaultBatteryRadius);

struct StabilityReport {
    std::string name;
    std::size_t n = 0;
    Rat degree;
    AlphaResult alpha;
    DualVec barycenter;
    bool smooth = false;
    int radius = 0;
    std::vector<ValuationProfile> profiles;  // battery order

    bool toric_divisorial_semistable = false;
    Rat min_beta;
    LatticeVec min_beta_w;  // first battery entry attaining min_beta
    // Primitive vector along the barycenter, where beta is most negative per
    // unit of <barycenter, .>. Empty when the barycenter is zero.
    std::optional<ScreenWitness> destabilizing_direction;

    bool strictly_stable_over_toric = false;
    std::string strict_stability_reason;

    ScreenResult screen;

    std::vector<std::string> assumptions;
    std::vector<std::string> exact_claims;
    std::vector<std::string> search_claims;
};

// Profiles are computed concurrently when `parallel` is set; the report is
// assembled in battery order either way. Throws invariant_error if the
// barycenter verdict and the battery disagree.
StabilityReport analyze(const VarietyPtr& X, int radius = kDefaultBatteryRadius, bool parallel = true);

nlohmann::ordered_json profile_to_json(const ValuationProfile& p);
nlohmann::ordered_json screen_to_json(const ScreenResult& s);
nlohmann::ordered_json report_to_json(const StabilityReport& r);

// CSV with header x,vol,Q,exact at samples evenly spaced points of [0, tau].
// Decimal columns carry 12 significant digits; the exact column holds the
// three values as space-separated fractions.
std::string volume_csv(const ToricValuation& v, int samples);
void export_volume_csv(const ToricValuation& v, int samples, const std::filesystem::path& path);

}  // namespace tks
