#pragma once

// FanSpec documents: JSON, UTF-8,
//
//   {"name": "P2", "dim": 2,
//    "rays": [[1,0],[0,1],[-1,-1]],
//    "cones": [[0,1],[1,2],[2,0]],
//    "metadata": {...}}            (optional, free-form)
//
// Ray coordinates are JSON integers, or decimal strings for values outside
// the 64-bit range. Unknown top-level fields are ignored with a warning.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tks/fan.hpp"
#include "tks/toric.hpp"

namespace tks {

struct FanSpec {
    std::string name;
    std::size_t dim = 0;
    std::vector<LatticeVec> rays;
    std::vector<std::vector<std::size_t>> cones;
    nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
};

// Throws parse_error on malformed documents. Warnings (unknown fields) are
// appended to `warnings` when given.
FanSpec parse_fanspec(std::string_view text, std::vector<std::string>* warnings = nullptr);
FanSpec read_fanspec_file(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);
nlohmann::ordered_json fanspec_to_json(const FanSpec& spec);

// Validates every fan invariant (invariant_error names the ray / cone index).
Fan build_fan(const FanSpec& spec);
// build_fan plus the Q-Fano gate.
VarietyPtr load_variety(const FanSpec& spec);

// "builtin:<name>" selects a corpus fan; anything else is a file path.
FanSpec resolve_fanspec(const std::string& ref, std::vector<std::string>* warnings = nullptr);

}  // namespace tks
