#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tks/fanspec.hpp"

namespace tks {

// Fan of P^n: rays e_1..e_n and -(e_1+...+e_n).
FanSpec projective_space_spec(std::size_t n);

// Complete 2-dimensional fan from rays listed in counterclockwise order.
FanSpec polygon_fan_spec(std::string name, const std::vector<LatticeVec>& rays);

// Every fan shipped with the workbench, in a fixed order.
std::vector<FanSpec> builtin_corpus();
std::optional<FanSpec> builtin_fan(std::string_view name);

// The five smooth toric del Pezzo surfaces: P2, P1xP1, Bl1P2, Bl2P2, Bl3P2.
std::vector<std::string> smooth_toric_del_pezzo_names();

// Ten fans used for the battery-wide cross-checks.
std::vector<std::string> crosscheck_corpus_names();

}  // namespace tks
