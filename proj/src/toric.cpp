#include "tks/toric.hpp"

namespace tks {

Rat factorial(unsigned n) {
    Rat f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

ToricVariety::ToricVariety(Fan fan, std::string name)
    : name_(std::move(name)),
      fan_(std::move(fan)),
      polytope_(anticanonical_polytope(fan_)),
      volume_(tks::polytope_volume(polytope_).volume),
      degree_(volume_ * factorial(static_cast<unsigned>(fan_.dim()))),
      barycenter_(tks::barycenter(polytope_)),
      smooth_(is_smooth(fan_)) {}

bool is_projective_space(const Fan& fan) {
    return is_smooth(fan) && fan.rays().size() == fan.dim() + 1;
}

}  // namespace tks
