#pragma once

#include <memory>
#include <string>

#include "tks/fan.hpp"
#include "tks/polytope.hpp"

namespace tks {

// A validated toric Q-Fano variety: the fan, its anticanonical polytope and
// the derived exact data every invariant needs. Immutable once built.
class ToricVariety {
public:
    // Throws invariant_error if the fan is not Q-Fano.
    explicit ToricVariety(Fan fan, std::string name = {});

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return fan_.dim(); }
    const Fan& fan() const noexcept { return fan_; }
    const RationalPolytope& polytope() const noexcept { return polytope_; }

    const Rat& polytope_volume() const noexcept { return volume_; }
    // ((-K_X)^n) = n! vol(P).
    const Rat& degree() const noexcept { return degree_; }
    const DualVec& barycenter() const noexcept { return barycenter_; }
    bool smooth() const noexcept { return smooth_; }

private:
    std::string name_;
    Fan fan_;
    RationalPolytope polytope_;
    Rat volume_;
    Rat degree_;
    DualVec barycenter_;
    bool smooth_;
};

using VarietyPtr = std::shared_ptr<const ToricVariety>;

inline VarietyPtr make_variety(Fan fan, std::string name = {}) {
    return std::make_shared<const ToricVariety>(std::move(fan), std::move(name));
}

Rat factorial(unsigned n);

// Smooth, complete and exactly n+1 rays: the only such fan is that of P^n.
bool is_projective_space(const Fan& fan);

}  // namespace tks
