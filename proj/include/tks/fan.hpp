#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tks/lattice.hpp"

namespace tks {

// Indices into the host fan's ray table.
struct Cone {
    std::vector<std::size_t> rays;
};

// Where a lattice vector sits in a simplicial fan: a maximal cone containing
// it and its (nonnegative) coordinates with respect to that cone's rays.
struct ConeLocation {
    std::size_t cone = 0;
    std::vector<Rat> coords;
};

inline constexpr std::uint64_t kDefaultProbeSeed = 0x746b73u;
inline constexpr int kDefaultProbeCount = 1000;

// A complete simplicial fan in N_R. Construction validates every invariant and
// throws invariant_error naming the offending ray or cone index:
//   - rays nonzero, primitive, pairwise distinct, each used by some cone;
//   - every maximal cone simplicial (n linearly independent rays);
//   - every wall shared by exactly two maximal cones lying on opposite sides;
//   - a battery of seeded point-location probes finds no gap and no overlap.
class Fan {
public:
    Fan(std::size_t dim, std::vector<LatticeVec> rays, std::vector<Cone> cones,
        std::uint64_t probe_seed = kDefaultProbeSeed, int probe_count = kDefaultProbeCount);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<LatticeVec>& rays() const noexcept { return rays_; }
    const std::vector<Cone>& cones() const noexcept { return cones_; }

    std::vector<LatticeVec> cone_generators(std::size_t cone) const;

    // Coordinates of w in the basis of the cone's rays (may be negative).
    std::vector<Rat> coordinates_in_cone(std::size_t cone, const LatticeVec& w) const;

    // Some maximal cone containing w. Complete fans always have one.
    ConeLocation locate(const LatticeVec& w) const;

    std::optional<std::size_t> ray_index(const LatticeVec& v) const;

private:
    void validate_rays() const;
    void validate_cones();
    void validate_walls() const;
    void probe_support(std::uint64_t seed, int count) const;

    std::size_t dim_;
    std::vector<LatticeVec> rays_;
    std::vector<Cone> cones_;
    std::vector<RatMatrix> inverses_;  // per cone, maps N_Q to cone coordinates
};

// True iff every maximal cone's generators form a lattice basis (|det| = 1).
bool is_smooth(const Fan& fan);

// Normal vector to the hyperplane spanned by n-1 vectors in dimension n
// (generalized cross product). Zero iff the vectors are dependent.
std::vector<Rat> hyperplane_normal(std::span<const std::vector<Rat>> vectors, std::size_t dim);

}  // namespace tks
