#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tks/fan.hpp"
#include "tks/lattice.hpp"

namespace tks {

// <u, normal> >= offset
struct Halfspace {
    LatticeVec normal;
    Rat offset;

    bool contains(const DualVec& u) const { return pairing(u, normal) >= offset; }
    bool tight(const DualVec& u) const { return pairing(u, normal) == offset; }
    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

// A polytope in M (x) Q carried in both representations. The vertex list is
// computed from the halfspaces on construction and is sorted, so two
// polytopes built from the same halfspaces compare equal.
class RationalPolytope {
public:
    // Throws invariant_error("polyhedron is unbounded") for unbounded input.
    // An empty intersection is allowed and has no vertices.
    RationalPolytope(std::size_t dim, std::vector<Halfspace> halfspaces);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Halfspace>& halfspaces() const noexcept { return halfspaces_; }
    const std::vector<DualVec>& vertices() const noexcept { return vertices_; }

    bool empty() const noexcept { return vertices_.empty(); }
    bool full_dimensional() const;
    bool contains(const DualVec& u) const;
    bool strictly_contains(const DualVec& u) const;

    // Same halfspaces plus one more.
    RationalPolytope clipped(const Halfspace& extra) const;

    // Average of the vertices; strictly interior whenever full-dimensional.
    DualVec vertex_centroid() const;

private:
    std::size_t dim_;
    std::vector<Halfspace> halfspaces_;
    std::vector<DualVec> vertices_;
};

// Facet-defining halfspaces of conv(points), each with a primitive integer
// normal. Requires a full-dimensional point set.
std::vector<Halfspace> hull_facets(std::span<const DualVec> points, std::size_t dim);

struct VolumeResult {
    Rat volume;
    bool lower_dimensional = false;  // warning flag: the polytope has no interior
};

// Exact Euclidean volume by fan-out triangulation from an interior base point
// (the vertex centroid unless one is supplied). Faces are triangulated
// recursively by pulling from their first vertex.
VolumeResult polytope_volume(const RationalPolytope& P, const std::optional<DualVec>& base = std::nullopt);

// Exact centroid. Throws math_error for a lower-dimensional polytope.
DualVec barycenter(const RationalPolytope& P);

// max over P of <u, w>, attained at a vertex.
Rat max_linear_functional(const RationalPolytope& P, const LatticeVec& w);
Rat min_linear_functional(const RationalPolytope& P, const LatticeVec& w);

// P = {u : <u, v_i> >= -1 for every ray v_i}. Throws invariant_error
// "fan not complete / not Fano" when unbounded and "not Q-Fano" when -K_X is
// not ample (origin not interior, or the support function of -K_X fails to be
// strictly convex across some cone).
RationalPolytope anticanonical_polytope(const Fan& fan);

// Lattice points u in k*P that also satisfy every halfspace in `extra` (given
// in the coordinates of k*P). Enumerates the bounding box of k*P and throws
// budget_error("oracle budget exceeded") when the box holds more than
// `budget` points.
std::uint64_t count_lattice_points(const RationalPolytope& P, const Int& k, std::span<const Halfspace> extra,
                                   std::uint64_t budget);

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

// kDefaultOracleBudget unless TKS_ORACLE_BUDGET is set to a positive integer.
std::uint64_t oracle_budget_from_env();

}  // namespace tks
