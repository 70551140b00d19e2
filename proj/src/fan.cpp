#include "tks/fan.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace tks {

namespace {

std::string index_list(const std::vector<std::size_t>& idx) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << '}';
    return os.str();
}

int sign(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

std::vector<Rat> hyperplane_normal(std::span<const std::vector<Rat>> vectors, std::size_t dim) {
    if (vectors.size() + 1 != dim) throw math_error("hyperplane_normal: need dim-1 vectors");
    std::vector<Rat> normal(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        RatMatrix minor(dim - 1, std::vector<Rat>(dim - 1));
        for (std::size_t r = 0; r + 1 < dim; ++r) {
            std::size_t c2 = 0;
            for (std::size_t c = 0; c < dim; ++c) {
                if (c == j) continue;
                minor[r][c2++] = vectors[r][c];
            }
        }
        Rat d = dim == 1 ? Rat(1) : determinant(std::move(minor));
        normal[j] = (j % 2 == 0) ? d : -d;
    }
    return normal;
}

Fan::Fan(std::size_t dim, std::vector<LatticeVec> rays, std::vector<Cone> cones,
         std::uint64_t probe_seed, int probe_count)
    : dim_(dim), rays_(std::move(rays)), cones_(std::move(cones)) {
    if (dim_ == 0) throw invariant_error("fan dimension must be at least 1");
    for (auto& c : cones_) std::sort(c.rays.begin(), c.rays.end());
    validate_rays();
    validate_cones();
    validate_walls();
    probe_support(probe_seed, probe_count);
}

void Fan::validate_rays() const {
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        const auto& r = rays_[i];
        if (r.dim() != dim_) {
            std::ostringstream os;
            os << "ray " << i << " has dimension " << r.dim() << ", expected " << dim_;
            throw invariant_error(os.str());
        }
        if (r.is_zero()) throw invariant_error("ray " + std::to_string(i) + " is zero");
        if (r.content() != 1) {
            std::ostringstream os;
            os << "ray " << i << " " << r << " is not primitive";
            throw invariant_error(os.str());
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (rays_[j] == r) {
                std::ostringstream os;
                os << "ray " << i << " duplicates ray " << j;
                throw invariant_error(os.str());
            }
        }
    }
}

void Fan::validate_cones() {
    if (cones_.empty()) throw invariant_error("fan has no maximal cones");
    std::vector<bool> used(rays_.size(), false);
    for (std::size_t c = 0; c < cones_.size(); ++c) {
        const auto& idx = cones_[c].rays;
        for (std::size_t i : idx) {
            if (i >= rays_.size()) {
                std::ostringstream os;
                os << "cone " << c << " references missing ray " << i;
                throw invariant_error(os.str());
            }
            used[i] = true;
        }
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
            throw invariant_error("cone " + std::to_string(c) + " repeats a ray index");
        }
        if (idx.size() != dim_) {
            std::ostringstream os;
            os << "cone " << c << " is not simplicial of full dimension (" << idx.size()
               << " rays in dimension " << dim_ << ")";
            throw invariant_error(os.str());
        }
        RatMatrix M;
        for (std::size_t i : idx) M.push_back(to_dual(rays_[i]).coords());
        if (determinant(M) == 0) {
            throw invariant_error("cone " + std::to_string(c) + " is not simplicial (dependent rays)");
        }
        for (std::size_t d = 0; d < c; ++d) {
            if (cones_[d].rays == idx) {
                std::ostringstream os;
                os << "cone " << c << " duplicates cone " << d;
                throw invariant_error(os.str());
            }
        }
    }
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        if (!used[i]) throw invariant_error("ray " + std::to_string(i) + " lies in no maximal cone");
    }
    inverses_.clear();
    for (std::size_t c = 0; c < cones_.size(); ++c) {
        // Column j of the inverse of G (columns = rays) solves G x = e_j.
        RatMatrix G(dim_, std::vector<Rat>(dim_));
        for (std::size_t j = 0; j < dim_; ++j) {
            for (std::size_t i = 0; i < dim_; ++i) G[i][j] = Rat(rays_[cones_[c].rays[j]][i]);
        }
        RatMatrix inv(dim_, std::vector<Rat>(dim_));
        for (std::size_t j = 0; j < dim_; ++j) {
            std::vector<Rat> e(dim_);
            e[j] = 1;
            auto col = solve_linear(G, e);
            for (std::size_t i = 0; i < dim_; ++i) inv[i][j] = col[i];
        }
        inverses_.push_back(std::move(inv));
    }
}

std::vector<Rat> Fan::coordinates_in_cone(std::size_t cone, const LatticeVec& w) const {
    require_same_dim(w.dim(), dim_, "Fan::coordinates_in_cone");
    const auto& inv = inverses_[cone];
    std::vector<Rat> coords(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        for (std::size_t i = 0; i < dim_; ++i) {
            if (w[i] != 0) coords[j] += inv[j][i] * w[i];
        }
    }
    return coords;
}

void Fan::validate_walls() const {
    // wall (sorted ray indices) -> (cone, ray of that cone opposite the wall)
    std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> walls;
    for (std::size_t c = 0; c < cones_.size(); ++c) {
        const auto& idx = cones_[c].rays;
        for (std::size_t drop = 0; drop < idx.size(); ++drop) {
            std::vector<std::size_t> wall;
            for (std::size_t i = 0; i < idx.size(); ++i) {
                if (i != drop) wall.push_back(idx[i]);
            }
            walls[wall].emplace_back(c, idx[drop]);
        }
    }
    for (const auto& [wall, owners] : walls) {
        if (owners.size() != 2) {
            std::ostringstream os;
            os << "fan not complete: wall " << index_list(wall) << " of cone " << owners.front().first
               << " lies in " << owners.size() << " maximal cone(s)";
            throw invariant_error(os.str());
        }
        std::vector<std::vector<Rat>> spanning;
        for (std::size_t i : wall) spanning.push_back(to_dual(rays_[i]).coords());
        DualVec normal(hyperplane_normal(spanning, dim_));
        int s0 = sign(pairing(normal, rays_[owners[0].second]));
        int s1 = sign(pairing(normal, rays_[owners[1].second]));
        if (s0 * s1 != -1) {
            std::ostringstream os;
            os << "cones " << owners[0].first << " and " << owners[1].first << " overlap across wall "
               << index_list(wall);
            throw invariant_error(os.str());
        }
    }
}

void Fan::probe_support(std::uint64_t seed, int count) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-1000000, 1000000);
    for (int p = 0; p < count; ++p) {
        LatticeVec probe(dim_);
        for (std::size_t i = 0; i < dim_; ++i) probe[i] = coord(rng);
        if (probe.is_zero()) continue;
        int containing = 0;
        int interior = 0;
        for (std::size_t c = 0; c < cones_.size(); ++c) {
            auto coeffs = coordinates_in_cone(c, probe);
            if (std::any_of(coeffs.begin(), coeffs.end(), [](const Rat& a) { return a < 0; })) continue;
            ++containing;
            if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& a) { return a > 0; })) ++interior;
        }
        if (containing == 0) {
            std::ostringstream os;
            os << "fan not complete: probe point " << probe << " lies in no maximal cone";
            throw invariant_error(os.str());
        }
        if (interior > 1) {
            std::ostringstream os;
            os << "maximal cones overlap: probe point " << probe << " is interior to " << interior << " cones";
            throw invariant_error(os.str());
        }
    }
}

std::vector<LatticeVec> Fan::cone_generators(std::size_t cone) const {
    std::vector<LatticeVec> gens;
    gens.reserve(cones_[cone].rays.size());
    for (std::size_t i : cones_[cone].rays) gens.push_back(rays_[i]);
    return gens;
}

ConeLocation Fan::locate(const LatticeVec& w) const {
    require_same_dim(w.dim(), dim_, "Fan::locate");
    for (std::size_t c = 0; c < cones_.size(); ++c) {
        auto coeffs = coordinates_in_cone(c, w);
        if (std::none_of(coeffs.begin(), coeffs.end(), [](const Rat& a) { return a < 0; })) {
            return {c, std::move(coeffs)};
        }
    }
    std::ostringstream os;
    os << "vector " << w << " is not covered by any cone";
    throw invariant_error(os.str());
}

std::optional<std::size_t> Fan::ray_index(const LatticeVec& v) const {
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        if (rays_[i] == v) return i;
    }
    return std::nullopt;
}

bool is_smooth(const Fan& fan) {
    for (std::size_t c = 0; c < fan.cones().size(); ++c) {
        RatMatrix M;
        for (const auto& g : fan.cone_generators(c)) M.push_back(to_dual(g).coords());
        if (abs(determinant(std::move(M))) != 1) return false;
    }
    return true;
}

}  // namespace tks
