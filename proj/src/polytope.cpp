#include "tks/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

namespace tks {

namespace mp = boost::multiprecision;

namespace {

// Calls fn(indices) for every k-subset of {0, ..., m-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t m, std::size_t k, Fn&& fn) {
    if (k > m) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(std::as_const(idx));
        if (k == 0) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Gaussian elimination on a square system; nullopt when singular.
std::optional<std::vector<Rat>> try_solve(RatMatrix A, std::vector<Rat> b) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && A[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(A[pivot], A[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rat factor = A[r][col] / A[col][col];
            for (std::size_t c = col; c < n; ++c) A[r][c] -= factor * A[col][c];
            b[r] -= factor * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= A[i][i];
    return b;
}

bool recession_cone_trivial(const std::vector<Halfspace>& hs, std::size_t dim) {
    RatMatrix normals;
    for (const auto& h : hs) normals.push_back(to_dual(h.normal).coords());
    if (matrix_rank(normals) < dim) return false;
    // A nonzero pointed cone {d : A d >= 0} has an extreme ray cut out by
    // dim-1 independent tight rows.
    bool trivial = true;
    for_each_subset(hs.size(), dim - 1, [&](const std::vector<std::size_t>& rows) {
        if (!trivial) return;
        std::vector<std::vector<Rat>> sub;
        for (std::size_t r : rows) sub.push_back(normals[r]);
        DualVec d(hyperplane_normal(sub, dim));
        if (d.is_zero()) return;
        for (int s : {1, -1}) {
            bool feasible = std::all_of(hs.begin(), hs.end(),
                                        [&](const Halfspace& h) { return pairing(d, h.normal) * s >= 0; });
            if (feasible) trivial = false;
        }
    });
    return trivial;
}

std::vector<DualVec> enumerate_vertices(const std::vector<Halfspace>& hs, std::size_t dim) {
    std::vector<DualVec> verts;
    for_each_subset(hs.size(), dim, [&](const std::vector<std::size_t>& rows) {
        RatMatrix A;
        std::vector<Rat> b;
        for (std::size_t r : rows) {
            A.push_back(to_dual(hs[r].normal).coords());
            b.push_back(hs[r].offset);
        }
        auto x = try_solve(std::move(A), std::move(b));
        if (!x) return;
        DualVec u(std::move(*x));
        if (std::all_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return h.contains(u); })) {
            verts.push_back(std::move(u));
        }
    });
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

LatticeVec primitive_integer_normal(const std::vector<Rat>& normal, Rat& offset) {
    Int lcm = 1;
    for (const Rat& c : normal) lcm = mp::lcm(lcm, mp::denominator(c));
    lcm = mp::lcm(lcm, mp::denominator(offset));
    LatticeVec v(normal.size());
    for (std::size_t i = 0; i < normal.size(); ++i) v[i] = mp::numerator(Rat(normal[i] * lcm));
    Int g = v.content();
    offset = offset * lcm / g;
    return primitivize(v);
}

class Triangulator {
public:
    explicit Triangulator(const RationalPolytope& P) : P_(P) {
        const auto& hs = P.halfspaces();
        for (const auto& v : P.vertices()) {
            std::vector<char> row(hs.size());
            for (std::size_t j = 0; j < hs.size(); ++j) row[j] = hs[j].tight(v) ? 1 : 0;
            tight_.push_back(std::move(row));
        }
    }

    // Simplices (as vertex-index lists of size dim) covering the boundary of P.
    std::vector<std::vector<std::size_t>> boundary() {
        std::vector<std::size_t> all(P_.vertices().size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> apexes;
        const int n = static_cast<int>(P_.dim());
        for (const auto& facet : facets_of(all, n)) triangulate(facet, n - 1, apexes, out);
        return out;
    }

private:
    std::vector<std::vector<std::size_t>> facets_of(const std::vector<std::size_t>& face, int d) const {
        std::set<std::vector<std::size_t>> found;
        for (std::size_t j = 0; j < P_.halfspaces().size(); ++j) {
            std::vector<std::size_t> sub;
            for (std::size_t v : face) {
                if (tight_[v][j]) sub.push_back(v);
            }
            if (sub.size() == face.size() || sub.size() < static_cast<std::size_t>(d)) continue;
            if (found.count(sub)) continue;
            std::vector<DualVec> pts;
            for (std::size_t v : sub) pts.push_back(P_.vertices()[v]);
            if (affine_dimension(pts) == d - 1) found.insert(std::move(sub));
        }
        return {found.begin(), found.end()};
    }

    void triangulate(const std::vector<std::size_t>& face, int d, std::vector<std::size_t>& apexes,
                     std::vector<std::vector<std::size_t>>& out) const {
        if (d == 0) {
            auto simplex = apexes;
            simplex.push_back(face.front());
            out.push_back(std::move(simplex));
            return;
        }
        const std::size_t apex = face.front();
        apexes.push_back(apex);
        for (const auto& facet : facets_of(face, d)) {
            if (std::find(facet.begin(), facet.end(), apex) != facet.end()) continue;
            triangulate(facet, d - 1, apexes, out);
        }
        apexes.pop_back();
    }

    const RationalPolytope& P_;
    std::vector<std::vector<char>> tight_;
};

Rat factorial(std::size_t n) {
    Rat f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

// Signed-volume-free simplex measure |det(v_i - base)| / n!.
Rat simplex_volume(const DualVec& base, const std::vector<const DualVec*>& pts) {
    RatMatrix M;
    for (const DualVec* p : pts) M.push_back((*p - base).coords());
    return abs(determinant(std::move(M))) / factorial(base.dim());
}

struct Decomposition {
    std::vector<std::vector<std::size_t>> simplices;
    DualVec base;
};

}  // namespace

RationalPolytope::RationalPolytope(std::size_t dim, std::vector<Halfspace> halfspaces)
    : dim_(dim), halfspaces_(std::move(halfspaces)) {
    if (dim_ == 0) throw math_error("polytope dimension must be at least 1");
    for (const auto& h : halfspaces_) require_same_dim(h.normal.dim(), dim_, "RationalPolytope");
    if (!recession_cone_trivial(halfspaces_, dim_)) throw invariant_error("polyhedron is unbounded");
    vertices_ = enumerate_vertices(halfspaces_, dim_);
}

bool RationalPolytope::full_dimensional() const {
    return static_cast<int>(dim_) == affine_dimension(vertices_);
}

bool RationalPolytope::contains(const DualVec& u) const {
    return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const Halfspace& h) { return h.contains(u); });
}

bool RationalPolytope::strictly_contains(const DualVec& u) const {
    return std::all_of(halfspaces_.begin(), halfspaces_.end(),
                       [&](const Halfspace& h) { return pairing(u, h.normal) > h.offset; });
}

RationalPolytope RationalPolytope::clipped(const Halfspace& extra) const {
    auto hs = halfspaces_;
    hs.push_back(extra);
    return RationalPolytope(dim_, std::move(hs));
}

DualVec RationalPolytope::vertex_centroid() const {
    if (vertices_.empty()) throw math_error("empty polytope has no centroid");
    DualVec sum(dim_);
    for (const auto& v : vertices_) sum = sum + v;
    return sum * Rat(1, vertices_.size());
}

std::vector<Halfspace> hull_facets(std::span<const DualVec> points, std::size_t dim) {
    std::vector<Halfspace> facets;
    if (affine_dimension(points) != static_cast<int>(dim)) {
        throw math_error("hull_facets: point set is not full-dimensional");
    }
    for_each_subset(points.size(), dim, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::vector<Rat>> diffs;
        for (std::size_t i = 1; i < idx.size(); ++i) diffs.push_back((points[idx[i]] - points[idx[0]]).coords());
        std::vector<Rat> normal = hyperplane_normal(diffs, dim);
        if (DualVec(normal).is_zero()) return;
        DualVec nv(normal);
        Rat offset = dot(nv, points[idx[0]]);
        bool above = true;
        bool below = true;
        for (const auto& p : points) {
            Rat val = dot(nv, p);
            if (val < offset) above = false;
            if (val > offset) below = false;
        }
        if (!above && !below) return;
        if (!above) {
            for (auto& c : normal) c = -c;
            offset = -offset;
        }
        LatticeVec integral = primitive_integer_normal(normal, offset);
        Halfspace h{std::move(integral), offset};
        if (std::find(facets.begin(), facets.end(), h) == facets.end()) facets.push_back(std::move(h));
    });
    return facets;
}

namespace {

Decomposition decompose(const RationalPolytope& P, const std::optional<DualVec>& base) {
    Decomposition d;
    d.base = base ? *base : P.vertex_centroid();
    if (!P.strictly_contains(d.base)) throw math_error("triangulation base point is not interior");
    d.simplices = Triangulator(P).boundary();
    return d;
}

}  // namespace

VolumeResult polytope_volume(const RationalPolytope& P, const std::optional<DualVec>& base) {
    if (P.empty() || !P.full_dimensional()) return {Rat(0), true};
    auto d = decompose(P, base);
    Rat total = 0;
    std::vector<const DualVec*> pts;
    for (const auto& s : d.simplices) {
        pts.clear();
        for (std::size_t v : s) pts.push_back(&P.vertices()[v]);
        total += simplex_volume(d.base, pts);
    }
    return {total, false};
}

DualVec barycenter(const RationalPolytope& P) {
    if (P.empty() || !P.full_dimensional()) throw math_error("barycenter of a degenerate polytope");
    auto d = decompose(P, std::nullopt);
    Rat total = 0;
    DualVec moment(P.dim());
    std::vector<const DualVec*> pts;
    const Rat share(1, P.dim() + 1);
    for (const auto& s : d.simplices) {
        pts.clear();
        for (std::size_t v : s) pts.push_back(&P.vertices()[v]);
        Rat vol = simplex_volume(d.base, pts);
        DualVec centroid = d.base;
        for (const DualVec* p : pts) centroid = centroid + *p;
        moment = moment + centroid * (vol * share);
        total += vol;
    }
    return moment * (1 / total);
}

Rat max_linear_functional(const RationalPolytope& P, const LatticeVec& w) {
    if (P.empty()) throw math_error("max over an empty polytope");
    Rat best = pairing(P.vertices().front(), w);
    for (const auto& v : P.vertices()) best = std::max(best, pairing(v, w));
    return best;
}

Rat min_linear_functional(const RationalPolytope& P, const LatticeVec& w) {
    return -max_linear_functional(P, -w);
}

RationalPolytope anticanonical_polytope(const Fan& fan) {
    std::vector<Halfspace> hs;
    for (const auto& r : fan.rays()) hs.push_back({r, Rat(-1)});
    std::optional<RationalPolytope> P;
    try {
        P.emplace(fan.dim(), std::move(hs));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::invariant) throw invariant_error("fan not complete / not Fano");
        throw;
    }
    if (!P->strictly_contains(DualVec(fan.dim()))) throw invariant_error("not Q-Fano: origin is not interior");
    // -K_X is ample iff, for every maximal cone, the vertex m with
    // <m, v_i> = -1 on the cone's rays lies strictly inside every other ray's
    // halfspace.
    for (std::size_t c = 0; c < fan.cones().size(); ++c) {
        const auto& idx = fan.cones()[c].rays;
        RatMatrix A;
        for (std::size_t i : idx) A.push_back(to_dual(fan.rays()[i]).coords());
        DualVec m(solve_linear(std::move(A), std::vector<Rat>(idx.size(), Rat(-1))));
        for (std::size_t j = 0; j < fan.rays().size(); ++j) {
            if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
            if (pairing(m, fan.rays()[j]) <= -1) {
                std::ostringstream os;
                os << "not Q-Fano: -K_X is not ample (cone " << c << " vs ray " << j << ")";
                throw invariant_error(os.str());
            }
        }
    }
    if (!P->full_dimensional()) throw invariant_error("not Q-Fano: anticanonical polytope is degenerate");
    return std::move(*P);
}

std::uint64_t count_lattice_points(const RationalPolytope& P, const Int& k, std::span<const Halfspace> extra,
                                   std::uint64_t budget) {
    if (k <= 0) throw math_error("count_lattice_points: k must be positive");
    if (P.empty()) return 0;
    const std::size_t n = P.dim();
    std::vector<Int> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat mn = P.vertices().front()[i], mx = mn;
        for (const auto& v : P.vertices()) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        lo[i] = ceil_rat(mn * k);
        hi[i] = floor_rat(mx * k);
    }
    Int box = 1;
    for (std::size_t i = 0; i < n; ++i) box *= (hi[i] >= lo[i]) ? Int(hi[i] - lo[i] + 1) : Int(0);
    if (box > budget) {
        std::ostringstream os;
        os << "oracle budget exceeded (" << box << " > " << budget << " points)";
        throw budget_error(os.str());
    }
    if (box == 0) return 0;

    // Integer constraints a.u >= b; the box is small so 64-bit coordinates suffice,
    // and products are accumulated in 128 bits.
    constexpr long long kLimit = std::numeric_limits<long long>::max() / 4;
    auto to_ll = [&](const Int& v) -> long long {
        if (abs(v) > kLimit) throw budget_error("oracle coordinates exceed the 64-bit range");
        return v.convert_to<long long>();
    };
    struct Row {
        std::vector<long long> a;
        __int128 b;
    };
    std::vector<Row> rows;
    auto add_row = [&](const LatticeVec& normal, const Rat& bound) {
        Row r;
        for (std::size_t i = 0; i < n; ++i) r.a.push_back(to_ll(normal[i]));
        r.b = to_ll(ceil_rat(bound));
        rows.push_back(std::move(r));
    };
    for (const auto& h : P.halfspaces()) add_row(h.normal, h.offset * k);
    for (const auto& h : extra) add_row(h.normal, h.offset);

    std::vector<long long> l(n), u(n);
    for (std::size_t i = 0; i < n; ++i) {
        l[i] = to_ll(lo[i]);
        u[i] = to_ll(hi[i]);
    }

    auto floor_div = [](__int128 a, __int128 b) {
        __int128 q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    };
    auto ceil_div = [&](__int128 a, __int128 b) { return -floor_div(-a, b); };

    // Odometer over the first n-1 coordinates; the last is an interval count.
    std::vector<long long> pt(l);
    std::uint64_t count = 0;
    const std::size_t last = n - 1;
    while (true) {
        __int128 lower = l[last], upper = u[last];
        for (const auto& r : rows) {
            __int128 rest = r.b;
            for (std::size_t i = 0; i < last; ++i) rest -= static_cast<__int128>(r.a[i]) * pt[i];
            const __int128 c = r.a[last];
            if (c > 0) {
                lower = std::max(lower, ceil_div(rest, c));
            } else if (c < 0) {
                upper = std::min(upper, floor_div(rest, c));
            } else if (rest > 0) {
                upper = lower - 1;
            }
        }
        if (upper >= lower) count += static_cast<std::uint64_t>(upper - lower + 1);

        std::size_t i = 0;
        while (i < last) {
            if (pt[i] < u[i]) {
                ++pt[i];
                break;
            }
            pt[i] = l[i];
            ++i;
        }
        if (i == last) break;
    }
    return count;
}

std::uint64_t oracle_budget_from_env() {
    const char* env = std::getenv("TKS_ORACLE_BUDGET");
    if (env == nullptr || *env == '\0') return kDefaultOracleBudget;
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw parse_error(std::string("TKS_ORACLE_BUDGET is not a positive integer: '") + env + "'");
    }
}

}  // namespace tks
