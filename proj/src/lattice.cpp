#include "tks/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace tks {

namespace mp = boost::multiprecision;

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw math_error("zero denominator");
    return Rat(num, den);
}

std::string fraction_string(const Rat& r) {
    return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

std::string short_string(const Rat& r) {
    if (mp::denominator(r) == 1) return mp::numerator(r).str();
    return fraction_string(r);
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rat(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error("not a rational number: '" + text + "'");
    }
}

Int floor_rat(const Rat& r) {
    Int q = mp::numerator(r) / mp::denominator(r);  // truncates toward zero
    if (r < 0 && Rat(q) != r) q -= 1;
    return q;
}

Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

Rat pow_rat(const Rat& base, unsigned exponent) {
    Rat result = 1;
    Rat b = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return result;
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

LatticeVec::LatticeVec(std::initializer_list<long> coords) {
    coords_.reserve(coords.size());
    for (long c : coords) coords_.emplace_back(c);
}

bool LatticeVec::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Int& c) { return c == 0; });
}

Int LatticeVec::content() const {
    Int g = 0;
    for (const Int& c : coords_) g = mp::gcd(g, mp::abs(c));
    return g;
}

LatticeVec LatticeVec::operator-() const {
    LatticeVec out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = -coords_[i];
    return out;
}

LatticeVec LatticeVec::scaled(const Int& factor) const {
    LatticeVec out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = coords_[i] * factor;
    return out;
}

bool DualVec::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& c) { return c == 0; });
}

DualVec DualVec::operator+(const DualVec& other) const {
    require_same_dim(dim(), other.dim(), "DualVec::operator+");
    DualVec out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = coords_[i] + other[i];
    return out;
}

DualVec DualVec::operator-(const DualVec& other) const {
    require_same_dim(dim(), other.dim(), "DualVec::operator-");
    DualVec out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = coords_[i] - other[i];
    return out;
}

DualVec DualVec::operator*(const Rat& factor) const {
    DualVec out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = coords_[i] * factor;
    return out;
}

std::ostream& operator<<(std::ostream& os, const LatticeVec& v) {
    os << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
    return os << ')';
}

std::ostream& operator<<(std::ostream& os, const DualVec& v) {
    os << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << short_string(v[i]);
    return os << ')';
}

DualVec to_dual(const LatticeVec& v) {
    DualVec out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rat(v[i]);
    return out;
}

void require_same_dim(std::size_t a, std::size_t b, const char* where) {
    if (a != b) {
        std::ostringstream msg;
        msg << where << ": dimension mismatch (" << a << " vs " << b << ")";
        throw math_error(msg.str());
    }
}

Rat pairing(const DualVec& u, const LatticeVec& v) {
    require_same_dim(u.dim(), v.dim(), "pairing");
    Rat s = 0;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        if (v[i] != 0) s += u[i] * v[i];
    }
    return s;
}

Rat dot(const DualVec& a, const DualVec& b) {
    require_same_dim(a.dim(), b.dim(), "dot");
    Rat s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

LatticeVec primitivize(const LatticeVec& v) {
    Int g = v.content();
    if (g == 0) throw math_error("zero vector has no direction");
    LatticeVec out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i] / g;
    return out;
}

namespace {

// Reduces rows of M (which may carry extra augmented columns past `cols`) to
// row echelon form over the first `cols` columns. Returns pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& M, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < M.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < M.size() && M[pivot][col] == 0) ++pivot;
        if (pivot == M.size()) continue;
        std::swap(M[row], M[pivot]);
        for (std::size_t r = 0; r < M.size(); ++r) {
            if (r == row || M[r][col] == 0) continue;
            Rat factor = M[r][col] / M[row][col];
            for (std::size_t c = col; c < M[r].size(); ++c) M[r][c] -= factor * M[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<Rat> solve_linear(RatMatrix A, std::vector<Rat> b) {
    const std::size_t n = A.size();
    if (b.size() != n) throw math_error("solve_linear: right-hand side has wrong length");
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i].size() != n) throw math_error("solve_linear: matrix is not square");
        A[i].push_back(b[i]);
    }
    auto pivots = row_reduce(A, n);
    if (pivots.size() != n) throw math_error("singular system");
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = A[i][n] / A[i][i];
    return x;
}

Rat determinant(RatMatrix A) {
    const std::size_t n = A.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && A[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(A[pivot], A[col]);
            det = -det;
        }
        det *= A[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (A[r][col] == 0) continue;
            Rat factor = A[r][col] / A[col][col];
            for (std::size_t c = col; c < n; ++c) A[r][c] -= factor * A[col][c];
        }
    }
    return det;
}

std::size_t matrix_rank(RatMatrix A) {
    if (A.empty()) return 0;
    return row_reduce(A, A.front().size()).size();
}

std::optional<std::vector<Rat>> cone_coordinates(const LatticeVec& w,
                                                 std::span<const LatticeVec> generators) {
    const std::size_t n = w.dim();
    const std::size_t k = generators.size();
    RatMatrix M(n, std::vector<Rat>(k + 1));
    for (std::size_t j = 0; j < k; ++j) {
        require_same_dim(generators[j].dim(), n, "cone_coordinates");
        for (std::size_t i = 0; i < n; ++i) M[i][j] = Rat(generators[j][i]);
    }
    for (std::size_t i = 0; i < n; ++i) M[i][k] = Rat(w[i]);

    auto pivots = row_reduce(M, k);
    if (pivots.size() != k) throw math_error("non-simplicial cone");
    // Rows past the pivots must have a zero right-hand side, else w is off the span.
    for (std::size_t r = k; r < n; ++r) {
        if (M[r][k] != 0) return std::nullopt;
    }
    std::vector<Rat> coeffs(k);
    for (std::size_t r = 0; r < k; ++r) {
        coeffs[pivots[r]] = M[r][k] / M[r][pivots[r]];
        if (coeffs[pivots[r]] < 0) return std::nullopt;
    }
    return coeffs;
}

int affine_dimension(std::span<const DualVec> points) {
    if (points.empty()) return -1;
    RatMatrix diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back((points[i] - points[0]).coords());
    if (diffs.empty()) return 0;
    return static_cast<int>(matrix_rank(std::move(diffs)));
}

}  // namespace tks
