#include "tks/piecewise.hpp"

#include <algorithm>
#include <sstream>

namespace tks {

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Polynomial::operator()(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * i;
    return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
    std::vector<Rat> a(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i + 1] = coeffs_[i] / (i + 1);
    return Polynomial(std::move(a));
}

Rat Polynomial::integral(const Rat& a, const Rat& b) const {
    Polynomial F = antiderivative();
    return F(b) - F(a);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<Rat> c(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + other * Rat(-1); }

Polynomial Polynomial::operator*(const Rat& factor) const {
    std::vector<Rat> c = coeffs_;
    for (auto& x : c) x *= factor;
    return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) {
            os << short_string(mag);
            if (i > 0) os << "*";
        }
        if (i == 1) os << "x";
        if (i > 1) os << "x^" << i;
    }
    return os.str();
}

Polynomial interpolate(std::span<const Rat> xs, std::span<const Rat> ys) {
    if (xs.size() != ys.size() || xs.empty()) throw math_error("interpolate: mismatched sample sizes");
    Polynomial result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        // Lagrange basis polynomial l_i, built by multiplying (x - x_j)/(x_i - x_j).
        std::vector<Rat> basis{Rat(1)};
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            Rat denom = xs[i] - xs[j];
            if (denom == 0) throw math_error("interpolate: repeated abscissa");
            std::vector<Rat> next(basis.size() + 1);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k] / denom;
                next[k] -= basis[k] * xs[j] / denom;
            }
            basis = std::move(next);
        }
        result = result + Polynomial(std::move(basis)) * ys[i];
    }
    return result;
}

namespace {

Rat binomial(std::size_t n, std::size_t k) {
    Rat r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Bernstein coefficients of p on [a, b].
std::vector<Rat> bernstein(const Polynomial& p, const Rat& a, const Rat& b) {
    const int d = std::max(p.degree(), 0);
    // Coefficients of q(t) = p(a + (b - a) t).
    std::vector<Rat> q(d + 1);
    const Rat h = b - a;
    for (int i = 0; i <= p.degree(); ++i) {
        // (a + h t)^i expanded.
        Rat hk = 1;
        for (int k = 0; k <= i; ++k) {
            q[k] += p.coeffs()[i] * binomial(i, k) * pow_rat(a, i - k) * hk;
            hk *= h;
        }
    }
    std::vector<Rat> out(d + 1);
    for (int i = 0; i <= d; ++i) {
        for (int j = 0; j <= i; ++j) out[i] += binomial(i, j) / binomial(d, j) * q[j];
    }
    return out;
}

bool certify_rec(const Polynomial& p, const Rat& a, const Rat& b, int depth) {
    auto coeffs = bernstein(p, a, b);
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c >= 0; })) return true;
    if (p(a) < 0 || p(b) < 0 || depth == 0) return false;
    Rat mid = (a + b) / 2;
    return certify_rec(p, a, mid, depth - 1) && certify_rec(p, mid, b, depth - 1);
}

}  // namespace

bool certify_nonnegative(const Polynomial& p, const Rat& a, const Rat& b, int max_depth) {
    if (p.is_zero()) return true;
    return certify_rec(p, a, b, max_depth);
}

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rat> breakpoints, std::vector<Polynomial> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breakpoints_.size() < 2 || pieces_.size() + 1 != breakpoints_.size()) {
        throw math_error("piecewise polynomial needs one piece per interval");
    }
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i - 1] < breakpoints_[i])) throw math_error("breakpoints must strictly increase");
    }
}

std::size_t PiecewisePolynomial::piece_index(const Rat& x) const {
    if (x < lower() || x > upper()) {
        throw math_error("piecewise polynomial evaluated outside its domain at " + short_string(x));
    }
    auto it = std::lower_bound(breakpoints_.begin() + 1, breakpoints_.end(), x);
    return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

Rat PiecewisePolynomial::operator()(const Rat& x) const { return pieces_[piece_index(x)](x); }

PiecewisePolynomial PiecewisePolynomial::derivative() const {
    std::vector<Polynomial> d;
    for (const auto& p : pieces_) d.push_back(p.derivative());
    return {breakpoints_, std::move(d)};
}

PiecewisePolynomial PiecewisePolynomial::operator*(const Rat& factor) const {
    std::vector<Polynomial> s;
    for (const auto& p : pieces_) s.push_back(p * factor);
    return {breakpoints_, std::move(s)};
}

Rat PiecewisePolynomial::integral() const {
    Rat total = 0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) total += pieces_[i].integral(breakpoints_[i], breakpoints_[i + 1]);
    return total;
}

PiecewisePolynomial PiecewisePolynomial::merged() const {
    std::vector<Rat> bps{breakpoints_.front()};
    std::vector<Polynomial> ps{pieces_.front()};
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        if (pieces_[i] == ps.back()) continue;
        bps.push_back(breakpoints_[i]);
        ps.push_back(pieces_[i]);
    }
    bps.push_back(breakpoints_.back());
    return {std::move(bps), std::move(ps)};
}

std::vector<Rat> PiecewisePolynomial::discontinuities() const {
    std::vector<Rat> out;
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        if (pieces_[i - 1](breakpoints_[i]) != pieces_[i](breakpoints_[i])) out.push_back(breakpoints_[i]);
    }
    return out;
}

std::vector<Rat> PiecewisePolynomial::derivative_jumps() const {
    return derivative().discontinuities();
}

bool PiecewisePolynomial::certify_non_increasing() const {
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (!certify_nonnegative(pieces_[i].derivative() * Rat(-1), breakpoints_[i], breakpoints_[i + 1])) {
            return false;
        }
    }
    return discontinuities().empty();
}

}  // namespace tks
