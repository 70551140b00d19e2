#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tks/lattice.hpp"

namespace tks {

// Dense univariate polynomial with Rat coefficients, lowest degree first.
// Trailing zero coefficients are trimmed, so equality is structural.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs);

    const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const noexcept { return coeffs_.empty(); }

    Rat operator()(const Rat& x) const;
    Polynomial derivative() const;
    Polynomial antiderivative() const;  // zero constant term
    Rat integral(const Rat& a, const Rat& b) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Rat& factor) const;
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string() const;  // e.g. "6 - 2/3*x^2"

private:
    void trim();
    std::vector<Rat> coeffs_;
};

// Unique polynomial of degree < xs.size() through (xs[i], ys[i]).
Polynomial interpolate(std::span<const Rat> xs, std::span<const Rat> ys);

// True if p >= 0 on [a, b]. Sound but not complete: certified through
// nonnegative Bernstein coefficients on a bisected cover of the interval.
bool certify_nonnegative(const Polynomial& p, const Rat& a, const Rat& b, int max_depth = 12);

// A function on [breakpoints.front(), breakpoints.back()] given by one
// polynomial per interval.
class PiecewisePolynomial {
public:
    PiecewisePolynomial() = default;
    PiecewisePolynomial(std::vector<Rat> breakpoints, std::vector<Polynomial> pieces);

    const std::vector<Rat>& breakpoints() const noexcept { return breakpoints_; }
    const std::vector<Polynomial>& pieces() const noexcept { return pieces_; }
    const Rat& lower() const { return breakpoints_.front(); }
    const Rat& upper() const { return breakpoints_.back(); }

    // Index of the piece used at x; at an interior breakpoint the left piece.
    std::size_t piece_index(const Rat& x) const;
    // Throws math_error outside the domain.
    Rat operator()(const Rat& x) const;

    PiecewisePolynomial derivative() const;
    PiecewisePolynomial operator*(const Rat& factor) const;
    Rat integral() const;

    // Adjacent pieces with identical polynomials collapse into one.
    PiecewisePolynomial merged() const;

    // Interior breakpoints where left and right pieces disagree in value
    // (continuity) or in first derivative (C^1).
    std::vector<Rat> discontinuities() const;
    std::vector<Rat> derivative_jumps() const;

    bool certify_non_increasing() const;

private:
    std::vector<Rat> breakpoints_;
    std::vector<Polynomial> pieces_;
};

}  // namespace tks
