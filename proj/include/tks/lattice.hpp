#pragma once

// Exact rational arithmetic and small dense linear algebra over Q.
//
// Everything geometric in tks is built on these types: ray generators live in
// the lattice N (LatticeVec), section exponents live in M (x) Q (DualVec), and
// every invariant is a Rat in lowest terms. No floating point is used in any
// invariant computation.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tks/errors.hpp"

namespace tks {

using Int = boost::multiprecision::mpz_int;
// mpq_rational canonicalizes after every operation: lowest terms, positive
// denominator.
using Rat = boost::multiprecision::mpq_rational;

Rat make_rat(const Int& num, const Int& den);

// Always "p/q", including integers ("6/1"). Used by every serialized output.
std::string fraction_string(const Rat& r);
// "6", "-2/3": for human-facing text.
std::string short_string(const Rat& r);
// Parses "p", "p/q" or "-p/q".
Rat parse_rat(const std::string& text);

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);
Rat pow_rat(const Rat& base, unsigned exponent);
double to_double(const Rat& r);

// An element of the lattice N = Z^n.
class LatticeVec {
public:
    LatticeVec() = default;
    explicit LatticeVec(std::size_t dim) : coords_(dim) {}
    explicit LatticeVec(std::vector<Int> coords) : coords_(std::move(coords)) {}
    LatticeVec(std::initializer_list<long> coords);

    std::size_t dim() const noexcept { return coords_.size(); }
    const Int& operator[](std::size_t i) const { return coords_[i]; }
    Int& operator[](std::size_t i) { return coords_[i]; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }
    const std::vector<Int>& coords() const noexcept { return coords_; }

    bool is_zero() const;
    Int content() const;  // gcd of coordinates, 0 for the zero vector

    friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
    friend bool operator<(const LatticeVec& a, const LatticeVec& b) { return a.coords_ < b.coords_; }

    LatticeVec operator-() const;
    LatticeVec scaled(const Int& factor) const;

private:
    std::vector<Int> coords_;
};

// A point of M (x) Q, the dual side.
class DualVec {
public:
    DualVec() = default;
    explicit DualVec(std::size_t dim) : coords_(dim) {}
    explicit DualVec(std::vector<Rat> coords) : coords_(std::move(coords)) {}
    DualVec(std::initializer_list<Rat> coords) : coords_(coords) {}

    std::size_t dim() const noexcept { return coords_.size(); }
    const Rat& operator[](std::size_t i) const { return coords_[i]; }
    Rat& operator[](std::size_t i) { return coords_[i]; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }
    const std::vector<Rat>& coords() const noexcept { return coords_; }

    bool is_zero() const;

    friend bool operator==(const DualVec&, const DualVec&) = default;
    friend bool operator<(const DualVec& a, const DualVec& b) { return a.coords_ < b.coords_; }

    DualVec operator+(const DualVec& other) const;
    DualVec operator-(const DualVec& other) const;
    DualVec operator*(const Rat& factor) const;

private:
    std::vector<Rat> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVec& v);
std::ostream& operator<<(std::ostream& os, const DualVec& v);

DualVec to_dual(const LatticeVec& v);

// <u, v> pairing between M (x) Q and N.
Rat pairing(const DualVec& u, const LatticeVec& v);
Rat dot(const DualVec& a, const DualVec& b);

// Throws if the two dimensions differ; mixed-dimension arithmetic is a bug.
void require_same_dim(std::size_t a, std::size_t b, const char* where);

using RatMatrix = std::vector<std::vector<Rat>>;

// v / gcd(v). Throws math error "zero vector has no direction" for v = 0.
LatticeVec primitivize(const LatticeVec& v);

// Exact solution of A x = b. Throws math error "singular system" when det A = 0.
std::vector<Rat> solve_linear(RatMatrix A, std::vector<Rat> b);

Rat determinant(RatMatrix A);
std::size_t matrix_rank(RatMatrix A);

// Coefficients a_i with w = sum a_i g_i for a simplicial cone.
// std::nullopt means "outside" (some coefficient is negative).
// Throws math error "non-simplicial cone" when the generators are dependent.
std::optional<std::vector<Rat>> cone_coordinates(const LatticeVec& w,
                                                 std::span<const LatticeVec> generators);

// Affine dimension of a finite point set (-1 for the empty set).
int affine_dimension(std::span<const DualVec> points);

}  // namespace tks
