#pragma once

#include <stdexcept>
#include <string>

namespace tks {

// Error categories map one-to-one onto CLI exit codes (see tools/tks.cpp).
enum class ErrorKind {
    math,       // singular systems, zero vectors, degenerate input to a kernel
    parse,      // malformed FanSpec documents
    invariant,  // fan / polytope invariant violations
    budget,     // lattice enumeration budget exceeded
    io,         // unreadable input or unwritable output files
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline Error math_error(const std::string& what) { return {ErrorKind::math, what}; }
inline Error parse_error(const std::string& what) { return {ErrorKind::parse, what}; }
inline Error invariant_error(const std::string& what) { return {ErrorKind::invariant, what}; }
inline Error budget_error(const std::string& what) { return {ErrorKind::budget, what}; }
inline Error io_error(const std::string& what) { return {ErrorKind::io, what}; }

}  // namespace tks
