#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace da1 {

/// Base class for all library errors that carry a stable machine-readable
/// kind.  The CLI maps kind() straight into its JSON error report.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* kind() const { return "Error"; }
};

/// Lexing/parsing failure: byte offset into the input plus the set of
/// token descriptions that would have been accepted there.
class parse_error : public error {
public:
    parse_error(std::size_t offset, std::vector<std::string> expected,
                const std::string& what)
        : error(what), offset_(offset), expected_(std::move(expected)) {}

    const char* kind() const override { return "ParseError"; }
    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Retraction identity was asked for a flank that is not invariant.
class non_invariant_flank : public error {
public:
    explicit non_invariant_flank(const std::string& what) : error(what) {}
    const char* kind() const override { return "NonInvariantFlank"; }
};

/// A factorization step needed roots outside the rationals.
class unsupported_factorization : public error {
public:
    explicit unsupported_factorization(const std::string& what) : error(what) {}
    const char* kind() const override { return "UnsupportedFactorization"; }
};

/// Permutation input that is not a valid cycle decomposition.
class invalid_permutation : public error {
public:
    explicit invalid_permutation(const std::string& what) : error(what) {}
    const char* kind() const override { return "InvalidPermutation"; }
};

/// The function part of a filtered algebra fails the shape expected by the
/// classification (smallest nonconstant element not a shifted pure power).
class inconsistent_base : public error {
public:
    inconsistent_base(Poly witness, const std::string& what)
        : error(what), witness_(std::move(witness)) {}

    const char* kind() const override { return "InconsistentBase"; }
    const Poly& witness() const { return witness_; }

private:
    Poly witness_;
};

} // namespace da1
