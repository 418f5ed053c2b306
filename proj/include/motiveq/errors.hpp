// SPDX-License-Identifier: MIT
/**
 * @file errors.hpp
 * @brief Exception hierarchy. Every error carries a stable machine-readable
 *        name so the CLI can emit single-line diagnostics.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace motiveq {

/// Base class of all library errors. `name()` is stable across releases.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define MOTIVEQ_DEFINE_ERROR(Name)                                     \
    struct Name : Error {                                              \
        explicit Name(const std::string& w) : Error(#Name, w) {}       \
    }

MOTIVEQ_DEFINE_ERROR(DivisionByZero);        // rational or rational-function division by zero
MOTIVEQ_DEFINE_ERROR(GroupMismatch);         // operands live over incompatible cyclic groups
MOTIVEQ_DEFINE_ERROR(ZeroPivot);             // division algorithm hit a vanishing pivot
MOTIVEQ_DEFINE_ERROR(InternalInconsistency); // re-multiplication or canonical-form check failed
MOTIVEQ_DEFINE_ERROR(NonIntegerInput);       // Per applied to non integer-polynomial coefficients
MOTIVEQ_DEFINE_ERROR(NotPrime);              // prime-index closed form with composite index
MOTIVEQ_DEFINE_ERROR(TowerMismatch);         // towers with different base order or extension index
MOTIVEQ_DEFINE_ERROR(ProfileTooLarge);       // rank-profile family enumeration beyond the cap
MOTIVEQ_DEFINE_ERROR(InvalidProfile);        // rank-profile invariants violated
MOTIVEQ_DEFINE_ERROR(TooLarge);              // brute-force enumeration beyond its bound
MOTIVEQ_DEFINE_ERROR(InvalidKnot);           // torus knot parameters with gcd(n,m) != 1
MOTIVEQ_DEFINE_ERROR(UnsupportedRank);       // pipeline rank outside 1..4
MOTIVEQ_DEFINE_ERROR(MissingBaseline);       // rank-4 absolute output without a baseline file
MOTIVEQ_DEFINE_ERROR(ParseError);            // malformed polynomial/expression/JSON input

#undef MOTIVEQ_DEFINE_ERROR

} // namespace motiveq
