#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace smalldiv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- arithmetic ------------------------------------------------------------

struct NotInUnitInterval : Error {
    using Error::Error;
};

struct EmptyExpansion : Error {
    using Error::Error;
};

struct InsufficientDepth : Error {
    using Error::Error;
};

// Raised when a quotient schedule produces integers past the digit budget.
// `reached_depth` is the number of quotients that were materialized.
struct ScheduleOverflow : Error {
    int reached_depth;
    explicit ScheduleOverflow(int reached, const std::string& what)
        : Error(what), reached_depth(reached) {}
};

// -- series ----------------------------------------------------------------

struct RingMismatch : Error {
    using Error::Error;
};

struct TruncationTooShort : Error {
    using Error::Error;
};

struct InnerHasConstantTerm : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct TooFewCoefficients : Error {
    using Error::Error;
};

struct InversionFailure : Error {
    using Error::Error;
};

// -- linearization ----------------------------------------------------------

// A divisor vanished (exactly, or below the resonance tolerance) where the
// caller asked for an error. Carries the order and the (I, j) that hit it.
struct ResonantDivisor : Error {
    int order;
    std::vector<std::uint32_t> index;  // multi-index I (size 1 in dimension 1)
    int component;                     // j, 0-based
    ResonantDivisor(int ord, std::vector<std::uint32_t> idx, int comp, const std::string& what)
        : Error(what), order(ord), index(std::move(idx)), component(comp) {}
};

// Resonant order whose obstruction (the accumulated numerator) does not
// vanish: no formal linearization along the canonical convention.
struct ObstructionNonzero : Error {
    int order;
    std::vector<std::uint32_t> index;
    int component;
    ObstructionNonzero(int ord, std::vector<std::uint32_t> idx, int comp, const std::string& what)
        : Error(what), order(ord), index(std::move(idx)), component(comp) {}
};

struct ParamTrackingTooLarge : Error {
    using Error::Error;
};

// -- vector fields -----------------------------------------------------------

// A vanishing additive divisor not generated by the supplied lattice.
struct LatticeMismatch : Error {
    std::vector<std::uint32_t> index;
    int component;
    LatticeMismatch(std::vector<std::uint32_t> idx, int comp, const std::string& what)
        : Error(what), index(std::move(idx)), component(comp) {}
};

// -- capacity ----------------------------------------------------------------

struct TooFewPoints : Error {
    using Error::Error;
};

struct UnsupportedDomain : Error {
    using Error::Error;
};

// -- configuration ------------------------------------------------------------

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace smalldiv
