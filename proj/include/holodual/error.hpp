#pragma once

#include <stdexcept>
#include <string>

namespace holodual {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// Relation matrix presents an infinite group.
struct InfiniteCokernel : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct LevelOutOfRange : Error {
    using Error::Error;
};

struct NotPrime : Error {
    using Error::Error;
};

struct BadDepth : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

/// A tower violates its transition invariant (injectivity/surjectivity/morphism law).
struct InvalidTower : ValidationError {
    using ValidationError::ValidationError;
};

/// A Hopf-algebra operation required axioms that do not hold.
struct AxiomFailure : Error {
    using Error::Error;
};

/// The Arens-Michael envelope guard: the object carries no provenance tag.
struct UnknownProvenance : Error {
    using Error::Error;
};

struct NonAbelian : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace holodual
