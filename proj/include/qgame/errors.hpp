#ifndef QGAME_ERRORS_HPP
#define QGAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qgame {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Incompatible or out-of-range dimensions / basis indices.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An operation required a Hermitian matrix and did not get one.
class NotHermitianError : public Error {
public:
    using Error::Error;
};

/// Invalid game state (zero vector, not normalized, empty weights).
class StateError : public Error {
public:
    using Error::Error;
};

/// State support leaks onto the truncation boundary, so algebraic
/// guarantees (uncertainty bounds, conservation) are unreliable.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Requested space exceeds the dense-matrix capacity guard.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Invalid payoff coefficients (non-Hermitian matrix, bad sign value).
class CoefficientError : public Error {
public:
    using Error::Error;
};

/// Representation parameters outside the admissible set
/// (non-half-integer spin, non-unitarizable discrete series).
class RepresentationError : public Error {
public:
    using Error::Error;
};

/// A basis label or operator name failed to resolve.
class LabelError : public Error {
public:
    using Error::Error;
};

/// Scenario file rejected (syntax, unknown key, bad value).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace qgame

#endif
