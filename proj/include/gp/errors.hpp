#ifndef GP_ERRORS_HPP
#define GP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gp {

// Base class for all errors raised by the engine.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArithmeticOverflow : Error {
    using Error::Error;
};

struct NonPositiveLength : Error {
    using Error::Error;
};

struct LengthCountMismatch : Error {
    using Error::Error;
};

struct EmptyRange : Error {
    using Error::Error;
};

struct NotGeneric : Error {
    using Error::Error;
};

// The symbolic angle algebra left the coefficient range protected by the
// genericity condition; callers fall back to concrete arithmetic.
struct BoundExceeded : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct DiscontinuousInput : Error {
    using Error::Error;
};

struct DegreeTooLarge : Error {
    using Error::Error;
};

struct NonIntegralScale : Error {
    using Error::Error;
};

struct DiscretizationTooLarge : Error {
    using Error::Error;
};

struct OddGenus : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace gp

#endif // GP_ERRORS_HPP
