#ifndef MONTYPE_ERRORS_HPP
#define MONTYPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace montype {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Vectors or ideals of mismatched ambient dimension.
class DimensionMismatchError : public Error {
  public:
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

/// An operation was called outside its stated precondition
/// (zero/unit ideal, non-m-primary input, k = 0, ...).
class PreconditionError : public Error {
  public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Malformed input file or expression.
class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Random coefficient draws kept degenerating (never expected on
/// monomial input; bounded-retry escape hatch for the polynomial path).
class GenericityError : public Error {
  public:
    explicit GenericityError(const std::string& what) : Error(what) {}
};

/// A verification that is backed by a proved theorem came out false.
/// This always indicates an implementation bug, never a result.
class TheoremViolationError : public Error {
  public:
    explicit TheoremViolationError(const std::string& what) : Error(what) {}
};

/// Internal consistency check failed (solver returned an infeasible
/// witness, a report invariant broke, ...).
class InternalError : public Error {
  public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace montype

#endif
