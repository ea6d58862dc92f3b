#ifndef HYPCAT_ERRORS_HPP
#define HYPCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypcat {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CodomainMismatch : Error {
  using Error::Error;
};
struct UnknownLabel : Error {
  using Error::Error;
};
struct IllTyped : Error {
  using Error::Error;
};
struct BoundaryMismatch : Error {
  using Error::Error;
};
struct SyntaxError : Error {
  using Error::Error;
};
struct UnknownBox : Error {
  using Error::Error;
};
struct UnboundBox : Error {
  using Error::Error;
};
struct TypeMismatch : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct JsonError : Error {
  using Error::Error;
};

}  // namespace hypcat

#endif
