#pragma once

#include <stdexcept>
#include <string>

namespace charlattice {

/// Base of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A (family, rank) pair that names no Cartan type.
struct InvalidTypeError : Error {
  using Error::Error;
};

/// Vectors, weights or multisets living in incompatible spaces.
struct DimensionMismatchError : Error {
  using Error::Error;
};

/// A configured size bound would be exceeded.
struct ResourceLimitError : Error {
  using Error::Error;
};

/// The character-induced form is singular (some factor acts trivially).
struct DegenerateFormError : Error {
  using Error::Error;
};

/// An operation was called outside its documented domain.
struct PreconditionError : Error {
  using Error::Error;
};

/// Malformed textual input.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace charlattice
