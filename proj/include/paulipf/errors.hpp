#pragma once

#include <stdexcept>
#include <string>

namespace paulipf {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// -- linear algebra --------------------------------------------------------

struct DimensionMismatch : Error {
  using Error::Error;
};

/// A Kronecker product (or similar construction) would exceed the 8x8 cap.
struct DimensionOverflow : Error {
  using Error::Error;
};

struct OverflowError : Error {
  using Error::Error;
};

struct NotHermitian : Error {
  using Error::Error;
};

struct NotPositiveDefinite : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

/// Exact-arithmetic intermediate exceeded the 64-bit rational range.
struct ExactOverflow : Error {
  using Error::Error;
};

// -- Pauli algebra ----------------------------------------------------------

struct QubitMismatch : Error {
  using Error::Error;
};

/// The matrix is not i^p times a tensor word of Pauli letters.
struct NotPauli : Error {
  using Error::Error;
};

struct NotSubgroup : Error {
  using Error::Error;
};

// -- pseudofermions / X basis ------------------------------------------------

/// Parameters sit at (or past) the exceptional point |omega| <= |delta|.
struct DegenerateParams : Error {
  using Error::Error;
};

struct NormalizationFailure : Error {
  using Error::Error;
};

struct CrossCheckFailure : Error {
  using Error::Error;
};

struct WrongParameterPoint : Error {
  using Error::Error;
};

struct NonGaussianEntries : Error {
  using Error::Error;
};

// -- circuits / IO ------------------------------------------------------------

struct GridTooCoarse : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace paulipf
