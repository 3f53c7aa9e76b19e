#pragma once

#include <stdexcept>
#include <string>

namespace wittk {

/// Base class for everything this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A word operation received the empty word.
struct EmptyWordError : Error {
  using Error::Error;
};

/// The block size does not divide the word length.
struct BlockMismatchError : Error {
  using Error::Error;
};

/// A map v_a^b was requested with b not dividing a.
struct DivisibilityError : Error {
  using Error::Error;
};

/// Two Witt vectors with different truncation sets or coefficient rings.
struct IncompatibleOperandsError : Error {
  using Error::Error;
};

/// A Witt vector does not live over the expected truncation set.
struct TruncationMismatchError : Error {
  using Error::Error;
};

/// Teichmuller lift requested over a truncation set without the element 1.
struct MissingUnitError : Error {
  using Error::Error;
};

/// A modulus that was required to be prime is not.
struct NotPrimeError : Error {
  using Error::Error;
};

/// An argument is outside the domain of the operation.
struct ParameterError : Error {
  using Error::Error;
};

/// An exact-division assertion inside universal Witt arithmetic failed.
/// This always indicates an implementation bug, never bad user input.
struct IntegralityError : Error {
  using Error::Error;
};

}  // namespace wittk
