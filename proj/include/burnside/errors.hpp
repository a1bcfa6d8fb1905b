#pragma once

#include <stdexcept>
#include <string>

namespace burnside {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input table fails a group axiom; the message carries a witness.
struct NotAGroup : Error {
  using Error::Error;
};

// A construction would exceed a configured resource cap.
struct TooLarge : Error {
  using Error::Error;
};

// Catalog name does not parse.
struct UnknownName : Error {
  using Error::Error;
};

// Images array is not a homomorphism.
struct InvalidHom : Error {
  using Error::Error;
};

// A map required to be injective is not.
struct NotInjective : Error {
  using Error::Error;
};

// A mark vector is not in the image of the mark homomorphism.
struct NotInImage : Error {
  NotInImage(const std::string& msg, int cls) : Error(msg), first_fractional_class(cls) {}
  int first_fractional_class;
};

// An action table violates the action axioms.
struct InvalidAction : Error {
  using Error::Error;
};

// Operands live over different groups (or incompatible biset spaces).
struct GroupMismatch : Error {
  using Error::Error;
};

// Malformed textual / JSON input.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace burnside
