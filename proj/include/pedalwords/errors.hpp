#pragma once

#include <stdexcept>

namespace pedalwords {

// Base of every error this library raises. The CLI maps subclasses onto its
// exit-code taxonomy: format/usage problems exit 2, domain rejections exit 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input: words, triples, records, fixture files.
struct FormatError : Error {
  using Error::Error;
};

// Argument outside a function's mathematical domain.
struct DomainError : Error {
  using Error::Error;
};

// Mismatched dimensions in two-dimensional concatenation.
struct DimensionError : Error {
  using Error::Error;
};

// Empty word where a nonempty one is required.
struct EmptyWordError : Error {
  using Error::Error;
};

// Right triangle (a = 1/2): the pedal construction collapses to a segment.
struct DegenerateError : Error {
  using Error::Error;
};

// Triple does not return to itself after the requested number of steps.
struct NotPeriodicError : Error {
  using Error::Error;
};

// Word outside the bijection's domain (not primitive, or an excluded form).
struct NotInDomainError : Error {
  using Error::Error;
};

// The following three signal implementation faults, not bad data.
struct PostconditionError : Error {
  using Error::Error;
};

struct ContractionViolation : Error {
  using Error::Error;
};

struct BijectionViolation : Error {
  using Error::Error;
};

}  // namespace pedalwords
