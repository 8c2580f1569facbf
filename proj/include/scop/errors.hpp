#pragma once

#include <stdexcept>
#include <string>

namespace scop {

// Base class for all library errors. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An id that does not name a state, context, property or lattice element.
class IdentifierError : public Error {
 public:
  using Error::Error;
};

// A request that is well-formed but has no defined answer (e.g. applying
// the zero context, ranking a state that carries no frequency data).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed construction input (duplicate ids, inconsistent tables, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// Character-level parse failure; the message carries the location.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally broken table (ragged rows, duplicates, empty stream).
class StructureError : public Error {
 public:
  using Error::Error;
};

// A column whose entries sum to zero cannot be normalized.
class DegenerateColumnError : public Error {
 public:
  using Error::Error;
};

}  // namespace scop
