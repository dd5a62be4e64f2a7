#pragma once

#include <stdexcept>
#include <string>

namespace dk {

/// Base of every exception the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes, degrees, or indices that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic between elements of different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// A structural law (d∘d = 0, simplicial identity, closure, ...) is violated.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input: scalars, words, documents.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Outcome of a report-valued check. A failing report always carries a witness.
struct Report {
  bool ok = true;
  std::string witness;

  static Report pass() { return {}; }
  static Report fail(std::string w) { return {false, std::move(w)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace dk
