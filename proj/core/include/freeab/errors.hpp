#pragma once

#include <stdexcept>
#include <string>

namespace freeab {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix or chain shapes that do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Operands defined over different base rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

// Right/left module bookkeeping disagrees.
class SideMismatch : public Error {
 public:
  using Error::Error;
};

// A morphism triple whose squares do not commute.
class InvalidMorphism : public Error {
 public:
  InvalidMorphism(std::string square, const std::string& detail)
      : Error(square + " does not commute: " + detail), square_(std::move(square)) {}

  const std::string& square() const noexcept { return square_; }

 private:
  std::string square_;
};

// The operation exists, but not for this input (e.g. enumerating an infinite module).
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace freeab
