#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sexa {

// Every failure raised by the library carries the name of the module it came from.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error(what), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

// Malformed text. `position` is a 1-based Unicode scalar index into the input.
class ParseError : public Error {
 public:
  ParseError(std::string module, const std::string& what, std::size_t position)
      : Error(std::move(module), what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class RangeError : public Error {
  using Error::Error;
};

class DomainError : public Error {
  using Error::Error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("exact-core", "division by zero") {}
};

class UnknownGlyph : public Error {
 public:
  UnknownGlyph(char32_t glyph, std::size_t position);

  char32_t glyph() const noexcept { return glyph_; }
  std::size_t position() const noexcept { return position_; }

 private:
  char32_t glyph_;
  std::size_t position_;
};

class ReconstructionError : public Error {
  using Error::Error;
};

class ConvergenceError : public Error {
  using Error::Error;
};

}  // namespace sexa
