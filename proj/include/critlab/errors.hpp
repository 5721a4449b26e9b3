#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace critlab {

// Base of every domain error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("graph6 parse error at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class NotAnEdgeError : public Error {
 public:
  using Error::Error;
};

// Raised by the heaviest_* queries when the requested structure does not exist.
class NoStructureError : public Error {
 public:
  using Error::Error;
};

// The exact solver hit its node ceiling; the answer is unknown, never guessed.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t budget, const std::string& context)
      : Error("solver node budget " + std::to_string(budget) + " exceeded" +
              (context.empty() ? std::string() : " (" + context + ")")),
        budget_(budget) {}

  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

// Enumeration or canonical labelling refused because the input is beyond the exact regime.
class ScaleLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace critlab
