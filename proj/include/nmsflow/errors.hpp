#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nmsflow {

/// Base class for every error raised by the library. `rule()` names the
/// violated precondition so front ends can report it verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string rule, const std::string& what)
      : std::runtime_error(what), rule_(std::move(rule)) {}

  const std::string& rule() const noexcept { return rule_; }

 private:
  std::string rule_;
};

class InvalidLensParameters : public Error {
 public:
  explicit InvalidLensParameters(const std::string& what)
      : Error("invalid-lens-parameters", what) {}
};

class InvalidFiber : public Error {
 public:
  explicit InvalidFiber(const std::string& what) : Error("invalid-fiber", what) {}
};

class NotALens : public Error {
 public:
  explicit NotALens(const std::string& what) : Error("not-a-lens", what) {}
};

class NonCoprime : public Error {
 public:
  explicit NonCoprime(const std::string& what) : Error("non-coprime", what) {}
};

/// Raised by flow-invariant validation. The rule is one of
/// "non-coprime-pair-1", "non-coprime-pair-2" or "malformed-inessential-marker".
class InvalidQuadruple : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("syntax", what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class Overflow : public Error {
 public:
  explicit Overflow(const std::string& what) : Error("overflow", what) {}
};

}  // namespace nmsflow
