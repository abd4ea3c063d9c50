#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wroots {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two components of an approximation vector coincide.
class NonDistinct : public DomainError {
 public:
  NonDistinct(std::size_t i, std::size_t j)
      : DomainError("components " + std::to_string(i) + " and " + std::to_string(j) +
                    " coincide"),
        first_(i),
        second_(j) {}

  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// A scalar exceeded the admissible interval of a gauge or certification function.
class OutOfDomain : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class ParseErrorKind { MalformedJson, MalformedNumber, ZeroLeading, DegreeTooSmall, Schema };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ParseErrorKind kind() const { return kind_; }

 private:
  ParseErrorKind kind_;
};

}  // namespace wroots
