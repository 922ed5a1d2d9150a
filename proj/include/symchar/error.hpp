#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symchar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed partition, permutation or rational text. position() is the
// 0-based offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Arguments that are well-formed but violate a precondition (degree
// mismatch, k > n, index out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Full enumeration of S(k) requested beyond the configured degree cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Denominator determinant of the shifted Schur ratio vanished.
class SingularDenominator : public Error {
 public:
  using Error::Error;
};

}  // namespace symchar
