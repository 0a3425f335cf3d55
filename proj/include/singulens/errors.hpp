#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace singulens {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position),
        detail_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

class InfiniteColength : public Error {
 public:
  InfiniteColength() : Error("infinite colength") {}
};

class DegreeCapExceeded : public Error {
 public:
  explicit DegreeCapExceeded(unsigned cap)
      : Error("degree cap " + std::to_string(cap) + " exceeded"), cap_(cap) {}
  unsigned cap() const noexcept { return cap_; }

 private:
  unsigned cap_;
};

/// A documented precondition of an algorithm does not hold for the input.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace singulens
