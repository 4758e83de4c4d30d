#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epimc {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: unknown agents or worlds, invalid models, bad QBF files.
class InputError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// `D{} p`: distributed knowledge needs a non-empty group.
class EmptyGroupError : public SyntaxError {
 public:
  explicit EmptyGroupError(std::size_t position)
      : SyntaxError("empty group under D", position) {}
};

// A formula uses a construct the called procedure does not handle.
class UnsupportedFragment : public Error {
 public:
  using Error::Error;
};

// An update would leave a model without worlds.
class EmptyDomainError : public Error {
 public:
  using Error::Error;
};

// distinguishing_formula called on bisimilar worlds.
class NoDistinguisher : public Error {
 public:
  using Error::Error;
};

// characteristic_topic called on a set that is not a union of classes.
class ClosureError : public Error {
 public:
  using Error::Error;
};

}  // namespace epimc
