#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffop {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHomogeneousError : public Error {
 public:
  using Error::Error;
};

class DegreeTooSmallError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class NotDivisibleError : public Error {
 public:
  using Error::Error;
};

// h is not of the form var*q modulo f.
class NotDivisibleModFError : public Error {
 public:
  using Error::Error;
};

// The variable divides f, so division by it mod f is ill-posed.
class DegenerateFormError : public Error {
 public:
  using Error::Error;
};

class NotIsolatedError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class OrderTooHighError : public Error {
 public:
  using Error::Error;
};

class ComplexCheckError : public Error {
 public:
  using Error::Error;
};

class ChainMapCheckError : public Error {
 public:
  using Error::Error;
};

class MinimalityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace diffop
