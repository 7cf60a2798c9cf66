#pragma once

#include <stdexcept>
#include <string>

namespace tropos {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// A brute-force enumeration was asked to exceed its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class InfiniteEntry : public Error {
 public:
  using Error::Error;
};

class InconsistentData : public Error {
 public:
  using Error::Error;
};

class NotMonge : public Error {
 public:
  using Error::Error;
};

class NegativeCoefficient : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class NotTN : public Error {
 public:
  using Error::Error;
};

class NotTP : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class SingularPermanent : public Error {
 public:
  using Error::Error;
};

// The product of computed factors did not reproduce the input. Never expected.
class FactorizationMismatch : public Error {
 public:
  using Error::Error;
};

class MalformedVector : public Error {
 public:
  using Error::Error;
};

class InvalidNetwork : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tropos
