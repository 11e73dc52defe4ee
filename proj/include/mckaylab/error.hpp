#pragma once

#include <stdexcept>
#include <string>

namespace mckaylab {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when a construction would exceed a configured size cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

// A computed object failed an identity it is required to satisfy.
class VerificationError : public Error {
public:
  using Error::Error;
};

} // namespace mckaylab
