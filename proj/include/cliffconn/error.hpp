#pragma once

#include <stdexcept>
#include <string>

namespace cliffconn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Raised for algebra-level inputs that have no meaning, e.g. classifying
// the scalar algebra Cl(0,0).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace cliffconn
