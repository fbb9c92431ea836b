#pragma once

#include <stdexcept>
#include <string>

namespace zekit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotUnit : public Error {
 public:
  using Error::Error;
};

class SynthesisFailed : public Error {
 public:
  using Error::Error;
};

class ConstructionFailed : public Error {
 public:
  using Error::Error;
};

class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

class AngleSumMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionGuard : public Error {
 public:
  using Error::Error;
};

}  // namespace zekit
