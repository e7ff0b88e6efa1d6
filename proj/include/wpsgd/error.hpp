#pragma once

#include <stdexcept>
#include <string>

namespace wpsgd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched vector/model dimensionality.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Invalid parameters, specs, or configuration files.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input text; message carries file and line context.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Non-finite values produced or encountered during training.
class NumericError : public Error {
 public:
  using Error::Error;
};

// A delay server rejected a full pass of its data without accepting a sample.
class NoAdmissibleSampleError : public Error {
 public:
  using Error::Error;
};

}  // namespace wpsgd
