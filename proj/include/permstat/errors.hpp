#ifndef PERMSTAT_ERRORS_HPP
#define PERMSTAT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permstat {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: malformed patterns, duplicate entries, out-of-range indices.
class InvalidInputError : public Error {
public:
  using Error::Error;
};

// Requested a functional-equation scheme for a pattern we have none for.
class NotRegisteredError : public InvalidInputError {
public:
  using InvalidInputError::InvalidInputError;
};

class InvalidMergeError : public InvalidInputError {
public:
  using InvalidInputError::InvalidInputError;
};

// A run exceeded its configured state/size budget. Carries how far it got so
// callers can report partial progress.
class CapacityError : public Error {
public:
  CapacityError(const std::string& what, int layer_reached, std::size_t largest_layer)
      : Error(what), layer_reached_(layer_reached), largest_layer_(largest_layer) {}
  explicit CapacityError(const std::string& what) : Error(what) {}

  int layer_reached() const { return layer_reached_; }
  std::size_t largest_layer_states() const { return largest_layer_; }

private:
  int layer_reached_ = -1;
  std::size_t largest_layer_ = 0;
};

class UndefinedPopulationError : public Error {
public:
  using Error::Error;
};

class DegenerateDistributionError : public Error {
public:
  using Error::Error;
};

// Engine output contradicted the brute-force oracle, or a verified fit failed
// to reproduce held-out values. Always a bug somewhere.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace permstat

#endif
