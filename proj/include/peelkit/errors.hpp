#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace peelkit {

/// Malformed or out-of-contract input (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point set that is not in general position. Carries the offending
/// subset as indices into the input ordering.
class DegenerateError : public InputError {
 public:
  DegenerateError(const std::string& what, std::vector<std::size_t> subset)
      : InputError(what), subset_(std::move(subset)) {}

  const std::vector<std::size_t>& subset() const { return subset_; }

 private:
  std::vector<std::size_t> subset_;
};

/// A configured resource cap was hit (CLI exit code 3).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generated object failed its own post-verification (CLI exit code 1).
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace peelkit
