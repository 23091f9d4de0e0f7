#pragma once

#include <stdexcept>
#include <string>

namespace cfc {

/// Malformed input data (duplicate points, out-of-range vertices, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter outside an operation's domain (t < 1, missing t, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive solver refused an instance above its declared limit.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied callback broke its contract.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cfc
