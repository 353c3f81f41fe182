#pragma once

#include <stdexcept>
#include <string>

namespace zs {

/// Precondition violated by the caller (bad size, out-of-domain argument, grid mismatch).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A computation produced non-finite values or could not reach its tolerance.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// File could not be read, parsed or written.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace zs
