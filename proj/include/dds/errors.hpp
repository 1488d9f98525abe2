#pragma once

#include <stdexcept>
#include <string>

namespace dds {

// Malformed input: bad files, out-of-range values, inconsistent domains.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size limit (bit table, state sweep, group order) was exceeded.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A checked mathematical invariant failed at run time.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dds
