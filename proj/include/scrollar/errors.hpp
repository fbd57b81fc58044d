#pragma once

#include <stdexcept>
#include <string>

namespace scrollar {

// Malformed or out-of-hypothesis input. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal invariant failed (a bug, or a model the algorithms do not
// cover). The CLI maps this to exit code 3.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace scrollar
