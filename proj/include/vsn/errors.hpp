#pragma once

#include <stdexcept>
#include <string>

namespace vsn {

// Malformed inputs: bad construction arguments, unreadable scenario files,
// out-of-range operation arguments. Maps to CLI exit code 2.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Violated model precondition (e.g. Exponential optimization with p <= b).
// Maps to CLI exit code 4.
class precondition_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace vsn
