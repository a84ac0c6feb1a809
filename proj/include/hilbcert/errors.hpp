#pragma once

#include <stdexcept>
#include <string>

namespace hilbcert {

// Malformed shapes: non-square matrices, n below the allowed minimum.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Exponent vectors whose total degree is not the one an integral expects.
class DegreeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Inputs outside an operation's domain (non-square-free where required,
// mismatched polarizations, unsupported polarization types, ...).
class ParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// An enumeration was asked to visit more elements than its cap allows.
class ResourceLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Raised when a value that was validated on construction turns out to be
// inconsistent; signals corrupted input or a bug, never a user error.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace hilbcert
