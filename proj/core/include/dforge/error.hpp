#pragma once

#include <stdexcept>
#include <string>

namespace dforge {

/// Malformed text, inconsistent degrees, violated preconditions.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A passport whose partitions cannot occur for any dessin (parity, negative genus).
class InvalidPassport : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

/// An exhaustive computation that would exceed its configured size guard.
class InfeasibleSize : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Something that is mathematically impossible happened (e.g. a counting
/// formula produced a non-integer). Always a bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace dforge
