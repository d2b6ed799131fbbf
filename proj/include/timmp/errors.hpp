#pragma once

#include <stdexcept>
#include <string>

namespace timmp {

/// Input violates a documented precondition (malformed topology, arc out of
/// range, bad matrix parameters, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact exponential-time routine refused an input larger than its guard.
class SizeGuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Reading or writing a file failed; the message carries the path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An invariant that should be impossible to violate was violated.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

void require_size(bool ok, const std::string& operation, const std::string& limit);

}  // namespace timmp
