#pragma once

#include <stdexcept>
#include <string>

namespace ibcq {

// Input does not satisfy an operation's contract (bad shape, out-of-domain
// argument, malformed file). Mapped to CLI exit status 2.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside the function domain [0,1].
class DomainError : public ValidationError {
public:
  explicit DomainError(const std::string& what) : ValidationError(what) {}
};

// Observed data cannot come from any Lipschitz-L function.
class InfeasibleDataError : public ValidationError {
public:
  explicit InfeasibleDataError(const std::string& what) : ValidationError(what) {}
};

// An accuracy premise did not hold, e.g. no outcome cluster of width 2*eps
// carries mass 3/4. Mapped to CLI exit status 3.
class PremiseViolation : public std::runtime_error {
public:
  explicit PremiseViolation(const std::string& what) : std::runtime_error(what) {}
};

// A resource cap was exceeded (qubit count, brute-force subset size).
// Mapped to CLI exit status 4.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ibcq
