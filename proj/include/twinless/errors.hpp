#pragma once

#include <stdexcept>
#include <string>

namespace twinless {

// Malformed or out-of-range input (bad edge list, unknown fixture, ...).
// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was invoked on a graph that violates its contract
// (e.g. asking for articulation points of a graph that is not strongly
// connected). The CLI maps this to exit code 3.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed. Always a bug; surfaced loudly instead of
// producing silently wrong output.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace twinless
