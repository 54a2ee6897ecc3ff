#ifndef WQM_ERRORS_HPP
#define WQM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wqm {

// Malformed user input: unknown symbols, out-of-range vertices, bad JSON.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A configured budget (ball radius cap, orbit budget, search cap) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A declared precondition failed a spot check (e.g. a map that must be
// symmetric or stable is not); carries the witness in the message.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural axiom of a user-supplied object is violated (e.g. a piece
// decomposition that cancels).
class AxiomViolation : public std::runtime_error {
 public:
  explicit AxiomViolation(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace wqm

#endif  // WQM_ERRORS_HPP
