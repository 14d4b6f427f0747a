#pragma once

#include <stdexcept>

namespace flaggraph {

// Raised when arguments fall outside an operation's declared domain
// (invalid type vectors, regime violations, out-of-range parameters).
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a construction or search exceeds its configured budget
// (vertex caps, search-tree node limits).
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace flaggraph
