#pragma once

#include <stdexcept>
#include <string>

namespace pmc {

/// Malformed input text (edge list, graph6, tree decomposition, matching file).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation's contract
/// (disconnected input, invalid two-coloring, edge set that is not a matching, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The instance is outside the class a solver is specified for.
struct WrongSolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The instance exceeds a configured size cap; the operation refuses
/// rather than silently degrading.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No solver applies to the instance.
struct UnsupportedClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structural guarantee the algorithms rely on failed at runtime;
/// indicates a bug, never a property of the input.
struct InternalInvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace pmc
