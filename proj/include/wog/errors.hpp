#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wog {

// Base for everything this library throws on bad input or exceeded limits.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed graph document or malformed constructor arguments.
struct ParseError : Error {
    using Error::Error;
};

// A size/complexity guard refused the operation (see Guard).
struct GuardError : Error {
    using Error::Error;
};

// An argument violates an operation's precondition (not a cover, wrong
// dimension, vertex out of range, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// The structural hypothesis of a theorem-backed check does not hold for
// the given graph; the answer would be meaningless, so we refuse.
struct HypothesisError : Error {
    using Error::Error;
};

// Non-fatal diagnostics (e.g. disconnected input to an analysis routine).
// Default handler writes to stderr; the CLI installs a collecting handler.
using WarningHandler = std::function<void(std::string_view)>;

void set_warning_handler(WarningHandler handler);  // empty handler restores default
void emit_warning(const std::string& message);

}  // namespace wog
