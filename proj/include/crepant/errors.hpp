#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace crepant {

/// A precondition on the mathematical input failed (n out of range, a
/// discrepancy that is not log-terminal, a zero divisor).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal identity that must hold did not. Raised when a formula
/// produces a value that contradicts a checked invariant; `stage` names the
/// computation that tripped.
class InvariantViolation : public std::logic_error {
public:
    InvariantViolation(std::string stage, const std::string& what)
        : std::logic_error(stage + ": " + what), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

/// Malformed external input. `pointer` is a JSON pointer to the offending
/// field, or empty when the whole document is at fault.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string pointer, const std::string& what)
        : std::runtime_error(pointer.empty() ? what : pointer + ": " + what),
          pointer_(std::move(pointer)) {}

    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

inline void check_invariant(bool ok, const char* stage, const std::string& what) {
    if (!ok) throw InvariantViolation(stage, what);
}

}  // namespace crepant
