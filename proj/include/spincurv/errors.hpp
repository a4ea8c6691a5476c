// spincurv — error taxonomy shared by all modules.

#pragma once

#include <stdexcept>
#include <string>

namespace spincurv {

// Bad scenario/CLI configuration (maps to exit code 2 in the CLI).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation could not be evaluated (singular metric, coordinate
// singularity, non-finite intermediate, ...). Carries the offending point
// in the message.
struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural misuse of an operation (slot/primedness mismatch, missing
// metadata, insufficient jet order).
struct UsageError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace spincurv
