#pragma once

#include <stdexcept>
#include <string>

namespace elkies {

// One error taxonomy for the whole library. The code tells callers (and the
// CLI exit-code mapping) what happened; the message carries specifics.
enum class ErrorCode {
    ContextMismatch,
    NonUnit,
    NotDivisible,
    NotASquare,
    SingularRoot,
    BadInitialConditions,
    UnsupportedShape,
    NotAPerfectSquare,
    ReconstructionFailed,
    OddnessViolated,
    SingularCurve,
    SpecialJ,
    AtkinPrime,
    DoubleRoot,
    MissingEll,
    ParseError,
    ValidationError,
    VerificationFailed,
    PointNotOnCurve,
    UsageError,
    Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

    ErrorCode code() const { return code_; }

    // Pipeline stage annotation, empty outside the pipeline.
    const std::string& stage() const { return stage_; }
    void set_stage(std::string s) { stage_ = std::move(s); }

  private:
    ErrorCode code_;
    std::string stage_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

} // namespace elkies
