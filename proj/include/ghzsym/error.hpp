#pragma once

#include <stdexcept>
#include <string>

namespace ghzsym {

enum class Errc {
    NotHermitian,
    TraceNotOne,
    NotPositiveSemidefinite,
    NoConvergence,
    NotUnitNorm,
    InvalidSubsystem,
    OutsideTriangle,
    NoCrossing,
    AmbiguousCrossing,
    DegenerateWitness,
    LineCrossesUninteresting,
    SignConvention,
    TargetNotInClass,
    NoiseNotLower,
    InvalidArgument,
    IoFailure,
};

const char* errc_name(Errc code);

/// All library failures throw this; code() distinguishes validation
/// failures from domain failures (NoCrossing, AmbiguousCrossing).
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code) {}

    Errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

  private:
    Errc code_;
};

} // namespace ghzsym
