#pragma once

#include <stdexcept>
#include <string>

namespace hilbert {

enum class ErrorCode {
  NotInterior,
  DegenerateChord,
  NotCollinear,
  SingularTransform,
  ChartViolation,
  OutsideClosure,
  OutsideFace,
  ExtremalAnchor,
  BadRadii,
  BudgetExceeded,
  NotPreserving,
  EmptyLimitSet,
  HypothesisViolated,
  NotHyperbolicType,
  BadSpec,
  ConfigError,
  ComputeError,
};

/// All library failures throw this; the code keeps errors machine-matchable
/// so the CLI can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::DegenerateChord: return "DegenerateChord";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::SingularTransform: return "SingularTransform";
    case ErrorCode::ChartViolation: return "ChartViolation";
    case ErrorCode::OutsideClosure: return "OutsideClosure";
    case ErrorCode::OutsideFace: return "OutsideFace";
    case ErrorCode::ExtremalAnchor: return "ExtremalAnchor";
    case ErrorCode::BadRadii: return "BadRadii";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotPreserving: return "NotPreserving";
    case ErrorCode::EmptyLimitSet: return "EmptyLimitSet";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotHyperbolicType: return "NotHyperbolicType";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ComputeError: return "ComputeError";
  }
  return "Unknown";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(error_code_name(code)) + ": " + message);
}

}  // namespace hilbert
