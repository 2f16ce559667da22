#pragma once
#include <stdexcept>
#include <string>

namespace borderlab {

enum class ErrorKind {
  NonConvergence,
  NonUniqueProjection,
  OutsideTube,
  OutsideDomain,
  BadTube,
  StepUnderflow,
  NonFinite,
  UnknownExample,
  OutOfRange,
  EmptyTube,
  BoundedZeta,
  TubeTooSmall,
  BadRow,
  JumpStorm,
  UnknownMode,
  ConfigError,
  NumericError,
  IOFailure,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NonUniqueProjection: return "NonUniqueProjection";
    case ErrorKind::OutsideTube: return "OutsideTube";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::BadTube: return "BadTube";
    case ErrorKind::StepUnderflow: return "StepUnderflow";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::UnknownExample: return "UnknownExample";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::EmptyTube: return "EmptyTube";
    case ErrorKind::BoundedZeta: return "BoundedZeta";
    case ErrorKind::TubeTooSmall: return "TubeTooSmall";
    case ErrorKind::BadRow: return "BadRow";
    case ErrorKind::JumpStorm: return "JumpStorm";
    case ErrorKind::UnknownMode: return "UnknownMode";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::NumericError: return "NumericError";
    case ErrorKind::IOFailure: return "IOFailure";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace borderlab
