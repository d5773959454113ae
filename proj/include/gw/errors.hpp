#pragma once

#include <stdexcept>
#include <string>

namespace gw {

enum class ErrorCode {
  Validation,
  NoRootFound,
  MultipleRoots,
  DamageOutsidePlate,
  LengthMismatch,
  DimensionMismatch,
  DegenerateData,
  SingleCluster,
  DegenerateEnvelope,
  ZeroEnergyWindow,
  ZeroEnergyBand,
  ZeroVarianceWindow,
  EmptyClass,
  CoincidentSensors,
  EmptySdcTable,
  WindowOutsideRecord,
  MissingArtifact,
  StageFailure,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Validation: return "Validation";
    case ErrorCode::NoRootFound: return "NoRootFound";
    case ErrorCode::MultipleRoots: return "MultipleRoots";
    case ErrorCode::DamageOutsidePlate: return "DamageOutsidePlate";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateData: return "DegenerateData";
    case ErrorCode::SingleCluster: return "SingleCluster";
    case ErrorCode::DegenerateEnvelope: return "DegenerateEnvelope";
    case ErrorCode::ZeroEnergyWindow: return "ZeroEnergyWindow";
    case ErrorCode::ZeroEnergyBand: return "ZeroEnergyBand";
    case ErrorCode::ZeroVarianceWindow: return "ZeroVarianceWindow";
    case ErrorCode::EmptyClass: return "EmptyClass";
    case ErrorCode::CoincidentSensors: return "CoincidentSensors";
    case ErrorCode::EmptySdcTable: return "EmptySdcTable";
    case ErrorCode::WindowOutsideRecord: return "WindowOutsideRecord";
    case ErrorCode::MissingArtifact: return "MissingArtifact";
    case ErrorCode::StageFailure: return "StageFailure";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace gw
