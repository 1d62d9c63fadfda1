#include "floatswe/errors.hpp"

namespace floatswe {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorKind::InvalidGrid: return "InvalidGrid";
    case ErrorKind::DryState: return "DryState";
    case ErrorKind::NotSubsonic: return "NotSubsonic";
    case ErrorKind::NonPositiveRadius: return "NonPositiveRadius";
    case ErrorKind::NoWallSolution: return "NoWallSolution";
    case ErrorKind::BottomContact: return "BottomContact";
    case ErrorKind::IncompatibleData: return "IncompatibleData";
    case ErrorKind::NonContracting: return "NonContracting";
    case ErrorKind::CouplingDiverged: return "CouplingDiverged";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Error";
}

}  // namespace floatswe
