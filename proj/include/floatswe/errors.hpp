#pragma once

// Error taxonomy shared by all modules. Every admissibility guard throws a
// typed error instead of clamping; the CLI serializes the kind to JSON on
// stderr and maps it to an exit code.

#include <stdexcept>
#include <string>

namespace floatswe {

enum class ErrorKind {
  NonPositiveParameter,
  InvalidGrid,
  DryState,
  NotSubsonic,
  NonPositiveRadius,
  NoWallSolution,
  BottomContact,
  IncompatibleData,
  NonContracting,
  CouplingDiverged,
  ConfigError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct NonPositiveParameter final : Error {
  explicit NonPositiveParameter(const std::string& field_name)
      : Error(ErrorKind::NonPositiveParameter,
              "non-positive parameter: " + field_name),
        field(field_name) {}
  std::string field;
};

struct InvalidGrid final : Error {
  explicit InvalidGrid(const std::string& message)
      : Error(ErrorKind::InvalidGrid, message) {}
};

struct DryState final : Error {
  explicit DryState(const std::string& message, int cell_index = -1)
      : Error(ErrorKind::DryState, message), cell(cell_index) {}
  int cell;
};

struct NotSubsonic final : Error {
  NotSubsonic(const std::string& message, double margin_value,
              int cell_index = -1)
      : Error(ErrorKind::NotSubsonic, message),
        margin(margin_value),
        cell(cell_index) {}
  double margin;
  int cell;
};

struct NonPositiveRadius final : Error {
  explicit NonPositiveRadius(double r)
      : Error(ErrorKind::NonPositiveRadius,
              "radius must be positive, got " + std::to_string(r)) {}
};

struct NoWallSolution final : Error {
  NoWallSolution(const std::string& message, double lo, double hi)
      : Error(ErrorKind::NoWallSolution, message),
        bracket_lo(lo),
        bracket_hi(hi) {}
  double bracket_lo;
  double bracket_hi;
};

struct BottomContact final : Error {
  explicit BottomContact(const std::string& message)
      : Error(ErrorKind::BottomContact, message) {}
};

struct IncompatibleData final : Error {
  IncompatibleData(const std::string& message, double residual_value)
      : Error(ErrorKind::IncompatibleData, message), residual(residual_value) {}
  double residual;
};

struct NonContracting final : Error {
  explicit NonContracting(const std::string& message)
      : Error(ErrorKind::NonContracting, message) {}
};

struct CouplingDiverged final : Error {
  explicit CouplingDiverged(const std::string& message)
      : Error(ErrorKind::CouplingDiverged, message) {}
};

struct ConfigError final : Error {
  ConfigError(const std::string& key_path, const std::string& reason)
      : Error(ErrorKind::ConfigError, "config error at '" + key_path + "': " + reason),
        key(key_path) {}
  std::string key;
};

}  // namespace floatswe
