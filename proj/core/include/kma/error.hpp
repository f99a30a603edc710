#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kma {

enum class ErrorCode {
  NotGCM,
  NotSymmetrizable,
  Decomposable,
  NotSymmetric,
  DimensionMismatch,
  IndexOutOfRange,
  MixedSignCoefficients,
  NotRealRoot,
  NotRank2,
  BasisMismatch,
  OutsideClosedCone,
  NonTermination,
  DifferentSheets,
  NotOnSheet,
  NotLorentzian,
  SliceMismatch,
  NonFinite,
  UnsupportedRank,
  NotOnSimplex,
  SolverDiverged,
  SignMismatch,
  UnrepresentableEnd,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Structured failure carried by every library operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotGCM: return "NotGCM";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::Decomposable: return "Decomposable";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MixedSignCoefficients: return "MixedSignCoefficients";
    case ErrorCode::NotRealRoot: return "NotRealRoot";
    case ErrorCode::NotRank2: return "NotRank2";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::OutsideClosedCone: return "OutsideClosedCone";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::DifferentSheets: return "DifferentSheets";
    case ErrorCode::NotOnSheet: return "NotOnSheet";
    case ErrorCode::NotLorentzian: return "NotLorentzian";
    case ErrorCode::SliceMismatch: return "SliceMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::NotOnSimplex: return "NotOnSimplex";
    case ErrorCode::SolverDiverged: return "SolverDiverged";
    case ErrorCode::SignMismatch: return "SignMismatch";
    case ErrorCode::UnrepresentableEnd: return "UnrepresentableEnd";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace kma
