#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cointkit {

enum class ErrorCode {
  NonPositiveValue,
  SeriesTooShort,
  NoCommonYears,
  YearGap,
  InvalidSeries,
  ShapeMismatch,
  RankDeficient,
  SingularCovariance,
  ZeroVariance,
  SingularMomentMatrix,
  RankOutOfRange,
  DimensionUnsupported,
  ZeroNormalizationCoefficient,
  UnstableSpec,
  FileNotFound,
  ParseError,
  MissingColumn,
  UnknownVariable,
  NotEnoughVariables,
  InvalidConfig,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveValue: return "NonPositiveValue";
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::NoCommonYears: return "NoCommonYears";
    case ErrorCode::YearGap: return "YearGap";
    case ErrorCode::InvalidSeries: return "InvalidSeries";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::SingularCovariance: return "SingularCovariance";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::SingularMomentMatrix: return "SingularMomentMatrix";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::ZeroNormalizationCoefficient: return "ZeroNormalizationCoefficient";
    case ErrorCode::UnstableSpec: return "UnstableSpec";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NotEnoughVariables: return "NotEnoughVariables";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `detail()` carries the offending
/// year or line number where one applies, otherwise 0.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, long detail = 0)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  long detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  long detail_;
};

}  // namespace cointkit
