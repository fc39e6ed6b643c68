#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace argclinic {

enum class ErrorKind {
  // framework validation
  FlatnessViolation,
  DanglingPreference,
  DanglingContrary,
  ContraryConflict,
  TooManyAssumptions,
  SizeLimitExceeded,
  UnknownAssumption,
  // goals
  GoalWithoutRule,
  PriorityNotTotal,
  PriorityMentionsNonGoal,
  // recommendation model
  EmptyTracks,
  DsOutOfRange,
  UnknownLandmark,
  UnknownRecommendation,
  IncompatibleState,
  IncompatibleGoal,
  PreferenceOverUnknownRec,
  AmbiguousActionPreference,
  IncompatibleContext,
  OrientationError,
  SymbolClash,
  // input
  SchemaError,
  DuplicateName,
  ParseError,
  OracleSizeExceeded,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FlatnessViolation: return "FlatnessViolation";
    case ErrorKind::DanglingPreference: return "DanglingPreference";
    case ErrorKind::DanglingContrary: return "DanglingContrary";
    case ErrorKind::ContraryConflict: return "ContraryConflict";
    case ErrorKind::TooManyAssumptions: return "TooManyAssumptions";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::UnknownAssumption: return "UnknownAssumption";
    case ErrorKind::GoalWithoutRule: return "GoalWithoutRule";
    case ErrorKind::PriorityNotTotal: return "PriorityNotTotal";
    case ErrorKind::PriorityMentionsNonGoal: return "PriorityMentionsNonGoal";
    case ErrorKind::EmptyTracks: return "EmptyTracks";
    case ErrorKind::DsOutOfRange: return "DsOutOfRange";
    case ErrorKind::UnknownLandmark: return "UnknownLandmark";
    case ErrorKind::UnknownRecommendation: return "UnknownRecommendation";
    case ErrorKind::IncompatibleState: return "IncompatibleState";
    case ErrorKind::IncompatibleGoal: return "IncompatibleGoal";
    case ErrorKind::PreferenceOverUnknownRec: return "PreferenceOverUnknownRec";
    case ErrorKind::AmbiguousActionPreference: return "AmbiguousActionPreference";
    case ErrorKind::IncompatibleContext: return "IncompatibleContext";
    case ErrorKind::OrientationError: return "OrientationError";
    case ErrorKind::SymbolClash: return "SymbolClash";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::OracleSizeExceeded: return "OracleSizeExceeded";
  }
  return "Unknown";
}

// Base of every error the library raises. `kind` identifies the failure,
// `path` optionally locates it in the input (JSON pointer for bundles).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string path = {})
      : std::runtime_error(compose(kind, message, path)),
        kind_(kind),
        detail_(message),
        path_(std::move(path)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::string& path() const noexcept { return path_; }

 private:
  static std::string compose(ErrorKind kind, const std::string& message,
                             const std::string& path) {
    std::string out(to_string(kind));
    if (!path.empty()) out += " at " + path;
    out += ": " + message;
    return out;
  }

  ErrorKind kind_;
  std::string detail_;
  std::string path_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& expected)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": expected " + expected),
        line_(line),
        column_(column),
        expected_(expected) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

}  // namespace argclinic
