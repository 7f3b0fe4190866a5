#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jgap {

enum class Errc {
  kUnbounded,
  kInfeasible,
  kIterationLimit,
  kZeroDirection,
  kOriginNotInterior,
  kNonUnitOffsets,
  kNotInHull,
  kDimensionMismatch,
  kDimensionTooSmall,
  kDegenerateInput,
  kNotOrthogonal,
  kNotUnit,
  kBadRange,
  kMismatchedGround,
  kOutOfRegime,
  kFamilyNotFound,
  kDegenerateK,
  kStrategyUnavailable,
  kOracleRangeViolation,
  kUnverifiedCertificate,
  kNotInPolar,
  kParse,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kUnbounded: return "Unbounded";
    case Errc::kInfeasible: return "Infeasible";
    case Errc::kIterationLimit: return "IterationLimit";
    case Errc::kZeroDirection: return "ZeroDirection";
    case Errc::kOriginNotInterior: return "OriginNotInterior";
    case Errc::kNonUnitOffsets: return "NonUnitOffsets";
    case Errc::kNotInHull: return "NotInHull";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kDimensionTooSmall: return "DimensionTooSmall";
    case Errc::kDegenerateInput: return "DegenerateInput";
    case Errc::kNotOrthogonal: return "NotOrthogonal";
    case Errc::kNotUnit: return "NotUnit";
    case Errc::kBadRange: return "BadRange";
    case Errc::kMismatchedGround: return "MismatchedGround";
    case Errc::kOutOfRegime: return "OutOfRegime";
    case Errc::kFamilyNotFound: return "FamilyNotFound";
    case Errc::kDegenerateK: return "DegenerateK";
    case Errc::kStrategyUnavailable: return "StrategyUnavailable";
    case Errc::kOracleRangeViolation: return "OracleRangeViolation";
    case Errc::kUnverifiedCertificate: return "UnverifiedCertificate";
    case Errc::kNotInPolar: return "NotInPolar";
    case Errc::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace jgap
