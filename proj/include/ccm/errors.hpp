#pragma once

#include <stdexcept>
#include <string>

namespace ccm {

// Every failure mode of the library is identified by one of these codes so
// callers (and the CLI report) can react to the specific condition instead
// of parsing message strings.
enum class ErrorCode {
  // geom-core
  Degenerate,
  AllCoincident,
  ZeroTotalMass,
  // planar
  DangerousTriangulation,
  ZeroArea,
  ParallelBisectors,
  InvalidCut,
  ZeroAreaPiece,
  InvalidPolygon,
  // polytope
  DegenerateSimplex,
  DangerousCone,
  ZeroVolume,
  ZeroVolumePiece,
  InvalidBoundary,
  UnsupportedDimension,
  // spherical
  GreatCircleDegenerate,
  BalancedConfiguration,
  AntipodalPair,
  DegeneratePolygon,
  DegenerateBoundary,
  ConstraintViolation,
  // center axioms
  PoleAngle,
  DegenerateKite,
  DegeneratePair,
  // io / cli
  ParseError,
  UnsupportedKind,
  UnknownSuite,
  InvalidInput,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace ccm
