#ifndef MVC_ERROR_HPP
#define MVC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mvc {

enum class Errc {
  DegenerateSites,
  DimensionMismatch,
  InvalidPoint,
  InvalidSiteSystem,
  InvalidHalfspace,
  NotOrthogonal,
  NumericallyIllConditioned,
  InfeasibleBase,
  PreconditionViolated,
  DegenerateStrip,
  ParallelNormals,
  CyclicInput,
  NonConvexInput,
  ParallelUnboundedSides,
  NotThreeSided,
  VertexOnBandBoundary,
  FlatAngle,
  ParallelSides,
  UnrecognizedShape,
  DegenerateDraw,
  ConstructionFailed,
  ParseError,
};

inline std::string_view to_string(Errc e) {
  switch (e) {
    case Errc::DegenerateSites: return "DegenerateSites";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidPoint: return "InvalidPoint";
    case Errc::InvalidSiteSystem: return "InvalidSiteSystem";
    case Errc::InvalidHalfspace: return "InvalidHalfspace";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::NumericallyIllConditioned: return "NumericallyIllConditioned";
    case Errc::InfeasibleBase: return "InfeasibleBase";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::DegenerateStrip: return "DegenerateStrip";
    case Errc::ParallelNormals: return "ParallelNormals";
    case Errc::CyclicInput: return "CyclicInput";
    case Errc::NonConvexInput: return "NonConvexInput";
    case Errc::ParallelUnboundedSides: return "ParallelUnboundedSides";
    case Errc::NotThreeSided: return "NotThreeSided";
    case Errc::VertexOnBandBoundary: return "VertexOnBandBoundary";
    case Errc::FlatAngle: return "FlatAngle";
    case Errc::ParallelSides: return "ParallelSides";
    case Errc::UnrecognizedShape: return "UnrecognizedShape";
    case Errc::DegenerateDraw: return "DegenerateDraw";
    case Errc::ConstructionFailed: return "ConstructionFailed";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mvc

#endif  // MVC_ERROR_HPP
