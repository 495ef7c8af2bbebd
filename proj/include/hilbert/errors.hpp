#pragma once

#include <stdexcept>
#include <string>

namespace hilbert {

// Failure modes surfaced by the geometry kernel. Values are stable; the CLI
// maps a subset of them to process exit codes.
enum class Errc {
  NotCollinear,
  DegenerateConfiguration,
  PointAtInfinity,
  NotProperlyConvex,
  InvalidDomain,
  CoincidentPoints,
  ZeroVector,
  NotOnBoundary,
  NotGeneralPosition,
  VertexNotOnBoundary,
  InteriorEscapes,
  FaceNotInBoundary,
  NonUniqueSupport,
  NoCommonPoint,
  ProjectionUndefined,
  NonPositiveCoordinate,
  PointOnCarrier,
  FrameDegenerate,
  NotAnAutomorphism,
  UnknownFace,
  ParseError,
  MembershipFailure,
  PlaneMissesDomain,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotCollinear: return "NotCollinear";
    case Errc::DegenerateConfiguration: return "DegenerateConfiguration";
    case Errc::PointAtInfinity: return "PointAtInfinity";
    case Errc::NotProperlyConvex: return "NotProperlyConvex";
    case Errc::InvalidDomain: return "InvalidDomain";
    case Errc::CoincidentPoints: return "CoincidentPoints";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotOnBoundary: return "NotOnBoundary";
    case Errc::NotGeneralPosition: return "NotGeneralPosition";
    case Errc::VertexNotOnBoundary: return "VertexNotOnBoundary";
    case Errc::InteriorEscapes: return "InteriorEscapes";
    case Errc::FaceNotInBoundary: return "FaceNotInBoundary";
    case Errc::NonUniqueSupport: return "NonUniqueSupport";
    case Errc::NoCommonPoint: return "NoCommonPoint";
    case Errc::ProjectionUndefined: return "ProjectionUndefined";
    case Errc::NonPositiveCoordinate: return "NonPositiveCoordinate";
    case Errc::PointOnCarrier: return "PointOnCarrier";
    case Errc::FrameDegenerate: return "FrameDegenerate";
    case Errc::NotAnAutomorphism: return "NotAnAutomorphism";
    case Errc::UnknownFace: return "UnknownFace";
    case Errc::ParseError: return "ParseError";
    case Errc::MembershipFailure: return "MembershipFailure";
    case Errc::PlaneMissesDomain: return "PlaneMissesDomain";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hilbert
