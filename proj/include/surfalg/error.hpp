#pragma once

#include <stdexcept>
#include <string>

namespace surfalg {

// every failure mode the library reports deliberately; anything else is a bug
enum class Err {
  // quiver validation
  NotTwoRegular,
  FCycleNotLength1Or3,
  FNotFollowingArrows,
  Disconnected,
  FewerThanTwoVertices,
  UnknownArrow,
  APrimeUndefined,
  // surface
  InvalidSurface,
  ResultNotTwoRegular,
  EmptyEdgeSet,
  UnknownEdge,
  NotBoundaryEdge,
  MissingEpsilonValue,
  OrbitMismatch,
  // algebra
  AssumptionViolated,
  PossiblySingular,
  ClosedFormMismatch,
  SocleViolation,
  IdentityFailed,
  // rewriting engine
  CapExceeded,
  InconsistentRelations,
  // mutation
  NotVirtualOrbit,
  OrbitRepeated,
  TooFewVertices,
  SingularSpherical,
  // tilting
  SpecMismatch,
  UnsupportedShift,
  // input parsing
  BadInput,
};

const char* err_name(Err e);

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg);
};

}  // namespace surfalg
