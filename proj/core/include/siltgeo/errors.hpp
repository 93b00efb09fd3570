#pragma once

#include <stdexcept>
#include <string>

namespace siltgeo {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct AmbientMismatch : Error {
  using Error::Error;
};
struct OwnerMismatch : Error {
  using Error::Error;
};
struct InfiniteDimensional : Error {
  using Error::Error;
};
struct MalformedRelation : Error {
  using Error::Error;
};
struct IdealIsWholeAlgebra : Error {
  using Error::Error;
};
struct NonSplitSemisimple : Error {
  using Error::Error;
};
struct NotSilting : Error {
  using Error::Error;
};
struct Not2TermResult : Error {
  using Error::Error;
};
struct CompletionNotVerified : Error {
  using Error::Error;
};
struct NotLocated : Error {
  using Error::Error;
};
struct NotInCone : Error {
  using Error::Error;
};
struct NegativeMultiplicity : Error {
  using Error::Error;
};
struct IncompleteAtlas : Error {
  using Error::Error;
};
struct NonConvexClass : Error {
  using Error::Error;
};
struct SaturationViolated : Error {
  using Error::Error;
};
struct NotInWU : Error {
  using Error::Error;
};
struct NotInDU : Error {
  using Error::Error;
};
struct IncompleteReduction : Error {
  using Error::Error;
};
struct CertificationFailed : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace siltgeo
