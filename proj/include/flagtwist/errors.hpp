#pragma once

#include <stdexcept>
#include <string>

namespace flagtwist {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact-core
struct AllZero : Error {
  AllZero() : Error("gcd_homog: every input is the zero polynomial") {}
};

// bipoly
struct BidegreeMismatch : Error {
  explicit BidegreeMismatch(const std::string& w) : Error(w) {}
};

// flag-geometry
struct ZeroPoint : Error {
  ZeroPoint() : Error("projective point needs a nonzero coordinate") {}
};
struct NotSmooth : Error {
  NotSmooth() : Error("conic is reducible: q*m = 0") {}
};
struct NotOnFlag : Error {
  NotOnFlag() : Error("point does not satisfy p*l = 0") {}
};
struct DegenerateCross : Error {
  DegenerateCross() : Error("cross product vanished") {}
};
struct SameConic : Error {
  SameConic() : Error("conics coincide as (q,m) pairs") {}
};
struct RepeatedConic : Error {
  RepeatedConic() : Error("repeated q point among conics") {}
};
struct ParallelData : Error {
  ParallelData() : Error("parallel q's or m's: connecting curve undefined") {}
};
struct ExhaustedRetries : Error {
  explicit ExhaustedRetries(const std::string& w = "resampling bound exceeded")
      : Error(w) {}
};

// linear-systems
struct NotDisjoint : Error {
  NotDisjoint() : Error("configuration is not pairwise disjoint") {}
};
struct EmptySystem : Error {
  EmptySystem() : Error("linear system has no members") {}
};
struct ZeroDivisor : Error {
  ZeroDivisor() : Error("divisor vanishes on the flag threefold") {}
};
struct ZeroOnFlag : Error {
  ZeroOnFlag() : Error("form is a multiple of the flag form") {}
};
struct VerticalVectorZero : Error {
  VerticalVectorZero() : Error("vertical vector is identically zero") {}
};
struct NotOnSurface : Error {
  NotOnSurface() : Error("point or curve does not lie on the surface") {}
};
struct HypothesisFailed : Error {
  explicit HypothesisFailed(const std::string& w) : Error(w) {}
};

// harness
struct UnknownScenario : Error {
  explicit UnknownScenario(const std::string& name)
      : Error("unknown scenario: " + name) {}
};
struct BadParams : Error {
  explicit BadParams(const std::string& w) : Error(w) {}
};

}  // namespace flagtwist
