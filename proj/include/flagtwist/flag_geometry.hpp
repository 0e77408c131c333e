#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagtwist/biform.hpp"
#include "flagtwist/gauss_rat.hpp"
#include "flagtwist/rng.hpp"

namespace flagtwist {

// Exact point of P^2, stored with the first nonzero coordinate scaled to 1,
// so equality of representatives is projective equality.
class ProjPoint {
 public:
  ProjPoint(GaussRat c0, GaussRat c1, GaussRat c2);
  explicit ProjPoint(const std::array<GaussRat, 3>& c) : ProjPoint(c[0], c[1], c[2]) {}

  static ProjPoint unit(int i);

  const std::array<GaussRat, 3>& coords() const { return v_; }
  const GaussRat& operator[](int i) const { return v_[i]; }

  ProjPoint conj() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

  std::string str() const;

 private:
  std::array<GaussRat, 3> v_;
};

GaussRat dot(const ProjPoint& a, const ProjPoint& b);
GaussRat dot(const std::array<GaussRat, 3>& a, const std::array<GaussRat, 3>& b);
std::array<GaussRat, 3> cross_raw(const std::array<GaussRat, 3>& a,
                                  const std::array<GaussRat, 3>& b);
// Canonicalized cross product; nullopt when the inputs are parallel.
std::optional<ProjPoint> cross(const ProjPoint& a, const ProjPoint& b);

// Deterministic basis {u, v} of the plane {x : x . m = 0}.
std::pair<std::array<GaussRat, 3>, std::array<GaussRat, 3>> plane_basis(
    const ProjPoint& m);

// Smooth bidegree-(1,1) curve L_{q,m} = {(p,l) in F : p.m = 0, q.l = 0}.
// Pairs with q.m = 0 cut reducible curves and are rejected.
struct Conic {
  ProjPoint q;
  ProjPoint m;
  bool twistor;  // m == conj(q)

  Conic(ProjPoint q_, ProjPoint m_);

  friend bool operator==(const Conic& a, const Conic& b) {
    return a.q == b.q && a.m == b.m;
  }
  friend bool operator!=(const Conic& a, const Conic& b) { return !(a == b); }
};

Conic make_twistor_fiber(const ProjPoint& q);

// Twistor projection conj(p) x l of a point of the flag threefold.
ProjPoint twistor_project(const ProjPoint& p, const ProjPoint& l);

CurveParam conic_param(const Conic& c);

enum class FiberKind {
  Pi2,  // {(p, base) : p.base = 0}, bidegree (1,0)
  Pi1,  // {(base, l) : base.l = 0}, bidegree (0,1)
};

struct FiberCurve {
  FiberKind kind;
  ProjPoint base;

  bool meets(const Conic& c) const;
  CurveParam param() const;
  std::string str() const;
};

bool point_on_conic(const Conic& c, const ProjPoint& p, const ProjPoint& l);

// Exact disjointness criterion: the only incidence candidate has
// l = q1 x q2 and p = m1 x m2, and lies on F iff their dot vanishes.
// Parallel q's or m's always share a point.
bool are_disjoint(const Conic& c1, const Conic& c2);

bool collinear_triple(const Conic& c1, const Conic& c2, const Conic& c3,
                      FiberCurve* witness = nullptr);

// The unique (1,0) and (0,1) curves meeting both conics.
std::pair<FiberCurve, FiberCurve> connecting_curves(const Conic& c1, const Conic& c2);

struct Configuration {
  std::vector<Conic> conics;

  bool pairwise_disjoint = false;
  bool all_twistor = false;
  bool in_C_star = false;
  std::optional<FiberCurve> collinear_witness;

  std::size_t size() const { return conics.size(); }
};

Configuration classify_config(std::vector<Conic> conics);

enum class ConfigMode { General, Collinear };

// Deterministic seeded generator. General mode resamples until the result
// is pairwise disjoint with no three q's collinear; collinear mode places
// all q's on one random line (and, for non-twistor draws, all m's on a
// second one).
Configuration random_config(int n, ConfigMode mode, bool twistor, std::uint64_t seed);

ProjPoint random_point(Rng& rng);
// Random (p, l) with p.l = 0.
std::pair<ProjPoint, ProjPoint> random_flag_point(Rng& rng);

}  // namespace flagtwist
