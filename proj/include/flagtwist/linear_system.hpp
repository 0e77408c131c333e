#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "flagtwist/biform.hpp"
#include "flagtwist/exact_matrix.hpp"
#include "flagtwist/flag_geometry.hpp"
#include "flagtwist/homog_poly.hpp"

namespace flagtwist {

struct SystemDims {
  long h0 = 0;
  long h1 = 0;
  long chi = 0;
};

// h^0(O_F(a,b)) = (a+1)(b+1)(a+b+2)/2.
long h0_flag(int a, int b);

// The linear system |I_A(a,b)|: conditions imposed by a configuration on
// the bidegree-(a,b) forms, its exact dimensions and a normal-form basis.
class LinearSystem {
 public:
  // Throws NotDisjoint when the configuration is not pairwise disjoint.
  LinearSystem(const Configuration& config, int a, int b);

  const Configuration& config() const { return config_; }
  int a() const { return a_; }
  int b() const { return b_; }
  const ExactMatrix& condition_matrix() const { return matrix_; }
  SystemDims dims() const { return dims_; }
  // h0 linearly independent normal forms, each vanishing on every conic.
  const std::vector<BiForm>& basis() const { return basis_; }

 private:
  Configuration config_;
  int a_, b_;
  ExactMatrix matrix_;
  SystemDims dims_;
  std::vector<BiForm> basis_;
};

SystemDims ideal_dims(const Configuration& config, int a, int b);
std::vector<BiForm> system_basis(const Configuration& config, int a, int b);

// Random combination of the basis with nonzero normal form.
BiForm random_member(const std::vector<BiForm>& basis, std::uint64_t seed);

// Quotient H with F = G*H modulo the flag form, when it exists.
std::optional<BiForm> divides(const BiForm& g, const BiForm& f);

// For a bidegree-(1,d) form F = sum_i p_i A_i(l): gcd of the components of
// the vertical vector A(l) x l. Nonconstant gcd == presence of a vertical
// component == reducibility of the surface class.
HomogPoly3 vertical_gcd(const BiForm& f);
bool is_irreducible(const BiForm& f);

struct SurfaceAnalysis {
  BiForm form;
  HomogPoly3 vertical_divisor;
  bool irreducible = false;
  std::vector<std::pair<ProjPoint, ProjPoint>> singular_points_found;
};

SurfaceAnalysis analyze_surface(const BiForm& f, int samples, std::uint64_t seed);

// The divisor cut by F on the smooth threefold is singular at x exactly
// when dF is proportional to dPhi there.
bool is_singular_at(const BiForm& f, const ProjPoint& p, const ProjPoint& l);
bool singular_along(const BiForm& f, const CurveParam& curve, int k);

bool contains_curve(const BiForm& f, const CurveParam& curve);
bool contains_conic(const BiForm& f, const Conic& c);

// Random point of {F = 0} inside the flag threefold: draw l, take
// p = l x A(l).
std::pair<ProjPoint, ProjPoint> sample_surface_point(const BiForm& f,
                                                     std::uint64_t seed);

// For collinear 4-tuples not lying on a (1,1) surface: the four products
// M_C * Y_C, where M_C is the unique (1,1) through the other three members
// and Y_C the (0,1) form q_C . l. All lie in the span of |I_A(1,2)|.
std::vector<BiForm> reducible_members(const Configuration& config);

// Bidegree of the one-dimensional intersection of (a,b) and (c,d) classes.
std::pair<long, long> bidegree_of_intersection(std::pair<long, long> ab,
                                               std::pair<long, long> cd);

bool in_span(const std::vector<BiForm>& basis, const BiForm& f);

}  // namespace flagtwist
