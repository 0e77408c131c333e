#pragma once

#include <array>
#include <string>
#include <vector>

#include "flagtwist/gauss_rat.hpp"
#include "flagtwist/homog_poly.hpp"

namespace flagtwist {

// Monomial p^E * l^F on P^2 x P^2. The global order is graded lex with
// p0 > p1 > p2 > l0 > l1 > l2.
struct BiMonomial {
  Exp3 p{0, 0, 0};
  Exp3 l{0, 0, 0};

  friend bool operator==(const BiMonomial& a, const BiMonomial& b) {
    return a.p == b.p && a.l == b.l;
  }
  // Larger in the monomial order compares first.
  friend bool operator<(const BiMonomial& a, const BiMonomial& b) {
    if (a.p != b.p) return a.p > b.p;
    return a.l > b.l;
  }
};

// The ordered monomial basis of bidegree (a,b); cached per bidegree.
class BiBasis {
 public:
  static const BiBasis& get(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }
  const std::vector<BiMonomial>& monomials() const { return mons_; }
  std::size_t size() const { return mons_.size(); }
  std::size_t index(const BiMonomial& m) const;

 private:
  BiBasis(int a, int b);
  int a_, b_;
  std::vector<BiMonomial> mons_;
};

std::vector<BiMonomial> monomial_basis(int a, int b);

// Homogeneous polynomial in two parameters (s,t): c[k] is the coefficient
// of s^(deg-k) t^k. The zero polynomial of degree d keeps its d+1 slots.
using STPoly = std::vector<GaussRat>;

bool st_is_zero(const STPoly& p);
STPoly st_mul(const STPoly& a, const STPoly& b);
STPoly st_pow(const STPoly& a, int n);
GaussRat st_eval(const STPoly& p, const GaussRat& s, const GaussRat& t);

// Rational curve P^1 -> P^2 x P^2 given by coordinate polynomials in (s,t).
// Conics use degree (1,1) maps; fibers of the two projections have one
// constant side.
struct CurveParam {
  int pdeg = 1;
  int ldeg = 1;
  std::array<STPoly, 3> pmap;
  std::array<STPoly, 3> lmap;

  // Image lies in the flag threefold and neither map vanishes on P^1.
  bool valid() const;
  std::pair<std::array<GaussRat, 3>, std::array<GaussRat, 3>> at(
      const GaussRat& s, const GaussRat& t) const;
};

// Bihomogeneous form of bidegree (a,b), stored densely over BiBasis.
class BiForm {
 public:
  BiForm(int a, int b);

  static BiForm monomial_form(int a, int b, const BiMonomial& m, const GaussRat& c);
  // p0*l0 + p1*l1 + p2*l2, the defining form of the flag threefold.
  static BiForm flag_form();
  static BiForm one();
  // alpha . p of bidegree (1,0), beta . l of bidegree (0,1).
  static BiForm linear_p(const std::array<GaussRat, 3>& alpha);
  static BiForm linear_l(const std::array<GaussRat, 3>& beta);
  static BiForm from_l_poly(const HomogPoly3& g);

  int a() const { return a_; }
  int b() const { return b_; }
  std::pair<int, int> bidegree() const { return {a_, b_}; }

  const std::vector<GaussRat>& coeffs() const { return c_; }
  const GaussRat& coeff(std::size_t idx) const { return c_[idx]; }
  GaussRat coeff(const BiMonomial& m) const;
  void set_coeff(const BiMonomial& m, const GaussRat& v);
  void add_coeff(const BiMonomial& m, const GaussRat& v);

  bool is_zero() const;
  // True when the form is a multiple of the flag form, i.e. cuts no divisor.
  bool is_zero_on_flag() const;

  BiForm operator-() const;
  BiForm& operator+=(const BiForm& o);
  BiForm& operator-=(const BiForm& o);
  friend BiForm operator+(BiForm x, const BiForm& y) { return x += y; }
  friend BiForm operator-(BiForm x, const BiForm& y) { return x -= y; }
  BiForm scaled(const GaussRat& c) const;
  friend bool operator==(const BiForm& x, const BiForm& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }

  GaussRat evaluate(const std::array<GaussRat, 3>& p,
                    const std::array<GaussRat, 3>& l) const;

  // The unique representative mod the flag form with no monomial divisible
  // by p0*l0; realizes sections of O_F(a,b).
  BiForm normal_form() const;

  // Conjugate coefficients and swap the two point roles; bidegree (b,a).
  BiForm j_image() const;

  // Partial derivative; var 0..2 are p0..p2, 3..5 are l0..l2.
  BiForm partial(int var) const;
  std::array<GaussRat, 6> gradient_at(const std::array<GaussRat, 3>& p,
                                      const std::array<GaussRat, 3>& l) const;

  STPoly restrict_to(const CurveParam& curve) const;

  // Coefficient of p_i as a polynomial in l; requires a() == 1.
  HomogPoly3 p_coefficient(int i) const;
  // Whole form as a polynomial in l; requires a() == 0.
  HomogPoly3 as_l_poly() const;

  std::string str() const;

 private:
  int a_, b_;
  std::vector<GaussRat> c_;
};

BiForm multiply(const BiForm& f, const BiForm& g);

// Projective equality of forms: proportional coefficient vectors.
bool proportional(const BiForm& f, const BiForm& g);

// Count of monomials of bidegree (a,b) not divisible by p0*l0.
long normal_form_dimension(int a, int b);

}  // namespace flagtwist
