#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagtwist/gauss_rat.hpp"

namespace flagtwist {

using Exp3 = std::array<int, 3>;

// Graded lex with x0 > x1 > x2; within one homogeneous degree this is plain
// lex on the exponent triple. Larger monomials compare first.
struct Exp3Greater {
  bool operator()(const Exp3& a, const Exp3& b) const { return a > b; }
};

// Homogeneous polynomial in three variables over Q(i). The zero polynomial
// has empty support and degree -1.
class HomogPoly3 {
 public:
  HomogPoly3() = default;

  static HomogPoly3 constant(const GaussRat& c);
  static HomogPoly3 variable(int i);
  static HomogPoly3 monomial(const Exp3& e, const GaussRat& c);

  int degree() const { return terms_.empty() ? -1 : degree_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || degree_ == 0; }

  const std::map<Exp3, GaussRat, Exp3Greater>& terms() const { return terms_; }
  GaussRat coeff(const Exp3& e) const;
  void add_term(const Exp3& e, const GaussRat& c);

  Exp3 leading_monomial() const;
  GaussRat leading_coeff() const;
  HomogPoly3 monic() const;

  HomogPoly3 operator-() const;
  HomogPoly3& operator+=(const HomogPoly3& o);
  HomogPoly3& operator-=(const HomogPoly3& o);
  friend HomogPoly3 operator+(HomogPoly3 a, const HomogPoly3& b) { return a += b; }
  friend HomogPoly3 operator-(HomogPoly3 a, const HomogPoly3& b) { return a -= b; }
  friend HomogPoly3 operator*(const HomogPoly3& a, const HomogPoly3& b);
  HomogPoly3 scaled(const GaussRat& c) const;
  friend bool operator==(const HomogPoly3& a, const HomogPoly3& b) {
    return a.terms_ == b.terms_;
  }

  GaussRat evaluate(const GaussRat& x0, const GaussRat& x1, const GaussRat& x2) const;

  // Exact quotient num/den, or nullopt when den does not divide num.
  static std::optional<HomogPoly3> div_exact(const HomogPoly3& num,
                                             const HomogPoly3& den);

  std::string str(const std::array<std::string, 3>& names) const;

 private:
  int degree_ = -1;
  std::map<Exp3, GaussRat, Exp3Greater> terms_;
};

// Homogeneous gcd, normalized with leading coefficient 1 under the fixed
// monomial order. Zero inputs are skipped; all-zero input throws AllZero.
HomogPoly3 gcd_homog(const std::vector<HomogPoly3>& polys);

}  // namespace flagtwist
