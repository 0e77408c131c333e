#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagtwist/biform.hpp"
#include "flagtwist/errors.hpp"
#include "flagtwist/rng.hpp"

using namespace flagtwist;

namespace {

std::array<GaussRat, 3> pt(long a, long b, long c) {
  return {GaussRat(a), GaussRat(b), GaussRat(c)};
}

BiForm random_form(Rng& rng, int a, int b) {
  BiForm f(a, b);
  const auto& mons = monomial_basis(a, b);
  for (const auto& m : mons)
    if (rng.uniform(0, 2) == 0) f.add_coeff(m, rng.gauss_rat());
  return f;
}

// Hand-built parametrization of the conic with q = m = [1:0:0]:
// p = [0:s:t], l = [0:t:-s].
CurveParam sample_conic_param() {
  CurveParam cp;
  GaussRat z(0), one(1);
  cp.pmap = {STPoly{z, z}, STPoly{one, z}, STPoly{z, one}};
  cp.lmap = {STPoly{z, z}, STPoly{z, one}, STPoly{-one, z}};
  return cp;
}

BiForm p1l1_minus_p2l2() {
  BiForm f(1, 1);
  f.set_coeff({{0, 1, 0}, {0, 1, 0}}, GaussRat(1));
  f.set_coeff({{0, 0, 1}, {0, 0, 1}}, GaussRat(-1));
  return f;
}

}  // namespace

TEST_CASE("monomial_basis sizes and order") {
  CHECK(monomial_basis(1, 1).size() == 9);
  CHECK(monomial_basis(1, 2).size() == 18);
  CHECK(monomial_basis(0, 3).size() == 10);

  auto mons = monomial_basis(1, 1);
  // Leading monomial is p0*l0 under the global order.
  CHECK(mons[0].p == Exp3{1, 0, 0});
  CHECK(mons[0].l == Exp3{1, 0, 0});
  CHECK(mons == monomial_basis(1, 1));  // deterministic
}

TEST_CASE("evaluate") {
  BiForm phi = BiForm::flag_form();
  CHECK(phi.evaluate(pt(1, 0, 0), pt(0, 0, 1)) == GaussRat(0));
  CHECK(phi.evaluate(pt(1, 0, 0), pt(1, 0, 0)) == GaussRat(1));

  BiForm f = p1l1_minus_p2l2();
  CHECK(f.evaluate(pt(0, 1, -1), pt(0, 1, 1)) == GaussRat(2));
  // the point lies on the flag threefold
  CHECK(phi.evaluate(pt(0, 1, -1), pt(0, 1, 1)) == GaussRat(0));
}

TEST_CASE("evaluate scales by la^a mu^b on representatives") {
  Rng rng(3);
  BiForm f = random_form(rng, 1, 2);
  auto p = pt(2, -1, 3), l = pt(1, 4, -2);
  GaussRat la = GaussRat::make(3, 2, 1, 1), mu = GaussRat::make(-1, 3, 0, 1);
  std::array<GaussRat, 3> ps, ls;
  for (int i = 0; i < 3; ++i) {
    ps[i] = p[i] * la;
    ls[i] = l[i] * mu;
  }
  CHECK(f.evaluate(ps, ls) == f.evaluate(p, l) * la * mu * mu);
}

TEST_CASE("multiply") {
  BiForm phi = BiForm::flag_form();
  CHECK(multiply(phi, BiForm::one()) == phi);

  BiForm l0 = BiForm::linear_l({GaussRat(1), GaussRat(0), GaussRat(0)});
  BiForm p2 = BiForm::linear_p({GaussRat(0), GaussRat(0), GaussRat(1)});
  BiForm prod = multiply(l0, p2);
  CHECK(prod.bidegree() == std::pair<int, int>(1, 1));
  CHECK(prod.coeff({{0, 0, 1}, {1, 0, 0}}) == GaussRat(1));

  // (q.l)(q'.l) for q = e0, q' = e1
  BiForm ql = BiForm::linear_l({GaussRat(1), GaussRat(0), GaussRat(0)});
  BiForm q2l = BiForm::linear_l({GaussRat(0), GaussRat(1), GaussRat(0)});
  BiForm f = multiply(ql, q2l);
  CHECK(f.bidegree() == std::pair<int, int>(0, 2));
  CHECK(f.coeff({{0, 0, 0}, {1, 1, 0}}) == GaussRat(1));

  Rng rng(5);
  BiForm g = random_form(rng, 1, 1), h = random_form(rng, 0, 2);
  auto p = pt(1, 2, -1), l = pt(3, -1, 1);
  CHECK(multiply(g, h).evaluate(p, l) == g.evaluate(p, l) * h.evaluate(p, l));
}

TEST_CASE("normal_form basics") {
  BiForm phi = BiForm::flag_form();
  CHECK(phi.normal_form().is_zero());
  CHECK(phi.is_zero_on_flag());

  BiForm p0l0 = BiForm::monomial_form(1, 1, {{1, 0, 0}, {1, 0, 0}}, GaussRat(1));
  BiForm nf = p0l0.normal_form();
  CHECK(nf.coeff({{0, 1, 0}, {0, 1, 0}}) == GaussRat(-1));
  CHECK(nf.coeff({{0, 0, 1}, {0, 0, 1}}) == GaussRat(-1));
  CHECK(nf.coeff({{1, 0, 0}, {1, 0, 0}}) == GaussRat(0));
}

TEST_CASE("normal form dimension counts") {
  CHECK(normal_form_dimension(1, 2) == 15);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      CHECK(normal_form_dimension(a, b) == (a + 1) * (b + 1) * (a + b + 2) / 2);
}

TEST_CASE("normal_form is idempotent, linear, and constant on Phi-cosets") {
  Rng rng(17);
  BiForm phi = BiForm::flag_form();
  for (int rep = 0; rep < 100; ++rep) {
    int a = 1 + rng.uniform(0, 1), b = 1 + rng.uniform(0, 2);
    BiForm f = random_form(rng, a, b);
    BiForm k = random_form(rng, a - 1, b - 1);
    BiForm nf = f.normal_form();
    CHECK(nf.normal_form() == nf);
    CHECK((f + multiply(phi, k)).normal_form() == nf);

    BiForm g = random_form(rng, a, b);
    CHECK((f + g).normal_form() == f.normal_form() + g.normal_form());
  }
}

TEST_CASE("normal form has no monomial divisible by p0*l0") {
  Rng rng(18);
  BiForm f = random_form(rng, 2, 2).normal_form();
  const auto& mons = monomial_basis(2, 2);
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (mons[i].p[0] >= 1 && mons[i].l[0] >= 1) CHECK(f.coeff(i).is_zero());
}

TEST_CASE("j_image") {
  BiForm phi = BiForm::flag_form();
  CHECK(phi.j_image() == phi);

  // p1 l1 + la p2 l2 with la real is j-invariant
  BiForm f(1, 1);
  f.set_coeff({{0, 1, 0}, {0, 1, 0}}, GaussRat(1));
  f.set_coeff({{0, 0, 1}, {0, 0, 1}}, GaussRat::frac(-7, 3));
  CHECK(f.j_image() == f);

  BiForm g = BiForm::monomial_form(1, 1, {{1, 0, 0}, {0, 1, 0}}, GaussRat::i());
  BiForm jg = g.j_image();
  CHECK(jg.coeff({{0, 1, 0}, {1, 0, 0}}) == -GaussRat::i());

  Rng rng(23);
  BiForm h = random_form(rng, 1, 2);
  CHECK(h.j_image().j_image() == h);
  // conjugate-linearity
  GaussRat c = GaussRat::make(2, 3, -1, 5);
  CHECK(h.scaled(c).j_image() == h.j_image().scaled(c.conj()));
  // evaluate(jF, p, l) = conj(evaluate(F, conj l, conj p))
  auto l = pt(0, 1, -1);
  std::array<GaussRat, 3> ic{GaussRat::i(), GaussRat(1), GaussRat(2)};
  CHECK(h.j_image().evaluate(ic, l) ==
        h.evaluate({l[0].conj(), l[1].conj(), l[2].conj()},
                   {ic[0].conj(), ic[1].conj(), ic[2].conj()})
            .conj());
}

TEST_CASE("gradient and Euler identities") {
  BiForm phi = BiForm::flag_form();
  auto g = phi.gradient_at(pt(1, 2, 3), pt(4, 5, 6));
  CHECK(g == std::array<GaussRat, 6>{GaussRat(4), GaussRat(5), GaussRat(6),
                                     GaussRat(1), GaussRat(2), GaussRat(3)});

  BiForm p2l0 = BiForm::monomial_form(1, 1, {{0, 0, 1}, {1, 0, 0}}, GaussRat(1));
  CHECK(p2l0.partial(0).is_zero());
  CHECK(p2l0.partial(2) == BiForm::linear_l({GaussRat(1), GaussRat(0), GaussRat(0)}));
  CHECK(p2l0.partial(3) == BiForm::linear_p({GaussRat(0), GaussRat(0), GaussRat(1)}));
  CHECK(p2l0.partial(4).is_zero());

  Rng rng(29);
  BiForm f = random_form(rng, 1, 2);
  auto p = pt(2, -3, 1);
  auto l = pt(1, 1, 4);
  auto grad = f.gradient_at(p, l);
  GaussRat ps, ls;
  for (int i = 0; i < 3; ++i) {
    ps += p[i] * grad[i];
    ls += l[i] * grad[3 + i];
  }
  GaussRat v = f.evaluate(p, l);
  CHECK(ps == v);                // a = 1
  CHECK(ls == v * GaussRat(2));  // b = 2
}

TEST_CASE("restrict_to_curve") {
  CurveParam cp = sample_conic_param();
  REQUIRE(cp.valid());

  BiForm phi = BiForm::flag_form();
  CHECK(st_is_zero(phi.restrict_to(cp)));

  // q.l vanishes along L_{q,m}
  BiForm ql = BiForm::linear_l({GaussRat(1), GaussRat(0), GaussRat(0)});
  CHECK(st_is_zero(ql.restrict_to(cp)));

  Rng rng(31);
  BiForm f = random_form(rng, 1, 2);
  STPoly r = f.restrict_to(cp);
  CHECK(r.size() == 4);  // degree 3, four coefficients

  // linearity and multiplicativity
  BiForm g = random_form(rng, 1, 2);
  STPoly rf = f.restrict_to(cp), rg = g.restrict_to(cp);
  STPoly rsum = (f + g).restrict_to(cp);
  for (std::size_t i = 0; i < rsum.size(); ++i) CHECK(rsum[i] == rf[i] + rg[i]);

  BiForm h = random_form(rng, 0, 1);
  STPoly rprod = multiply(f, h).restrict_to(cp);
  STPoly expect = st_mul(rf, h.restrict_to(cp));
  CHECK(rprod == expect);
}

TEST_CASE("restriction at a parameter point matches evaluation") {
  CurveParam cp = sample_conic_param();
  Rng rng(37);
  BiForm f = random_form(rng, 1, 1);
  STPoly r = f.restrict_to(cp);
  for (long s = -2; s <= 2; ++s) {
    auto [p, l] = cp.at(GaussRat(s), GaussRat(1));
    CHECK(st_eval(r, GaussRat(s), GaussRat(1)) == f.evaluate(p, l));
  }
}

TEST_CASE("proportional") {
  Rng rng(41);
  BiForm f = random_form(rng, 1, 1);
  if (f.is_zero()) f = BiForm::flag_form();
  CHECK(proportional(f, f.scaled(GaussRat::make(3, 7, 2, 5))));
  BiForm g = f;
  g.add_coeff({{0, 0, 1}, {0, 1, 0}}, GaussRat(1));
  CHECK_FALSE(proportional(f, g));
}

TEST_CASE("curve param validity guards") {
  CurveParam cp = sample_conic_param();
  cp.lmap[1] = STPoly{GaussRat(0), GaussRat(0)};
  cp.lmap[2] = STPoly{GaussRat(0), GaussRat(0)};
  CHECK_FALSE(cp.valid());  // l-map vanishes identically -> not a curve in F
}

TEST_CASE("bidegree mismatch is rejected") {
  BiForm f(1, 1), g(1, 2);
  CHECK_THROWS_AS(f += g, BidegreeMismatch);
}
