#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagtwist/errors.hpp"
#include "flagtwist/linear_system.hpp"
#include "flagtwist/rng.hpp"

using namespace flagtwist;

namespace {

ProjPoint P(long a, long b, long c) {
  return ProjPoint(GaussRat(a), GaussRat(b), GaussRat(c));
}

Configuration twistor_config(std::vector<ProjPoint> qs) {
  std::vector<Conic> cs;
  for (const auto& q : qs) cs.push_back(make_twistor_fiber(q));
  return classify_config(std::move(cs));
}

Configuration empty_config() { return Configuration{}; }

// Independent assembly of the condition matrix: evaluate every ambient
// monomial at a+b+1 distinct points of each conic instead of taking the
// symbolic restriction coefficients. A degree-(a+b) form on P^1 vanishes at
// a+b+1 distinct points iff it is zero, so both matrices have equal kernels.
ExactMatrix point_evaluation_matrix(const Configuration& cfg, int a, int b) {
  const auto& mons = monomial_basis(a, b);
  const int npts = a + b + 1;
  ExactMatrix m(cfg.size() * npts, mons.size());
  for (std::size_t ci = 0; ci < cfg.size(); ++ci) {
    CurveParam par = conic_param(cfg.conics[ci]);
    for (int k = 0; k < npts; ++k) {
      auto [p, l] = par.at(GaussRat(k), GaussRat(1));
      for (std::size_t j = 0; j < mons.size(); ++j) {
        BiForm mono = BiForm::monomial_form(a, b, mons[j], GaussRat(1));
        m.at(ci * npts + k, j) = mono.evaluate(p, l);
      }
    }
  }
  return m;
}

BiForm p1l1_minus_p2l2() {
  BiForm f(1, 1);
  f.set_coeff({{0, 1, 0}, {0, 1, 0}}, GaussRat(1));
  f.set_coeff({{0, 0, 1}, {0, 0, 1}}, GaussRat(-1));
  return f;
}

}  // namespace

TEST_CASE("ideal_dims frozen instances") {
  // one twistor fiber at (1,1)
  auto d1 = ideal_dims(twistor_config({P(1, 0, 0)}), 1, 1);
  CHECK(d1.h0 == 5);
  CHECK(d1.h1 == 0);
  CHECK(d1.chi == 5);

  // coordinate twistor triple at (1,2); its (1,1) system is empty
  Configuration t3 = twistor_config({P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)});
  CHECK(ideal_dims(t3, 1, 1).h0 == 0);
  auto d2 = ideal_dims(t3, 1, 2);
  CHECK(d2.h0 == 3);
  CHECK(d2.h1 == 0);
  CHECK(d2.chi == 3);

  // collinear twistor triple at (1,1)
  Configuration col = twistor_config({P(1, 0, 0), P(0, 1, 0), P(1, 1, 0)});
  auto d3 = ideal_dims(col, 1, 1);
  CHECK(d3.h0 == 1);
  CHECK(d3.h1 == 2);
  CHECK(d3.chi == -1);

  // a single conic at (0,1)
  Configuration c1 = classify_config({Conic(P(1, 2, 3), P(1, 1, 1))});
  auto d4 = ideal_dims(c1, 0, 1);
  CHECK(d4.h0 == 1);
  CHECK(d4.h1 == 0);
  CHECK(d4.chi == 1);

  // general twistor 4-tuple at (1,2)
  Configuration t4 = random_config(4, ConfigMode::General, true, 1234);
  auto d5 = ideal_dims(t4, 1, 2);
  CHECK(d5.h0 == 0);
  CHECK(d5.h1 == 1);
  CHECK(d5.chi == -1);
}

TEST_CASE("condition matrix kernel matches the point-evaluation oracle") {
  Rng rng(81);
  Configuration single = twistor_config({P(1, 0, 0)});
  // the (1,1) instance: nullity 6 = h0 + 1 flag-form multiple
  CHECK(LinearSystem(single, 1, 1).condition_matrix().nullspace().size() == 6);
  CHECK(point_evaluation_matrix(single, 1, 1).nullspace().size() == 6);

  for (int rep = 0; rep < 8; ++rep) {
    int n = 1 + rng.uniform(0, 2);
    int a = rng.uniform(0, 1), b = rng.uniform(0, 2);
    if (a == 0 && b == 0) b = 1;
    Configuration cfg = random_config(n, ConfigMode::General,
                                      rng.uniform(0, 1) == 0, rng.next());
    auto direct = LinearSystem(cfg, a, b).condition_matrix().nullspace().size();
    auto oracle = point_evaluation_matrix(cfg, a, b).nullspace().size();
    CHECK(direct == oracle);
  }
}

TEST_CASE("empty configuration reproduces the section counts of O_F") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      if (a == 0 && b == 0) continue;
      auto d = ideal_dims(empty_config(), a, b);
      CHECK(d.h0 == h0_flag(a, b));
      CHECK(d.h1 == 0);
    }
}

TEST_CASE("adding a disjoint conic drops h0 by at most a+b+1") {
  Rng rng(83);
  for (int rep = 0; rep < 20; ++rep) {
    int a = 1, b = 1 + rng.uniform(0, 1);
    Configuration big = random_config(3, ConfigMode::General, false, rng.next());
    Configuration small;
    small.conics = {big.conics[0], big.conics[1]};
    long h_small = ideal_dims(small, a, b).h0;
    long h_big = ideal_dims(big, a, b).h0;
    CHECK(h_big <= h_small);
    CHECK(h_big >= h_small - (a + b + 1));
  }
}

TEST_CASE("no-three-collinear (d+1)-tuples have h1 = 0, collinear ones do not") {
  for (int d = 1; d <= 3; ++d) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Configuration star =
          random_config(d + 1, ConfigMode::General, true, derive_seed(seed, d));
      CHECK(ideal_dims(star, 1, d).h1 == 0);
    }
    if (d >= 2) {
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Configuration col =
            random_config(d + 1, ConfigMode::Collinear, true, derive_seed(seed, 7 * d));
        CHECK(ideal_dims(col, 1, d).h1 > 0);
      }
    }
  }
}

TEST_CASE("collinear twistor n-tuples: h1 >= n-2+max(0, n-(d+1))") {
  for (int n = 3; n <= 6; ++n)
    for (int d = 1; d <= 3; ++d) {
      Configuration col =
          random_config(n, ConfigMode::Collinear, true, derive_seed(1000 + n, d));
      long bound = n - 2 + std::max(0, n - (d + 1));
      CHECK(ideal_dims(col, 1, d).h1 >= bound);
    }
}

TEST_CASE("system_basis") {
  // collinear twistor triple: unique member, j-invariant
  Configuration col = twistor_config({P(1, 0, 0), P(0, 1, 0), P(1, 1, 0)});
  auto basis = system_basis(col, 1, 1);
  REQUIRE(basis.size() == 1);
  CHECK(proportional(basis[0], basis[0].j_image().normal_form()));
  for (const Conic& c : col.conics) CHECK(contains_conic(basis[0], c));

  // empty configuration at (1,1): all of H^0(O_F(1,1))
  CHECK(system_basis(empty_config(), 1, 1).size() == 8);

  // every basis member vanishes on every conic
  Configuration t2 = random_config(2, ConfigMode::General, true, 55);
  for (const BiForm& f : system_basis(t2, 1, 2))
    for (const Conic& c : t2.conics) CHECK(contains_conic(f, c));
}

TEST_CASE("random_member") {
  Configuration col = twistor_config({P(1, 0, 0), P(0, 1, 0), P(1, 1, 0)});
  auto basis = system_basis(col, 1, 1);
  BiForm m = random_member(basis, 99);
  CHECK(proportional(m, basis[0]));

  CHECK_THROWS_AS(random_member({}, 1), EmptySystem);

  Configuration t2 = random_config(2, ConfigMode::General, true, 56);
  auto b12 = system_basis(t2, 1, 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    BiForm f = random_member(b12, seed);
    for (const Conic& c : t2.conics) CHECK(contains_conic(f, c));
  }
}

TEST_CASE("divides") {
  BiForm l0 = BiForm::linear_l({GaussRat(1), GaussRat(0), GaussRat(0)});
  BiForm p2 = BiForm::linear_p({GaussRat(0), GaussRat(0), GaussRat(1)});
  BiForm p2l0 = multiply(l0, p2);

  auto h = divides(l0, p2l0);
  REQUIRE(h.has_value());
  CHECK(proportional(*h, p2));

  CHECK_FALSE(divides(l0, p1l1_minus_p2l2()).has_value());

  // constructed with flag-form witnesses: a scalar witness at (1,1) and the
  // witness m.l at (1,2)
  BiForm ql = BiForm::linear_l({GaussRat(1), GaussRat(0), GaussRat(0)});
  BiForm pm = BiForm::linear_p({GaussRat(0), GaussRat(1), GaussRat(0)});
  BiForm ml = BiForm::linear_l({GaussRat(0), GaussRat(1), GaussRat(0)});
  BiForm f11 = multiply(ql, pm) + BiForm::flag_form().scaled(GaussRat(2));
  auto h2 = divides(ql, f11);
  REQUIRE(h2.has_value());
  CHECK((f11 - multiply(ql, *h2)).is_zero_on_flag());

  BiForm f12 = multiply(multiply(ql, pm), ml) + multiply(BiForm::flag_form(), ml);
  auto h3 = divides(ql, f12);
  REQUIRE(h3.has_value());
  CHECK((f12 - multiply(ql, *h3)).is_zero_on_flag());

  CHECK_THROWS_AS(divides(BiForm::flag_form(), multiply(BiForm::flag_form(), ql)),
                  ZeroDivisor);
}

TEST_CASE("vertical_gcd and irreducibility") {
  BiForm l0 = BiForm::linear_l({GaussRat(1), GaussRat(0), GaussRat(0)});
  BiForm p2 = BiForm::linear_p({GaussRat(0), GaussRat(0), GaussRat(1)});
  BiForm f1 = multiply(l0, p2);
  HomogPoly3 g1 = vertical_gcd(f1);
  CHECK(g1 == HomogPoly3::variable(0));
  CHECK_FALSE(is_irreducible(f1));

  BiForm f2 = p1l1_minus_p2l2();
  CHECK(is_irreducible(f2));

  // collinear twistor triple: the unique (1,1) member is irreducible
  Configuration col = twistor_config({P(1, 0, 0), P(0, 1, 0), P(1, 1, 0)});
  CHECK(is_irreducible(system_basis(col, 1, 1)[0]));

  CHECK_THROWS_AS(vertical_gcd(BiForm::flag_form()), ZeroOnFlag);
}

TEST_CASE("vertical vector of p1l1 - p2l2 equals the hand expansion") {
  BiForm f = p1l1_minus_p2l2();
  // A = (0, l1, -l2); A x l = (2 l1 l2, -l0 l2, -l0 l1)
  HomogPoly3 a0 = f.p_coefficient(0), a1 = f.p_coefficient(1), a2 = f.p_coefficient(2);
  CHECK(a0.is_zero());
  CHECK(a1 == HomogPoly3::variable(1));
  CHECK(a2 == -HomogPoly3(HomogPoly3::variable(2)));
  HomogPoly3 l0 = HomogPoly3::variable(0), l1 = HomogPoly3::variable(1),
             l2 = HomogPoly3::variable(2);
  HomogPoly3 c0 = a1 * l2 - a2 * l1;
  CHECK(c0 == (l1 * l2).scaled(GaussRat(2)));
  CHECK((a2 * l0 - a0 * l2) == -(l0 * l2));
  CHECK((a0 * l1 - a1 * l0) == -(l0 * l1));
}

TEST_CASE("vertical_gcd soundness on random products") {
  Rng rng(87);
  for (int rep = 0; rep < 15; ++rep) {
    // random (1,1) times random (0,1): must be seen as reducible, and the
    // vertical factor must divide back
    BiForm m(1, 1);
    for (const auto& mon : monomial_basis(1, 1))
      if (rng.uniform(0, 1)) m.add_coeff(mon, rng.gauss_rat());
    if (m.is_zero_on_flag()) continue;
    BiForm y = BiForm::linear_l(
        {rng.gauss_rat(), rng.gauss_rat(), rng.nonzero_gauss_rat()});
    BiForm f = multiply(m, y);
    HomogPoly3 g = vertical_gcd(f);
    CHECK_FALSE(g.is_constant());
    BiForm gform = BiForm::from_l_poly(g);
    CHECK(divides(gform, f).has_value());
  }

  // random (1,2) forms: whenever the gcd is nonconstant it divides back
  for (int rep = 0; rep < 15; ++rep) {
    BiForm f(1, 2);
    for (const auto& mon : monomial_basis(1, 2))
      if (rng.uniform(0, 1)) f.add_coeff(mon, rng.gauss_rat());
    if (f.is_zero_on_flag()) continue;
    HomogPoly3 g = vertical_gcd(f);
    if (!g.is_constant()) {
      BiForm gform = BiForm::from_l_poly(g);
      CHECK(divides(gform, f).has_value());
    }
  }
}

TEST_CASE("is_singular_at") {
  BiForm f = p1l1_minus_p2l2();
  CHECK_FALSE(is_singular_at(f, P(0, 1, 1), P(1, 0, 0)));
  CHECK_THROWS_AS(is_singular_at(f, P(1, 0, 0), P(1, 0, 0)), NotOnFlag);
  CHECK_THROWS_AS(is_singular_at(f, P(1, 1, 1), P(1, -2, 1)), NotOnSurface);

  // a product surface is singular where the factors cross
  BiForm x = BiForm::linear_p({GaussRat(1), GaussRat(0), GaussRat(0)});
  BiForm y = BiForm::linear_l({GaussRat(0), GaussRat(1), GaussRat(0)});
  BiForm prod = multiply(x, y);
  // point with p0 = 0, l1 = 0, p.l = 0
  CHECK(is_singular_at(prod, P(0, 1, 0), P(0, 0, 1)));
}

TEST_CASE("singularity test agrees with the 2x6 Jacobian rank oracle") {
  Rng rng(91);
  int checked = 0;
  while (checked < 100) {
    BiForm f(1, 2);
    for (const auto& mon : monomial_basis(1, 2))
      if (rng.uniform(0, 1)) f.add_coeff(mon, rng.gauss_rat());
    if (rng.uniform(0, 3) == 0) {
      // include product surfaces
      BiForm m(1, 1);
      for (const auto& mon : monomial_basis(1, 1))
        if (rng.uniform(0, 1)) m.add_coeff(mon, rng.gauss_rat());
      if (m.is_zero()) continue;
      f = multiply(m, BiForm::linear_l({rng.gauss_rat(), rng.gauss_rat(),
                                        rng.nonzero_gauss_rat()}));
    }
    if (f.is_zero_on_flag()) continue;
    std::pair<ProjPoint, ProjPoint> x{P(1, 0, 0), P(0, 1, 0)};
    try {
      x = sample_surface_point(f, rng.next());
    } catch (const ExhaustedRetries&) {
      continue;
    }
    ++checked;
    bool singular = is_singular_at(f, x.first, x.second);
    // oracle: rank of the stacked Jacobian via an ExactMatrix
    ExactMatrix jac(2, 6);
    auto gf = f.gradient_at(x.first.coords(), x.second.coords());
    std::array<GaussRat, 6> gphi{x.second[0], x.second[1], x.second[2],
                                 x.first[0], x.first[1], x.first[2]};
    for (int j = 0; j < 6; ++j) {
      jac.at(0, j) = gf[j];
      jac.at(1, j) = gphi[j];
    }
    CHECK(singular == (jac.rank() <= 1));
  }
}

TEST_CASE("sample_surface_point") {
  BiForm f = multiply(BiForm::linear_l({GaussRat(1), GaussRat(0), GaussRat(0)}),
                      BiForm::linear_p({GaussRat(0), GaussRat(0), GaussRat(1)}));
  // hand instance: l = [1:1:1] gives p = l x A(l) = [1:-1:0]
  BiForm nf = f.normal_form();
  std::array<GaussRat, 3> av;
  for (int i = 0; i < 3; ++i)
    av[i] = nf.p_coefficient(i).evaluate(GaussRat(1), GaussRat(1), GaussRat(1));
  auto praw = cross_raw({GaussRat(1), GaussRat(1), GaussRat(1)}, av);
  CHECK(ProjPoint(praw) == P(1, -1, 0));

  Rng rng(93);
  for (int k = 0; k < 20; ++k) {
    auto [p, l] = sample_surface_point(f, rng.next());
    CHECK(dot(p, l).is_zero());
    CHECK(f.evaluate(p.coords(), l.coords()).is_zero());
    // Euler: a*F = sum p_i dF/dp_i vanishes on the surface
    auto g = f.gradient_at(p.coords(), l.coords());
    CHECK((p[0] * g[0] + p[1] * g[1] + p[2] * g[2]).is_zero());
  }
}

TEST_CASE("base locus of |I_A(1,1)| for a twistor pair is A, L, R") {
  Rng rng(95);
  Configuration t2 = random_config(2, ConfigMode::General, true, 314);
  auto basis = system_basis(t2, 1, 1);
  REQUIRE(basis.size() == 2);
  auto [L, R] = connecting_curves(t2.conics[0], t2.conics[1]);
  for (const BiForm& f : basis) {
    for (const Conic& c : t2.conics) CHECK(contains_conic(f, c));
    CHECK(contains_curve(f, L.param()));
    CHECK(contains_curve(f, R.param()));
  }
  // off the base locus some member is nonzero
  int off = 0;
  while (off < 20) {
    auto [p, l] = random_flag_point(rng);
    bool on_locus = point_on_conic(t2.conics[0], p, l) ||
                    point_on_conic(t2.conics[1], p, l) || l == L.base || p == R.base;
    if (on_locus) continue;
    ++off;
    bool some_nonzero = false;
    for (const BiForm& f : basis)
      if (!f.evaluate(p.coords(), l.coords()).is_zero()) some_nonzero = true;
    CHECK(some_nonzero);
  }
}

TEST_CASE("reducible members of the collinear twistor 4-tuple pencil") {
  Configuration t4 = random_config(4, ConfigMode::Collinear, true, 2024);
  REQUIRE(t4.collinear_witness.has_value());
  if (ideal_dims(t4, 1, 1).h0 != 0) return;  // regenerate-by-seed scenario covers this

  LinearSystem pencil(t4, 1, 2);
  CHECK(pencil.dims().h0 == 2);

  auto products = reducible_members(t4);
  REQUIRE(products.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK_FALSE(is_irreducible(products[i]));
    CHECK(in_span(pencil.basis(), products[i]));
    for (std::size_t j = i + 1; j < 4; ++j)
      CHECK_FALSE(proportional(products[i], products[j]));
  }

  // every member is singular along the witness fiber
  CurveParam lparam = t4.collinear_witness->param();
  BiForm member = random_member(pencil.basis(), 11);
  CHECK(singular_along(member, lparam, 5));
  CHECK(singular_along(products[0], lparam, 5));
}

TEST_CASE("bidegree_of_intersection") {
  CHECK(bidegree_of_intersection({1, 1}, {1, 1}) == std::pair<long, long>(3, 3));
  CHECK(bidegree_of_intersection({1, 2}, {1, 1}) == std::pair<long, long>(5, 4));
  CHECK(bidegree_of_intersection({1, 0}, {0, 1}) == std::pair<long, long>(1, 1));
}

TEST_CASE("ideal_dims rejects bad input") {
  Configuration c;
  c.conics = {Conic(P(1, 0, 0), P(1, 0, 0)), Conic(P(1, 1, 0), P(1, 0, 1))};
  CHECK_THROWS_AS(ideal_dims(c, 1, 1), NotDisjoint);
  CHECK_THROWS_AS(ideal_dims(empty_config(), 0, 0), BadParams);
}
