#include "flagtwist/scenarios.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "flagtwist/errors.hpp"
#include "flagtwist/linear_system.hpp"
#include "flagtwist/rng.hpp"

namespace flagtwist {

namespace {

struct HypothesisNotMet {
  std::string reason;
};

class Checker {
 public:
  void eq(const std::string& key, long actual, long expected) {
    add(key, "==", std::to_string(expected), std::to_string(actual),
        actual == expected);
  }
  void ge(const std::string& key, long actual, long bound) {
    add(key, ">=", std::to_string(bound), std::to_string(actual), actual >= bound);
  }
  void gt(const std::string& key, long actual, long bound) {
    add(key, ">", std::to_string(bound), std::to_string(actual), actual > bound);
  }
  void is_true(const std::string& key, bool actual) {
    add(key, "==", "true", actual ? "true" : "false", actual);
  }
  void note(std::string s) { notes.push_back(std::move(s)); }

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }

  std::vector<CheckRecord> checks;
  std::vector<std::string> notes;

 private:
  void add(const std::string& key, const char* rel, std::string expected,
           std::string actual, bool ok) {
    checks.push_back({key, rel, std::move(expected), std::move(actual), ok});
  }
};

using TrialFn = std::function<void(Checker&, int d, int n, std::uint64_t seed)>;
using ValidateFn = std::function<void(int d, int n)>;

struct ScenarioDef {
  ScenarioInfo info;
  ValidateFn validate;
  TrialFn run;
};

// ---- shared helpers ----------------------------------------------------

long binom2(long x) { return x >= 2 ? x * (x - 1) / 2 : 0; }

BiForm p1l1_minus_p2l2() {
  BiForm f(1, 1);
  f.set_coeff({{0, 1, 0}, {0, 1, 0}}, GaussRat(1));
  f.set_coeff({{0, 0, 1}, {0, 0, 1}}, GaussRat(-1));
  return f;
}

// Same incidence solver as in the geometry tests: construct the candidate
// common point and check all incidences directly.
bool conics_share_point(const Conic& c1, const Conic& c2) {
  auto on_both = [&](const ProjPoint& p, const ProjPoint& l) {
    return point_on_conic(c1, p, l) && point_on_conic(c2, p, l);
  };
  auto qx = cross(c1.q, c2.q);
  auto mx = cross(c1.m, c2.m);
  if (qx && mx) return on_both(*mx, *qx);
  if (!qx && mx) {
    ProjPoint p = *mx;
    auto l = cross(c1.q, p);
    if (l) return on_both(p, *l);
    auto [u, v] = plane_basis(c1.q);
    return on_both(p, ProjPoint(u));
  }
  if (qx && !mx) {
    ProjPoint l = *qx;
    auto p = cross(c1.m, l);
    if (p) return on_both(*p, l);
    auto [u, v] = plane_basis(c1.m);
    return on_both(ProjPoint(u), l);
  }
  return true;  // equal q and equal m would be the same conic
}

// Tries a few seeds for an irreducible random member; reducible members of
// a positive-dimensional system form a proper closed subset, so this is a
// draw-again situation, not a failure, until the bound is hit.
std::optional<BiForm> irreducible_member(const std::vector<BiForm>& basis,
                                         std::uint64_t seed, int attempts = 5) {
  for (int k = 0; k < attempts; ++k) {
    BiForm f = random_member(basis, derive_seed(seed, 9000 + k));
    if (is_irreducible(f)) return f;
  }
  return std::nullopt;
}

// Exact rational point of the unit circle: ((a^2-b^2) + 2ab i)/(a^2+b^2).
GaussRat unit_circle_w(long a, long b) {
  mpq_class den(a * a + b * b);
  mpq_class re = mpq_class(a * a - b * b) / den;
  mpq_class im = mpq_class(2 * a * b) / den;
  return GaussRat(re, im);
}

// Twistor fibers over [0:1:w]. For |w| = 1 the fiber lies on the surface
// p1 l1 - p2 l2; all such q's lie on one line, so the tuple is collinear.
struct SpecialCollinear {
  Configuration config;
  BiForm surface = p1l1_minus_p2l2();
  std::vector<std::size_t> off_surface;  // indices of fibers with |w| != 1
};

SpecialCollinear special_collinear_instance(std::uint64_t seed, int extras) {
  Rng rng(seed);
  std::vector<GaussRat> ws;
  while (ws.size() < 4) {
    long a = rng.uniform(-6, 6), b = rng.uniform(-6, 6);
    if (a == 0 && b == 0) continue;
    GaussRat w = unit_circle_w(a, b);
    bool dup = false;
    for (const auto& x : ws) dup = dup || x == w;
    if (!dup) ws.push_back(w);
  }
  std::vector<GaussRat> extra;
  while (static_cast<int>(extra.size()) < extras) {
    GaussRat w = rng.gauss_rat();
    if (w.norm() == 1) continue;
    bool dup = false;
    for (const auto& x : extra) dup = dup || x == w;
    if (!dup) extra.push_back(w);
  }
  SpecialCollinear out;
  std::vector<Conic> cs;
  for (const auto& w : ws)
    cs.push_back(make_twistor_fiber(ProjPoint(GaussRat(0), GaussRat(1), w)));
  for (const auto& w : extra) {
    out.off_surface.push_back(cs.size());
    cs.push_back(make_twistor_fiber(ProjPoint(GaussRat(0), GaussRat(1), w)));
  }
  out.config = classify_config(std::move(cs));
  return out;
}

Configuration draw_twistor_star(int n, std::uint64_t seed) {
  return random_config(n, ConfigMode::General, true, seed);
}

Configuration draw_twistor_collinear(int n, std::uint64_t seed) {
  return random_config(n, ConfigMode::Collinear, true, seed);
}

void check_splitting(Checker& ck, const std::string& prefix, const BiForm& member,
                     const Configuration& cfg,
                     const std::vector<std::size_t>& off_surface, int expect_gcd_deg) {
  ck.is_true(prefix + ".reducible", !is_irreducible(member));
  HomogPoly3 g = vertical_gcd(member);
  ck.eq(prefix + ".vertical_degree", g.degree(), expect_gcd_deg);
  if (g.degree() < 1) return;

  // The vertical factor must be the product of the q.l forms of the
  // off-surface fibers.
  BiForm expected_factor = BiForm::monomial_form(0, 0, BiMonomial{}, GaussRat(1));
  for (std::size_t idx : off_surface)
    expected_factor =
        multiply(expected_factor, BiForm::linear_l(cfg.conics[idx].q.coords()));
  BiForm gform = BiForm::from_l_poly(g);
  ck.is_true(prefix + ".vertical_factor_is_qC_l",
             proportional(gform, expected_factor));

  auto quotient = divides(gform, member);
  ck.is_true(prefix + ".divides_confirms", quotient.has_value());
  if (!quotient) return;
  ck.is_true(prefix + ".component_11_irreducible", is_irreducible(*quotient));
  long contained = 0;
  for (std::size_t i = 0; i < cfg.size(); ++i)
    if (contains_conic(*quotient, cfg.conics[i])) ++contained;
  ck.ge(prefix + ".component_11_fibers", contained, 4);
}

// ---- scenario registry -------------------------------------------------

const std::vector<ScenarioDef>& defs() {
  static const std::vector<ScenarioDef>* table = [] {
    auto* t = new std::vector<ScenarioDef>;

    t->push_back(
        {{"eqdims", "h0(O_F(a,b)) = (a+1)(b+1)(a+b+2)/2 for 0 <= a,b <= 4", false,
          false, 0, 0, 1},
         nullptr,
         [](Checker& ck, int, int, std::uint64_t) {
           Configuration empty;
           for (int a = 0; a <= 4; ++a)
             for (int b = 0; b <= 4; ++b) {
               long expected = static_cast<long>(a + 1) * (b + 1) * (a + b + 2) / 2;
               std::string key = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
               if (a != 0 || b != 0)
                 ck.eq("h0" + key, ideal_dims(empty, a, b).h0, expected);
               ck.eq("nf_dim" + key, normal_form_dimension(a, b), expected);
             }
         }});

    t->push_back(
        {{"c02", "h0(I_A(0,d)) = max(0, C(d-n+2,2)) and the two-branch h1 for n "
                 "disjoint conics",
          true, true, 2, 2, 20},
         nullptr,
         [](Checker& ck, int d, int n, std::uint64_t seed) {
           Configuration cfg = random_config(n, ConfigMode::General, false, seed);
           auto dims = ideal_dims(cfg, 0, d);
           long h0 = std::max(0L, binom2(d - n + 2));
           long h1 = n <= d + 1 ? binom2(n)
                                : static_cast<long>(n) * (d + 1) - binom2(d + 2);
           ck.eq("h0", dims.h0, h0);
           ck.eq("h1", dims.h1, h1);
         }});

    t->push_back(
        {{"cor1", "h1(I_A(1,d)) = 0 and h0 = (d+1)(d+3)-n(d+2) for n <= d+1 "
                  "disjoint twistor fibers, no three collinear",
          true, true, 2, 2, 20},
         [](int d, int n) {
           if (n > d + 1) throw BadParams("cor1: needs n <= d+1");
         },
         [](Checker& ck, int d, int n, std::uint64_t seed) {
           Configuration cfg = draw_twistor_star(n, seed);
           auto dims = ideal_dims(cfg, 1, d);
           ck.eq("h0", dims.h0, static_cast<long>(d + 1) * (d + 3) - n * (d + 2));
           ck.eq("h1", dims.h1, 0);
         }});

    t->push_back(
        {{"c01-star", "no three collinear implies h1(I_A(1,d)) = 0 at n = d+1",
          true, false, 2, 0, 20},
         nullptr,
         [](Checker& ck, int d, int, std::uint64_t seed) {
           Configuration cfg = draw_twistor_star(d + 1, seed);
           ck.eq("h1", ideal_dims(cfg, 1, d).h1, 0);
         }});

    t->push_back(
        {{"c01-collinear",
          "a collinear triple inside a (d+1)-tuple forces h1(I_A(1,d)) > 0", true,
          false, 2, 0, 20},
         [](int d, int) {
           if (d < 2) throw BadParams("c01-collinear: needs d >= 2 so that d+1 >= 3");
         },
         [](Checker& ck, int d, int, std::uint64_t seed) {
           Configuration cfg = draw_twistor_collinear(d + 1, seed);
           ck.gt("h1", ideal_dims(cfg, 1, d).h1, 0);
         }});

    t->push_back(
        {{"ii1", "(h0,h1)(I_A(1,d)) = (0,1) for d+2 twistor fibers, no three "
                 "collinear",
          true, false, 2, 0, 20},
         nullptr,
         [](Checker& ck, int d, int, std::uint64_t seed) {
           Configuration cfg = draw_twistor_star(d + 2, seed);
           auto dims = ideal_dims(cfg, 1, d);
           ck.eq("h0", dims.h0, 0);
           ck.eq("h1", dims.h1, 1);
         }});

    t->push_back(
        {{"u6", "no bidegree-(1,d) surface contains d+2 twistor fibers with no "
                "three collinear",
          true, false, 2, 0, 20},
         nullptr,
         [](Checker& ck, int d, int, std::uint64_t seed) {
           Configuration cfg = draw_twistor_star(d + 2, seed);
           ck.eq("h0", ideal_dims(cfg, 1, d).h0, 0);
         }});

    t->push_back(
        {{"u5-exist", "an irreducible (1,d) member exists through any n <= d+1 "
                      "twistor fibers with no three collinear",
          true, true, 2, 2, 20},
         [](int d, int n) {
           if (n > d + 1) throw BadParams("u5-exist: needs n <= d+1");
         },
         [](Checker& ck, int d, int n, std::uint64_t seed) {
           Configuration cfg;
           if (n >= 1) cfg = draw_twistor_star(n, seed);
           LinearSystem sys(cfg, 1, d);
           long expected = static_cast<long>(d + 1) * (d + 3) - n * (d + 2);
           ck.eq("h0", sys.dims().h0, expected);
           ck.eq("h1", sys.dims().h1, 0);
           auto member = irreducible_member(sys.basis(), seed);
           ck.is_true("irreducible_member_found", member.has_value());
           if (member) {
             bool contains_all = true;
             for (const Conic& c : cfg.conics)
               contains_all = contains_all && contains_conic(*member, c);
             ck.is_true("member_contains_configuration", contains_all);
           }
         }});

    t->push_back(
        {{"no2", "h1(I_A(1,d)) >= n-2+max(0, n-(d+1)) for n collinear twistor "
                 "fibers",
          true, true, 2, 4, 20},
         [](int, int n) {
           if (n < 3) throw BadParams("no2: needs n >= 3");
         },
         [](Checker& ck, int d, int n, std::uint64_t seed) {
           Configuration cfg = draw_twistor_collinear(n, seed);
           long bound = n - 2 + std::max(0, n - (d + 1));
           ck.ge("h1", ideal_dims(cfg, 1, d).h1, bound);
         }});

    t->push_back(
        {{"nok1", "h0(I_A(1,d)) >= d for d+2 general collinear twistor fibers and "
                  "the general member is irreducible",
          true, false, 2, 0, 20},
         [](int d, int) {
           if (d < 2) throw BadParams("nok1: needs d >= 2");
         },
         [](Checker& ck, int d, int, std::uint64_t seed) {
           Configuration cfg = draw_twistor_collinear(d + 2, seed);
           LinearSystem sys(cfg, 1, d);
           ck.ge("h0", sys.dims().h0, d);
           if (sys.dims().h0 != d)
             ck.note("h0 = " + std::to_string(sys.dims().h0) +
                     " exceeds the generic value " + std::to_string(d));
           auto member = irreducible_member(sys.basis(), seed);
           ck.is_true("irreducible_member_found", member.has_value());
           if (member) {
             bool contains_all = true;
             for (const Conic& c : cfg.conics)
               contains_all = contains_all && contains_conic(*member, c);
             ck.is_true("member_contains_configuration", contains_all);
           }
         }});

    t->push_back(
        {{"remmmm", "(h0,h1)(I_A(1,1)) = (1,2) for a collinear twistor triple and "
                    "the unique member is irreducible and j-invariant",
          false, false, 0, 0, 20},
         nullptr,
         [](Checker& ck, int, int, std::uint64_t seed) {
           Configuration cfg = draw_twistor_collinear(3, seed);
           LinearSystem sys(cfg, 1, 1);
           ck.eq("h0", sys.dims().h0, 1);
           ck.eq("h1", sys.dims().h1, 2);
           if (sys.dims().h0 != 1) return;
           const BiForm& m = sys.basis()[0];
           ck.is_true("member_irreducible", is_irreducible(m));
           ck.is_true("member_j_invariant",
                      proportional(m, m.j_image().normal_form()));
         }});

    t->push_back(
        {{"n3", "collinear conic triples: h1(I_A(1,2)) = 1 and both connecting "
                "fibers lie in the base locus",
          false, false, 0, 0, 20},
         nullptr,
         [](Checker& ck, int, int, std::uint64_t seed) {
           Configuration cfg = random_config(3, ConfigMode::Collinear, false, seed);
           long h11 = ideal_dims(cfg, 1, 1).h0;
           if (h11 < 1)
             throw HypothesisNotMet{"no (1,1) member through the collinear triple"};
           ck.eq("h0_11", h11, 1);

           LinearSystem sys(cfg, 1, 2);
           ck.eq("h0", sys.dims().h0, 4);
           ck.eq("h1", sys.dims().h1, 1);

           // witness fibers: q's share a line, and the generator also puts
           // the m's on one
           ExactMatrix mmat(cfg.size(), 3);
           for (std::size_t i = 0; i < cfg.size(); ++i)
             for (int j = 0; j < 3; ++j) mmat.at(i, j) = cfg.conics[i].m[j];
           auto mkernel = mmat.nullspace();
           if (!cfg.collinear_witness || mkernel.empty())
             throw HypothesisNotMet{"missing connecting fiber on one side"};
           FiberCurve l = *cfg.collinear_witness;
           FiberCurve r{FiberKind::Pi1,
                        ProjPoint(mkernel[0][0], mkernel[0][1], mkernel[0][2])};
           bool base_locus = true;
           for (const BiForm& f : sys.basis())
             base_locus = base_locus && contains_curve(f, l.param()) &&
                          contains_curve(f, r.param());
           ck.is_true("L_and_R_in_base_locus", base_locus);

           auto member = irreducible_member(sys.basis(), seed);
           ck.is_true("irreducible_member_found", member.has_value());
         }});

    t->push_back(
        {{"ee1", "for a disjoint pair the base locus of |I_A(1,1)| is A with the "
                 "two connecting fibers",
          false, false, 0, 0, 20},
         nullptr,
         [](Checker& ck, int, int, std::uint64_t seed) {
           Configuration cfg = draw_twistor_star(2, seed);
           LinearSystem sys(cfg, 1, 1);
           ck.eq("h0", sys.dims().h0, 2);
           ck.eq("h1", sys.dims().h1, 0);
           auto [l, r] = connecting_curves(cfg.conics[0], cfg.conics[1]);
           bool contained = true;
           for (const BiForm& f : sys.basis()) {
             for (const Conic& c : cfg.conics)
               contained = contained && contains_conic(f, c);
             contained = contained && contains_curve(f, l.param()) &&
                         contains_curve(f, r.param());
           }
           ck.is_true("A_L_R_in_every_member", contained);

           Rng rng(derive_seed(seed, 777));
           int off_checked = 0;
           bool off_ok = true;
           while (off_checked < 20) {
             auto [p, lpt] = random_flag_point(rng);
             bool on_locus = point_on_conic(cfg.conics[0], p, lpt) ||
                             point_on_conic(cfg.conics[1], p, lpt) ||
                             lpt == l.base || p == r.base;
             if (on_locus) continue;
             ++off_checked;
             bool some_nonzero = false;
             for (const BiForm& f : sys.basis())
               if (!f.evaluate(p.coords(), lpt.coords()).is_zero())
                 some_nonzero = true;
             off_ok = off_ok && some_nonzero;
           }
           ck.is_true("off_locus_points_miss_some_member", off_ok);

           auto member = irreducible_member(sys.basis(), seed);
           ck.is_true("irreducible_member_found", member.has_value());
         }});

    t->push_back(
        {{"ee2", "(h0,h1)(I_A(1,2)) = (7,0) for twistor pairs and a sampled "
                 "member is smooth at 50 surface points",
          false, false, 0, 0, 20},
         nullptr,
         [](Checker& ck, int, int, std::uint64_t seed) {
           Configuration cfg = draw_twistor_star(2, seed);
           LinearSystem sys(cfg, 1, 2);
           ck.eq("h0", sys.dims().h0, 7);
           ck.eq("h1", sys.dims().h1, 0);

           auto [l, r] = connecting_curves(cfg.conics[0], cfg.conics[1]);
           bool contains_l = true;
           for (const BiForm& f : sys.basis())
             contains_l = contains_l && contains_curve(f, l.param());
           ck.is_true("L_in_base_locus", contains_l);

           BiForm member = random_member(sys.basis(), derive_seed(seed, 5));
           long singular_found = 0;
           for (int k = 0; k < 50; ++k) {
             auto [p, lpt] = sample_surface_point(member, derive_seed(seed, 100 + k));
             if (is_singular_at(member, p, lpt)) ++singular_found;
           }
           ck.eq("singular_points_among_50_samples", singular_found, 0);
         }});

    t->push_back(
        {{"n21", "(h0,h1)(I_A(1,2)) = (3,0) for a twistor triple with no three "
                 "collinear; the three connecting fibers lie in the base locus",
          false, false, 0, 0, 20},
         nullptr,
         [](Checker& ck, int, int, std::uint64_t seed) {
           Configuration cfg = draw_twistor_star(3, seed);
           ck.eq("h0_11", ideal_dims(cfg, 1, 1).h0, 0);
           LinearSystem sys(cfg, 1, 2);
           ck.eq("h0", sys.dims().h0, 3);
           ck.eq("h1", sys.dims().h1, 0);

           bool fibers_contained = true;
           for (std::size_t i = 0; i < 3; ++i)
             for (std::size_t j = i + 1; j < 3; ++j) {
               auto [l, r] = connecting_curves(cfg.conics[i], cfg.conics[j]);
               for (const BiForm& f : sys.basis())
                 fibers_contained = fibers_contained && contains_curve(f, l.param());
             }
           ck.is_true("connecting_fibers_in_base_locus", fibers_contained);

           auto member = irreducible_member(sys.basis(), seed);
           ck.is_true("irreducible_member_found", member.has_value());
         }});

    t->push_back(
        {{"bo2-aaa1",
          "collinear twistor 4-tuples off (1,1) surfaces: |I_A(1,2)| is a pencil "
          "with exactly 4 reducible members, all members singular along the "
          "witness fiber",
          false, false, 0, 0, 20},
         nullptr,
         [](Checker& ck, int, int, std::uint64_t seed) {
           Configuration cfg = draw_twistor_collinear(4, seed);
           if (ideal_dims(cfg, 1, 1).h0 != 0)
             throw HypothesisNotMet{"4-tuple lies on a (1,1) surface"};
           LinearSystem sys(cfg, 1, 2);
           ck.eq("h0", sys.dims().h0, 2);

           std::vector<BiForm> products;
           try {
             products = reducible_members(cfg);
           } catch (const HypothesisFailed& e) {
             ck.is_true(std::string("reducible_members: ") + e.what(), false);
             return;
           }
           ck.eq("reducible_members", static_cast<long>(products.size()), 4);
           bool pairwise = true, in_pencil = true, all_reducible = true;
           for (std::size_t i = 0; i < products.size(); ++i) {
             all_reducible = all_reducible && !is_irreducible(products[i]);
             in_pencil = in_pencil && in_span(sys.basis(), products[i]);
             for (std::size_t j = i + 1; j < products.size(); ++j)
               pairwise = pairwise && !proportional(products[i], products[j]);
           }
           ck.is_true("products_pairwise_distinct", pairwise);
           ck.is_true("products_in_pencil", in_pencil);
           ck.is_true("products_reducible", all_reducible);

           auto member = irreducible_member(sys.basis(), seed);
           ck.is_true("irreducible_member_found", member.has_value());

           CurveParam l = cfg.collinear_witness->param();
           bool singular = true;
           if (member) singular = singular && singular_along(*member, l, 5);
           for (const BiForm& f : products)
             singular = singular && singular_along(f, l, 5);
           ck.is_true("members_singular_along_L", singular);
         }});

    t->push_back(
        {{"bo5", "any member of |I_A(1,2)| through 5 collinear twistor fibers "
                 "splits off a (0,1) vertical factor leaving a (1,1) component "
                 "through at least 4 of them",
          false, false, 0, 0, 20},
         nullptr,
         [](Checker& ck, int, int, std::uint64_t seed) {
           // constructed instance with a nonempty system
           SpecialCollinear sp = special_collinear_instance(seed, 1);
           LinearSystem sys(sp.config, 1, 2);
           ck.eq("special.h0", sys.dims().h0, 1);
           if (sys.dims().h0 == 1)
             check_splitting(ck, "special", sys.basis()[0], sp.config,
                             sp.off_surface, 1);

           // random collinear draw: generically empty at (1,2)
           Configuration cfg = draw_twistor_collinear(5, derive_seed(seed, 1));
           LinearSystem rnd(cfg, 1, 2);
           ck.note("random T(5,L) draw has h0 = " + std::to_string(rnd.dims().h0));
           bool all_reducible = true;
           for (const BiForm& f : rnd.basis())
             all_reducible = all_reducible && !is_irreducible(f);
           ck.is_true("random_draw_members_all_reducible", all_reducible);
         }});

    t->push_back(
        {{"n6-probe", "no member of |I_A(1,2)| through 5 twistor fibers in "
                      "general position; collinear 5-tuples only carry reducible "
                      "members",
          false, false, 0, 0, 20},
         nullptr,
         [](Checker& ck, int, int, std::uint64_t seed) {
           Configuration star = draw_twistor_star(5, seed);
           ck.eq("h0_star", ideal_dims(star, 1, 2).h0, 0);

           Configuration col = draw_twistor_collinear(5, derive_seed(seed, 2));
           LinearSystem sys(col, 1, 2);
           bool all_reducible = true;
           for (const BiForm& f : sys.basis())
             all_reducible = all_reducible && !is_irreducible(f);
           ck.is_true("collinear_members_reducible", all_reducible);
           ck.note("collinear draw has h0 = " + std::to_string(sys.dims().h0));
         }});

    t->push_back(
        {{"n7-probe", "no member of |I_A(1,3)| through 6 twistor fibers in "
                      "general position; constructed collinear instances split "
                      "off their vertical part",
          false, false, 0, 0, 20},
         nullptr,
         [](Checker& ck, int, int, std::uint64_t seed) {
           Configuration star = draw_twistor_star(6, seed);
           ck.eq("h0_star", ideal_dims(star, 1, 3).h0, 0);

           SpecialCollinear sp = special_collinear_instance(derive_seed(seed, 3), 2);
           LinearSystem sys(sp.config, 1, 3);
           ck.eq("special.h0", sys.dims().h0, 1);
           if (sys.dims().h0 == 1)
             check_splitting(ck, "special", sys.basis()[0], sp.config,
                             sp.off_surface, 2);
         }});

    t->push_back(
        {{"primo-caso", "p1 l1 - p2 l2 contains the twistor fibers over [0:1:w] "
                        "with |w| = 1 and the six coordinate fibers",
          false, false, 0, 0, 1},
         nullptr,
         [](Checker& ck, int, int, std::uint64_t) {
           BiForm m = p1l1_minus_p2l2();
           std::vector<GaussRat> ws{GaussRat(1), GaussRat(-1), GaussRat::i(),
                                    -GaussRat::i(), GaussRat::make(3, 5, 4, 5)};
           bool fibers = true;
           for (const auto& w : ws) {
             Conic fiber = make_twistor_fiber(ProjPoint(GaussRat(0), GaussRat(1), w));
             fibers = fibers && contains_conic(m, fiber);
           }
           ck.is_true("unit_circle_twistor_fibers_contained", fibers);

           bool coord = true;
           for (int i = 0; i < 3; ++i) {
             FiberCurve f1{FiberKind::Pi1, ProjPoint::unit(i)};
             FiberCurve f2{FiberKind::Pi2, ProjPoint::unit(i)};
             coord = coord && contains_curve(m, f1.param()) &&
                     contains_curve(m, f2.param());
           }
           ck.is_true("coordinate_fibers_contained", coord);

           ck.is_true("surface_irreducible", is_irreducible(m));
           ck.is_true("surface_j_invariant",
                      proportional(m.normal_form(), m.j_image().normal_form()));

           // a fiber with |w| != 1 stays outside
           Conic off = make_twistor_fiber(ProjPoint(GaussRat(0), GaussRat(1),
                                                    GaussRat(2)));
           ck.is_true("norm_2_fiber_not_contained", !contains_conic(m, off));
         }});

    t->push_back(
        {{"fiber-consistency", "x and j(x) lie on the twistor fiber over pi(x); "
                               "the disjointness criterion matches the incidence "
                               "solver",
          false, false, 0, 0, 1},
         nullptr,
         [](Checker& ck, int, int, std::uint64_t seed) {
           Rng rng(derive_seed(seed, 1));
           long consistent = 0;
           for (int k = 0; k < 100; ++k) {
             auto [p, l] = random_flag_point(rng);
             ProjPoint q = twistor_project(p, l);
             Conic fiber = make_twistor_fiber(q);
             if (point_on_conic(fiber, p, l) &&
                 point_on_conic(fiber, l.conj(), p.conj()))
               ++consistent;
           }
           ck.eq("fiber_consistency_100", consistent, 100);

           auto random_smooth = [&rng]() {
             for (;;) {
               ProjPoint q = random_point(rng), m = random_point(rng);
               if (!dot(q, m).is_zero()) return Conic(q, m);
             }
           };
           long agree = 0;
           int pairs = 0;
           while (pairs < 200) {
             Conic c1 = rng.uniform(0, 1) ? make_twistor_fiber(random_point(rng))
                                          : random_smooth();
             Conic c2 = rng.uniform(0, 1) ? make_twistor_fiber(random_point(rng))
                                          : random_smooth();
             if (c1 == c2) continue;
             ++pairs;
             if (are_disjoint(c1, c2) == !conics_share_point(c1, c2)) ++agree;
           }
           ck.eq("disjointness_vs_solver_200", agree, 200);
         }});

    return t;
  }();
  return *table;
}

const ScenarioDef& find_def(const std::string& name) {
  for (const auto& def : defs())
    if (def.info.name == name) return def;
  throw UnknownScenario(name);
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_registry() {
  static const std::vector<ScenarioInfo>* table = [] {
    auto* t = new std::vector<ScenarioInfo>;
    for (const auto& def : defs()) t->push_back(def.info);
    return t;
  }();
  return *table;
}

Report run_scenario(const std::string& name, const ScenarioParams& params,
                    std::uint64_t seed) {
  const ScenarioDef& def = find_def(name);
  Report report;
  report.scenario = def.info.name;
  report.claim = def.info.claim;
  report.seed = seed;
  report.d = params.d.value_or(def.info.default_d);
  report.n = params.n.value_or(def.info.default_n);
  report.trials = params.trials.value_or(def.info.default_trials);

  if (report.trials < 1 || report.trials > 1000)
    throw BadParams("trials must be within 1..1000");
  if (def.info.uses_d && (report.d < 0 || report.d > 4))
    throw BadParams("d must be within 0..4");
  if (def.info.uses_n && (report.n < 0 || report.n > 8))
    throw BadParams("n must be within 0..8");
  if (def.validate) def.validate(report.d, report.n);

  auto start = std::chrono::steady_clock::now();
  const int kMaxHypRetries = 8;
  for (int trial = 0; trial < report.trials; ++trial) {
    TrialRecord rec;
    rec.index = trial;
    for (int attempt = 0;; ++attempt) {
      std::uint64_t s =
          derive_seed(seed, static_cast<std::uint64_t>(trial) * 64 + attempt);
      rec.seed = s;
      rec.retries = attempt;
      Checker ck;
      try {
        def.run(ck, report.d, report.n, s);
      } catch (const HypothesisNotMet& h) {
        if (attempt < kMaxHypRetries) continue;
        rec.status = "hypothesis-not-met";
        rec.notes.push_back(h.reason);
        break;
      }
      rec.checks = std::move(ck.checks);
      rec.notes = std::move(ck.notes);
      rec.status = [&] {
        for (const auto& c : rec.checks)
          if (!c.ok) return "fail";
        return "pass";
      }();
      break;
    }
    if (rec.status == "pass")
      ++report.pass;
    else if (rec.status == "fail")
      ++report.fail;
    else
      ++report.hypothesis_not_met;
    report.trial_records.push_back(std::move(rec));
  }
  report.overall = report.fail == 0 ? "pass" : "fail";
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

Json report_to_json(const Report& report) {
  Json trials = Json::array();
  for (const auto& t : report.trial_records) {
    Json checks = Json::array();
    for (const auto& c : t.checks)
      checks.push_back(Json{{"key", c.key},
                            {"relation", c.relation},
                            {"expected", c.expected},
                            {"actual", c.actual},
                            {"ok", c.ok}});
    trials.push_back(Json{{"trial", t.index},
                          {"seed", t.seed},
                          {"status", t.status},
                          {"retries", t.retries},
                          {"checks", std::move(checks)},
                          {"notes", t.notes}});
  }
  Json body{{"scenario", report.scenario},
            {"claim", report.claim},
            {"params",
             Json{{"d", report.d},
                  {"n", report.n},
                  {"trials", report.trials},
                  {"seed", report.seed}}},
            {"trials", std::move(trials)},
            {"verdict", Json{{"pass", report.pass},
                             {"fail", report.fail},
                             {"hypothesis_not_met", report.hypothesis_not_met},
                             {"overall", report.overall}}}};
  return Json{{"report", std::move(body)},
              {"envelope", Json{{"wall_time_ms", report.wall_ms}}}};
}

std::string report_to_text(const Report& report) {
  std::ostringstream out;
  out << "scenario: " << report.scenario << "\n";
  out << "claim:    " << report.claim << "\n";
  out << "params:   d=" << report.d << " n=" << report.n
      << " trials=" << report.trials << " seed=" << report.seed << "\n\n";
  for (const auto& t : report.trial_records) {
    out << "trial " << t.index << "  seed " << t.seed << "  " << t.status;
    if (t.retries > 0) out << "  (retries " << t.retries << ")";
    out << "\n";
    for (const auto& c : t.checks)
      out << "    " << (c.ok ? "ok  " : "FAIL") << "  " << c.key << " "
          << c.relation << " " << c.expected << "  actual " << c.actual << "\n";
    for (const auto& n : t.notes) out << "    note: " << n << "\n";
  }
  out << "\nverdict: " << report.overall << " (" << report.pass << " pass, "
      << report.fail << " fail, " << report.hypothesis_not_met
      << " hypothesis-not-met)\n";
  return out.str();
}

std::string report_to_csv(const Report& report) {
  std::ostringstream out;
  out << "scenario,trial,seed,status,key,relation,expected,actual,ok\n";
  for (const auto& t : report.trial_records) {
    if (t.checks.empty()) {
      out << report.scenario << "," << t.index << "," << t.seed << "," << t.status
          << ",,,,,\n";
      continue;
    }
    for (const auto& c : t.checks)
      out << report.scenario << "," << t.index << "," << t.seed << "," << t.status
          << "," << c.key << "," << c.relation << "," << c.expected << ","
          << c.actual << "," << (c.ok ? "true" : "false") << "\n";
  }
  return out.str();
}

}  // namespace flagtwist
