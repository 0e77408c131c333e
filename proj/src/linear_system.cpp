#include "flagtwist/linear_system.hpp"

#include <cassert>

#include "flagtwist/errors.hpp"
#include "flagtwist/rng.hpp"

namespace flagtwist {

long h0_flag(int a, int b) {
  return static_cast<long>(a + 1) * (b + 1) * (a + b + 2) / 2;
}

namespace {

// Rows of a form's coefficient vector seen inside the ambient monomial
// space, used for span/rank tests on normal forms.
ExactMatrix stack_forms(const std::vector<BiForm>& forms) {
  assert(!forms.empty());
  const std::size_t cols = forms[0].coeffs().size();
  ExactMatrix m(forms.size(), cols);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    assert(forms[i].coeffs().size() == cols);
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = forms[i].coeff(j);
  }
  return m;
}

}  // namespace

LinearSystem::LinearSystem(const Configuration& config, int a, int b)
    : config_(config), a_(a), b_(b) {
  if (a < 0 || b < 0 || (a == 0 && b == 0))
    throw BadParams("ideal_dims: bidegree must be nonnegative and nonzero");
  for (std::size_t i = 0; i < config.size(); ++i)
    for (std::size_t j = i + 1; j < config.size(); ++j)
      if (!are_disjoint(config.conics[i], config.conics[j])) throw NotDisjoint();

  const BiBasis& basis = BiBasis::get(a, b);
  const std::size_t cols = basis.size();
  const std::size_t rows_per_conic = static_cast<std::size_t>(a + b) + 1;
  const std::size_t n = config.size();

  // One block of a+b+1 rows per conic: the symbolic coefficients of the
  // restriction of each ambient monomial to the conic.
  matrix_ = ExactMatrix(n * rows_per_conic, cols);
  for (std::size_t ci = 0; ci < n; ++ci) {
    CurveParam param = conic_param(config.conics[ci]);
    for (std::size_t j = 0; j < cols; ++j) {
      BiForm mono = BiForm::monomial_form(a, b, basis.monomials()[j], GaussRat(1));
      STPoly st = mono.restrict_to(param);
      assert(st.size() == rows_per_conic);
      for (std::size_t k = 0; k < rows_per_conic; ++k)
        matrix_.at(ci * rows_per_conic + k, j) = st[k];
    }
  }

  auto kernel = matrix_.nullspace();
  const long phi_dim =
      (a >= 1 && b >= 1) ? static_cast<long>(BiBasis::get(a - 1, b - 1).size()) : 0;
  dims_.h0 = static_cast<long>(kernel.size()) - phi_dim;
  dims_.chi = h0_flag(a, b) - static_cast<long>(n) * (a + b + 1);
  dims_.h1 = dims_.h0 - dims_.chi;
  assert(dims_.h0 >= 0 && dims_.h1 >= 0);

  // Quotient out the flag-form multiples: normal forms of the kernel span a
  // space of dimension exactly h0.
  if (dims_.h0 > 0) {
    std::vector<BiForm> normals;
    normals.reserve(kernel.size());
    for (const auto& v : kernel) {
      BiForm f(a, b);
      for (std::size_t j = 0; j < cols; ++j)
        if (!v[j].is_zero()) f.add_coeff(basis.monomials()[j], v[j]);
      BiForm nf = f.normal_form();
      if (!nf.is_zero()) normals.push_back(std::move(nf));
    }
    std::vector<std::size_t> piv;
    ExactMatrix reduced = stack_forms(normals).rref(&piv);
    assert(static_cast<long>(piv.size()) == dims_.h0);
    for (std::size_t i = 0; i < piv.size(); ++i) {
      BiForm f(a, b);
      for (std::size_t j = 0; j < cols; ++j)
        if (!reduced.at(i, j).is_zero())
          f.add_coeff(basis.monomials()[j], reduced.at(i, j));
      basis_.push_back(std::move(f));
    }
  }
}

SystemDims ideal_dims(const Configuration& config, int a, int b) {
  return LinearSystem(config, a, b).dims();
}

std::vector<BiForm> system_basis(const Configuration& config, int a, int b) {
  return LinearSystem(config, a, b).basis();
}

BiForm random_member(const std::vector<BiForm>& basis, std::uint64_t seed) {
  if (basis.empty()) throw EmptySystem();
  Rng rng(seed);
  for (;;) {
    BiForm out(basis[0].a(), basis[0].b());
    bool nonzero = false;
    for (const BiForm& f : basis) {
      long c = rng.uniform(-9, 9);
      if (c == 0) continue;
      nonzero = true;
      out += f.scaled(GaussRat(c));
    }
    if (nonzero && !out.is_zero_on_flag()) return out;
  }
}

std::optional<BiForm> divides(const BiForm& g, const BiForm& f) {
  const int da = f.a() - g.a(), db = f.b() - g.b();
  if (da < 0 || db < 0) throw BadParams("divides: divisor bidegree too large");
  if (g.is_zero_on_flag()) throw ZeroDivisor();

  // Solve NF(G*H) = NF(F) in the coefficients of H; a solution is exactly a
  // witness pair (H, K) for F = G*H + Phi*K.
  const BiBasis& hbasis = BiBasis::get(da, db);
  const std::size_t hcols = hbasis.size();
  const BiForm target = f.normal_form();
  const std::size_t rows = target.coeffs().size();

  ExactMatrix m(rows, hcols);
  for (std::size_t j = 0; j < hcols; ++j) {
    BiForm mono = BiForm::monomial_form(da, db, hbasis.monomials()[j], GaussRat(1));
    BiForm col = multiply(g, mono).normal_form();
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = col.coeff(i);
  }
  std::vector<GaussRat> rhs(rows);
  for (std::size_t i = 0; i < rows; ++i) rhs[i] = target.coeff(i);

  auto sol = m.solve(rhs);
  if (!sol) return std::nullopt;
  BiForm h(da, db);
  for (std::size_t j = 0; j < hcols; ++j)
    if (!(*sol)[j].is_zero()) h.add_coeff(hbasis.monomials()[j], (*sol)[j]);
  assert((f - multiply(g, h)).is_zero_on_flag());
  return h;
}

HomogPoly3 vertical_gcd(const BiForm& f) {
  if (f.a() != 1) throw BadParams("vertical_gcd: first degree must be 1");
  BiForm nf = f.normal_form();
  if (nf.is_zero()) throw ZeroOnFlag();

  std::array<HomogPoly3, 3> a;
  for (int i = 0; i < 3; ++i) a[i] = nf.p_coefficient(i);
  std::array<HomogPoly3, 3> lv;
  for (int i = 0; i < 3; ++i) lv[i] = HomogPoly3::variable(i);

  // Vertical vector C = A(l) x l; its zero locus carries the pi2-fibers
  // contained in the surface.
  std::vector<HomogPoly3> c(3);
  for (int i = 0; i < 3; ++i)
    c[i] = a[(i + 1) % 3] * lv[(i + 2) % 3] - a[(i + 2) % 3] * lv[(i + 1) % 3];
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) throw VerticalVectorZero();
  return gcd_homog(c);
}

bool is_irreducible(const BiForm& f) { return vertical_gcd(f).is_constant(); }

SurfaceAnalysis analyze_surface(const BiForm& f, int samples, std::uint64_t seed) {
  SurfaceAnalysis out{f.normal_form(), vertical_gcd(f), false, {}};
  out.irreducible = out.vertical_divisor.is_constant();
  for (int i = 0; i < samples; ++i) {
    auto [p, l] = sample_surface_point(f, derive_seed(seed, i));
    if (is_singular_at(f, p, l)) out.singular_points_found.emplace_back(p, l);
  }
  return out;
}

bool is_singular_at(const BiForm& f, const ProjPoint& p, const ProjPoint& l) {
  if (!dot(p, l).is_zero()) throw NotOnFlag();
  if (!f.evaluate(p.coords(), l.coords()).is_zero()) throw NotOnSurface();
  std::array<GaussRat, 6> gf = f.gradient_at(p.coords(), l.coords());
  std::array<GaussRat, 6> gphi{l[0], l[1], l[2], p[0], p[1], p[2]};
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (gf[i] * gphi[j] != gf[j] * gphi[i]) return false;
  return true;
}

bool singular_along(const BiForm& f, const CurveParam& curve, int k) {
  if (!st_is_zero(f.restrict_to(curve))) throw NotOnSurface();
  for (int i = 0; i < k; ++i) {
    auto [pc, lc] = curve.at(GaussRat(i), GaussRat(1));
    if (!is_singular_at(f, ProjPoint(pc), ProjPoint(lc))) return false;
  }
  return true;
}

bool contains_curve(const BiForm& f, const CurveParam& curve) {
  return st_is_zero(f.restrict_to(curve));
}

bool contains_conic(const BiForm& f, const Conic& c) {
  return contains_curve(f, conic_param(c));
}

std::pair<ProjPoint, ProjPoint> sample_surface_point(const BiForm& f,
                                                     std::uint64_t seed) {
  if (f.a() != 1) throw BadParams("sample_surface_point: first degree must be 1");
  BiForm nf = f.normal_form();
  if (nf.is_zero()) throw ZeroOnFlag();
  std::array<HomogPoly3, 3> a;
  for (int i = 0; i < 3; ++i) a[i] = nf.p_coefficient(i);

  Rng rng(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    ProjPoint l = random_point(rng);
    std::array<GaussRat, 3> av;
    for (int i = 0; i < 3; ++i) av[i] = a[i].evaluate(l[0], l[1], l[2]);
    std::array<GaussRat, 3> p = cross_raw(l.coords(), av);
    if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) continue;
    ProjPoint pp(p);
    assert(nf.evaluate(pp.coords(), l.coords()).is_zero());
    return {pp, l};
  }
  throw ExhaustedRetries("sample_surface_point: A(l) parallel to l persistently");
}

std::vector<BiForm> reducible_members(const Configuration& config) {
  if (config.size() != 4) throw BadParams("reducible_members: needs 4 conics");
  if (!config.collinear_witness)
    throw HypothesisFailed("reducible_members: configuration is not collinear");
  if (ideal_dims(config, 1, 1).h0 != 0)
    throw HypothesisFailed("reducible_members: a (1,1) surface contains the tuple");

  LinearSystem pencil(config, 1, 2);
  std::vector<BiForm> out;
  for (std::size_t i = 0; i < 4; ++i) {
    Configuration rest;
    for (std::size_t j = 0; j < 4; ++j)
      if (j != i) rest.conics.push_back(config.conics[j]);
    LinearSystem triple(rest, 1, 1);
    if (triple.dims().h0 != 1)
      throw HypothesisFailed("reducible_members: h0 of a 3-subset is not 1");
    const BiForm& m = triple.basis()[0];
    BiForm y = BiForm::linear_l(config.conics[i].q.coords());
    BiForm product = multiply(m, y).normal_form();
    if (!in_span(pencil.basis(), product))
      throw HypothesisFailed("reducible_members: product not in the system span");
    out.push_back(std::move(product));
  }
  return out;
}

std::pair<long, long> bidegree_of_intersection(std::pair<long, long> ab,
                                               std::pair<long, long> cd) {
  auto [a, b] = ab;
  auto [c, d] = cd;
  return {a * d + b * (c + d), a * (c + d) + b * c};
}

bool in_span(const std::vector<BiForm>& basis, const BiForm& f) {
  BiForm nf = f.normal_form();
  if (nf.is_zero()) return true;
  if (basis.empty()) return false;
  std::vector<BiForm> rows;
  rows.reserve(basis.size() + 1);
  for (const BiForm& g : basis) rows.push_back(g.normal_form());
  std::size_t base_rank = stack_forms(rows).rank();
  rows.push_back(nf);
  return stack_forms(rows).rank() == base_rank;
}

}  // namespace flagtwist
