#include "flagtwist/biform.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>

#include "flagtwist/errors.hpp"

namespace flagtwist {

namespace {

std::vector<Exp3> exponents_of_degree(int d) {
  std::vector<Exp3> out;
  for (int e0 = d; e0 >= 0; --e0)
    for (int e1 = d - e0; e1 >= 0; --e1) out.push_back({e0, e1, d - e0 - e1});
  return out;
}

GaussRat pow_gr(const GaussRat& x, int n) {
  GaussRat r(1);
  for (int k = 0; k < n; ++k) r *= x;
  return r;
}

}  // namespace

BiBasis::BiBasis(int a, int b) : a_(a), b_(b) {
  for (const Exp3& pe : exponents_of_degree(a))
    for (const Exp3& le : exponents_of_degree(b)) mons_.push_back({pe, le});
  assert(std::is_sorted(mons_.begin(), mons_.end()));
}

const BiBasis& BiBasis::get(int a, int b) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<BiBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{a, b}];
  if (!slot) slot.reset(new BiBasis(a, b));
  return *slot;
}

std::size_t BiBasis::index(const BiMonomial& m) const {
  auto it = std::lower_bound(mons_.begin(), mons_.end(), m);
  assert(it != mons_.end() && *it == m);
  return static_cast<std::size_t>(it - mons_.begin());
}

std::vector<BiMonomial> monomial_basis(int a, int b) {
  return BiBasis::get(a, b).monomials();
}

bool st_is_zero(const STPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const GaussRat& c) { return c.is_zero(); });
}

STPoly st_mul(const STPoly& a, const STPoly& b) {
  STPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

STPoly st_pow(const STPoly& a, int n) {
  STPoly out{GaussRat(1)};
  for (int k = 0; k < n; ++k) out = st_mul(out, a);
  return out;
}

GaussRat st_eval(const STPoly& p, const GaussRat& s, const GaussRat& t) {
  const int d = static_cast<int>(p.size()) - 1;
  GaussRat out(0);
  for (int k = 0; k <= d; ++k) out += p[k] * pow_gr(s, d - k) * pow_gr(t, k);
  return out;
}

bool CurveParam::valid() const {
  // p(s,t) . l(s,t) must vanish identically.
  STPoly dot(static_cast<std::size_t>(pdeg + ldeg) + 1);
  for (int i = 0; i < 3; ++i) {
    STPoly prod = st_mul(pmap[i], lmap[i]);
    for (std::size_t k = 0; k < prod.size(); ++k) dot[k] += prod[k];
  }
  if (!st_is_zero(dot)) return false;
  // Neither coordinate map may vanish at a parameter value. Degree-0 maps
  // are nonzero constants; degree-1 maps need two independent rows.
  auto nonvanishing = [](const std::array<STPoly, 3>& map, int deg) {
    if (deg == 0) {
      for (const auto& c : map)
        if (!c[0].is_zero()) return true;
      return false;
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (map[i][0] * map[j][1] != map[i][1] * map[j][0]) return true;
    return false;
  };
  return nonvanishing(pmap, pdeg) && nonvanishing(lmap, ldeg);
}

std::pair<std::array<GaussRat, 3>, std::array<GaussRat, 3>> CurveParam::at(
    const GaussRat& s, const GaussRat& t) const {
  std::array<GaussRat, 3> p, l;
  for (int i = 0; i < 3; ++i) {
    p[i] = st_eval(pmap[i], s, t);
    l[i] = st_eval(lmap[i], s, t);
  }
  return {p, l};
}

BiForm::BiForm(int a, int b) : a_(a), b_(b), c_(BiBasis::get(a, b).size()) {
  assert(a >= 0 && b >= 0);
}

BiForm BiForm::monomial_form(int a, int b, const BiMonomial& m, const GaussRat& c) {
  BiForm f(a, b);
  f.set_coeff(m, c);
  return f;
}

BiForm BiForm::flag_form() {
  BiForm f(1, 1);
  for (int i = 0; i < 3; ++i) {
    Exp3 e{0, 0, 0};
    e[i] = 1;
    f.set_coeff({e, e}, GaussRat(1));
  }
  return f;
}

BiForm BiForm::one() { return monomial_form(0, 0, BiMonomial{}, GaussRat(1)); }

BiForm BiForm::linear_p(const std::array<GaussRat, 3>& alpha) {
  BiForm f(1, 0);
  for (int i = 0; i < 3; ++i) {
    Exp3 e{0, 0, 0};
    e[i] = 1;
    f.set_coeff({e, {0, 0, 0}}, alpha[i]);
  }
  return f;
}

BiForm BiForm::linear_l(const std::array<GaussRat, 3>& beta) {
  BiForm f(0, 1);
  for (int i = 0; i < 3; ++i) {
    Exp3 e{0, 0, 0};
    e[i] = 1;
    f.set_coeff({{0, 0, 0}, e}, beta[i]);
  }
  return f;
}

BiForm BiForm::from_l_poly(const HomogPoly3& g) {
  assert(!g.is_zero());
  BiForm f(0, g.degree());
  for (const auto& [e, c] : g.terms()) f.set_coeff({{0, 0, 0}, e}, c);
  return f;
}

GaussRat BiForm::coeff(const BiMonomial& m) const {
  return c_[BiBasis::get(a_, b_).index(m)];
}

void BiForm::set_coeff(const BiMonomial& m, const GaussRat& v) {
  c_[BiBasis::get(a_, b_).index(m)] = v;
}

void BiForm::add_coeff(const BiMonomial& m, const GaussRat& v) {
  c_[BiBasis::get(a_, b_).index(m)] += v;
}

bool BiForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const GaussRat& x) { return x.is_zero(); });
}

bool BiForm::is_zero_on_flag() const { return normal_form().is_zero(); }

BiForm BiForm::operator-() const { return scaled(GaussRat(-1)); }

BiForm& BiForm::operator+=(const BiForm& o) {
  if (a_ != o.a_ || b_ != o.b_) throw BidegreeMismatch("add: bidegrees differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

BiForm& BiForm::operator-=(const BiForm& o) {
  if (a_ != o.a_ || b_ != o.b_) throw BidegreeMismatch("sub: bidegrees differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

BiForm BiForm::scaled(const GaussRat& c) const {
  BiForm out(a_, b_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * c;
  return out;
}

GaussRat BiForm::evaluate(const std::array<GaussRat, 3>& p,
                          const std::array<GaussRat, 3>& l) const {
  const auto& mons = BiBasis::get(a_, b_).monomials();
  GaussRat out(0);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (c_[i].is_zero()) continue;
    GaussRat term = c_[i];
    for (int k = 0; k < 3; ++k)
      term *= pow_gr(p[k], mons[i].p[k]) * pow_gr(l[k], mons[i].l[k]);
    out += term;
  }
  return out;
}

BiForm multiply(const BiForm& f, const BiForm& g) {
  BiForm out(f.a() + g.a(), f.b() + g.b());
  const auto& mf = BiBasis::get(f.a(), f.b()).monomials();
  const auto& mg = BiBasis::get(g.a(), g.b()).monomials();
  for (std::size_t i = 0; i < mf.size(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    for (std::size_t j = 0; j < mg.size(); ++j) {
      if (g.coeff(j).is_zero()) continue;
      BiMonomial m;
      for (int k = 0; k < 3; ++k) {
        m.p[k] = mf[i].p[k] + mg[j].p[k];
        m.l[k] = mf[i].l[k] + mg[j].l[k];
      }
      out.add_coeff(m, f.coeff(i) * g.coeff(j));
    }
  }
  return out;
}

BiForm BiForm::normal_form() const {
  // Each monomial divisible by (p0*l0)^u rewrites in closed form as
  // p0^(e0-u) l0^(f0-u) (-(p1*l1 + p2*l2))^u with u = min(e0, f0).
  BiForm out(a_, b_);
  const auto& mons = BiBasis::get(a_, b_).monomials();
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (c_[i].is_zero()) continue;
    const BiMonomial& m = mons[i];
    int u = std::min(m.p[0], m.l[0]);
    if (u == 0) {
      out.add_coeff(m, c_[i]);
      continue;
    }
    // Binomial expansion of (p1*l1 + p2*l2)^u, sign (-1)^u.
    mpz_class binom = 1;
    for (int k = 0; k <= u; ++k) {
      BiMonomial t = m;
      t.p[0] -= u;
      t.l[0] -= u;
      t.p[1] += k;
      t.l[1] += k;
      t.p[2] += u - k;
      t.l[2] += u - k;
      GaussRat factor(mpq_class(binom), mpq_class(0));
      if (u % 2 == 1) factor = -factor;
      out.add_coeff(t, c_[i] * factor);
      binom = binom * (u - k) / (k + 1);
    }
  }
  return out;
}

BiForm BiForm::j_image() const {
  BiForm out(b_, a_);
  const auto& mons = BiBasis::get(a_, b_).monomials();
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (c_[i].is_zero()) continue;
    out.add_coeff({mons[i].l, mons[i].p}, c_[i].conj());
  }
  return out;
}

BiForm BiForm::partial(int var) const {
  assert(var >= 0 && var < 6);
  const bool is_p = var < 3;
  const int k = is_p ? var : var - 3;
  const int na = is_p ? std::max(a_ - 1, 0) : a_;
  const int nb = is_p ? b_ : std::max(b_ - 1, 0);
  BiForm out(na, nb);
  if ((is_p && a_ == 0) || (!is_p && b_ == 0)) return out;  // constant in var
  const auto& mons = BiBasis::get(a_, b_).monomials();
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (c_[i].is_zero()) continue;
    BiMonomial m = mons[i];
    int e = is_p ? m.p[k] : m.l[k];
    if (e == 0) continue;
    if (is_p)
      --m.p[k];
    else
      --m.l[k];
    out.add_coeff(m, c_[i] * GaussRat(e));
  }
  return out;
}

std::array<GaussRat, 6> BiForm::gradient_at(const std::array<GaussRat, 3>& p,
                                            const std::array<GaussRat, 3>& l) const {
  std::array<GaussRat, 6> g;
  for (int v = 0; v < 6; ++v) g[v] = partial(v).evaluate(p, l);
  return g;
}

STPoly BiForm::restrict_to(const CurveParam& curve) const {
  const int deg = a_ * curve.pdeg + b_ * curve.ldeg;
  STPoly out(static_cast<std::size_t>(deg) + 1);
  const auto& mons = BiBasis::get(a_, b_).monomials();
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (c_[i].is_zero()) continue;
    STPoly term{c_[i]};
    for (int k = 0; k < 3; ++k) {
      if (mons[i].p[k] > 0) term = st_mul(term, st_pow(curve.pmap[k], mons[i].p[k]));
      if (mons[i].l[k] > 0) term = st_mul(term, st_pow(curve.lmap[k], mons[i].l[k]));
    }
    assert(term.size() == out.size());
    for (std::size_t k = 0; k < term.size(); ++k) out[k] += term[k];
  }
  return out;
}

HomogPoly3 BiForm::p_coefficient(int i) const {
  assert(a_ == 1);
  HomogPoly3 out;
  const auto& mons = BiBasis::get(a_, b_).monomials();
  for (std::size_t k = 0; k < mons.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (mons[k].p[i] == 1) out.add_term(mons[k].l, c_[k]);
  }
  return out;
}

HomogPoly3 BiForm::as_l_poly() const {
  assert(a_ == 0);
  HomogPoly3 out;
  const auto& mons = BiBasis::get(a_, b_).monomials();
  for (std::size_t k = 0; k < mons.size(); ++k)
    if (!c_[k].is_zero()) out.add_term(mons[k].l, c_[k]);
  return out;
}

std::string BiForm::str() const {
  if (is_zero()) return "0";
  static const std::array<std::string, 3> pn{"p0", "p1", "p2"};
  static const std::array<std::string, 3> ln{"l0", "l1", "l2"};
  const auto& mons = BiBasis::get(a_, b_).monomials();
  std::string out;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string term = "(" + c_[i].str() + ")";
    for (int k = 0; k < 3; ++k) {
      if (mons[i].p[k] > 0) {
        term += "*" + pn[k];
        if (mons[i].p[k] > 1) term += "^" + std::to_string(mons[i].p[k]);
      }
    }
    for (int k = 0; k < 3; ++k) {
      if (mons[i].l[k] > 0) {
        term += "*" + ln[k];
        if (mons[i].l[k] > 1) term += "^" + std::to_string(mons[i].l[k]);
      }
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

bool proportional(const BiForm& f, const BiForm& g) {
  if (f.bidegree() != g.bidegree()) return false;
  const auto& fc = f.coeffs();
  const auto& gc = g.coeffs();
  std::size_t i0 = fc.size();
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (!fc[i].is_zero() || !gc[i].is_zero()) {
      i0 = i;
      break;
    }
  }
  if (i0 == fc.size()) return true;  // both zero
  if (fc[i0].is_zero() || gc[i0].is_zero()) return false;
  for (std::size_t i = 0; i < fc.size(); ++i)
    if (fc[i] * gc[i0] != gc[i] * fc[i0]) return false;
  return true;
}

long normal_form_dimension(int a, int b) {
  long total = static_cast<long>(BiBasis::get(a, b).size());
  long divisible =
      (a >= 1 && b >= 1) ? static_cast<long>(BiBasis::get(a - 1, b - 1).size()) : 0;
  return total - divisible;
}

}  // namespace flagtwist
