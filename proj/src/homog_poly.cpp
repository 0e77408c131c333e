#include "flagtwist/homog_poly.hpp"

#include <cassert>
#include <utility>

#include "flagtwist/errors.hpp"

namespace flagtwist {

HomogPoly3 HomogPoly3::constant(const GaussRat& c) {
  return monomial({0, 0, 0}, c);
}

HomogPoly3 HomogPoly3::variable(int i) {
  Exp3 e{0, 0, 0};
  e[i] = 1;
  return monomial(e, GaussRat(1));
}

HomogPoly3 HomogPoly3::monomial(const Exp3& e, const GaussRat& c) {
  HomogPoly3 p;
  p.add_term(e, c);
  return p;
}

GaussRat HomogPoly3::coeff(const Exp3& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussRat(0) : it->second;
}

void HomogPoly3::add_term(const Exp3& e, const GaussRat& c) {
  if (c.is_zero()) return;
  int d = e[0] + e[1] + e[2];
  assert(terms_.empty() || d == degree_);
  degree_ = d;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Exp3 HomogPoly3::leading_monomial() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

GaussRat HomogPoly3::leading_coeff() const {
  assert(!terms_.empty());
  return terms_.begin()->second;
}

HomogPoly3 HomogPoly3::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inverse());
}

HomogPoly3 HomogPoly3::operator-() const { return scaled(GaussRat(-1)); }

HomogPoly3& HomogPoly3::operator+=(const HomogPoly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HomogPoly3& HomogPoly3::operator-=(const HomogPoly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

HomogPoly3 operator*(const HomogPoly3& a, const HomogPoly3& b) {
  HomogPoly3 out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

HomogPoly3 HomogPoly3::scaled(const GaussRat& c) const {
  HomogPoly3 out;
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  return out;
}

GaussRat HomogPoly3::evaluate(const GaussRat& x0, const GaussRat& x1,
                              const GaussRat& x2) const {
  auto pw = [](const GaussRat& x, int n) {
    GaussRat r(1);
    for (int k = 0; k < n; ++k) r *= x;
    return r;
  };
  GaussRat out(0);
  for (const auto& [e, c] : terms_) out += c * pw(x0, e[0]) * pw(x1, e[1]) * pw(x2, e[2]);
  return out;
}

std::optional<HomogPoly3> HomogPoly3::div_exact(const HomogPoly3& num,
                                                const HomogPoly3& den) {
  if (den.is_zero()) return std::nullopt;
  HomogPoly3 rem = num, quot;
  const Exp3 dl = den.leading_monomial();
  const GaussRat dinv = den.leading_coeff().inverse();
  while (!rem.is_zero()) {
    Exp3 rl = rem.leading_monomial();
    Exp3 q{rl[0] - dl[0], rl[1] - dl[1], rl[2] - dl[2]};
    if (q[0] < 0 || q[1] < 0 || q[2] < 0) return std::nullopt;
    GaussRat qc = rem.leading_coeff() * dinv;
    quot.add_term(q, qc);
    rem -= den * HomogPoly3::monomial(q, qc);
  }
  return quot;
}

std::string HomogPoly3::str(const std::array<std::string, 3>& names) const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string term = "(" + c.str() + ")";
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      term += "*" + names[i];
      if (e[i] > 1) term += "^" + std::to_string(e[i]);
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

// --- gcd machinery -----------------------------------------------------
//
// A homogeneous trivariate gcd reduces to a bivariate one: strip the common
// power of x0, dehomogenize at x0 = 1, take a primitive-PRS gcd in
// Q(i)[x2][x1], and rehomogenize. Univariate gcds over the field Q(i) are
// plain Euclid with monic normalization.

namespace {

using UniPoly = std::vector<GaussRat>;  // c[k] * y^k, no trailing zeros

void uni_trim(UniPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}


UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  uni_trim(out);
  return out;
}

UniPoly uni_scaled(UniPoly a, const GaussRat& c) {
  if (c.is_zero()) return {};
  for (auto& x : a) x *= c;
  return a;
}

UniPoly uni_sub(UniPoly a, const UniPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  uni_trim(a);
  return a;
}

// Remainder of a by b over the field Q(i).
UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  assert(!b.empty());
  GaussRat binv = b.back().inverse();
  while (a.size() >= b.size() && !a.empty()) {
    GaussRat f = a.back() * binv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    uni_trim(a);
  }
  return a;
}

// Exact quotient over the field; asserts divisibility.
UniPoly uni_div_exact(UniPoly a, const UniPoly& b) {
  assert(!b.empty());
  UniPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  GaussRat binv = b.back().inverse();
  while (a.size() >= b.size()) {
    GaussRat f = a.back() * binv;
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    uni_trim(a);
  }
  assert(a.empty());
  uni_trim(q);
  return q;
}

UniPoly uni_monic(UniPoly a) {
  if (a.empty()) return a;
  return uni_scaled(std::move(a), a.back().inverse());
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  while (!b.empty()) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return uni_monic(std::move(a));
}

// Bivariate polynomial as coefficients in Q(i)[y] of powers of x.
using BiPoly = std::vector<UniPoly>;

void bi_trim(BiPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

bool bi_is_zero(const BiPoly& p) { return p.empty(); }

UniPoly bi_content(const BiPoly& p) {
  UniPoly g;
  for (const auto& c : p)
    if (!c.empty()) g = uni_gcd(g, c);
  return g;
}

BiPoly bi_div_uni(BiPoly p, const UniPoly& d) {
  for (auto& c : p)
    if (!c.empty()) c = uni_div_exact(c, d);
  return p;
}

BiPoly bi_mul_uni(BiPoly p, const UniPoly& u) {
  for (auto& c : p) c = uni_mul(c, u);
  bi_trim(p);
  return p;
}

BiPoly bi_sub(BiPoly a, const BiPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = uni_sub(a[i], b[i]);
  bi_trim(a);
  return a;
}

// Pseudo-remainder of a by b in the main variable x.
BiPoly bi_prem(BiPoly a, const BiPoly& b) {
  assert(!b.empty());
  const UniPoly& lb = b.back();
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !bi_is_zero(a)) {
    UniPoly la = a.back();
    std::size_t shift = a.size() - b.size();
    // a <- lb*a - la*x^shift*b
    BiPoly scaled_b(shift);
    for (const auto& c : b) scaled_b.push_back(uni_mul(c, la));
    a = bi_sub(bi_mul_uni(std::move(a), lb), scaled_b);
  }
  return a;
}

BiPoly bi_primitive(const BiPoly& p) {
  if (bi_is_zero(p)) return p;
  return bi_div_uni(p, bi_content(p));
}

BiPoly bi_gcd(BiPoly a, BiPoly b) {
  if (bi_is_zero(a)) return b;
  if (bi_is_zero(b)) return a;
  UniPoly cont = uni_gcd(bi_content(a), bi_content(b));
  a = bi_primitive(a);
  b = bi_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  // Primitive PRS: the content is divided out after every pseudo-division.
  while (!bi_is_zero(b)) {
    BiPoly r = bi_prem(a, b);
    if (!bi_is_zero(r)) r = bi_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return bi_mul_uni(bi_primitive(a), cont);
}

int min_x0_power(const HomogPoly3& p) {
  int v = -1;
  for (const auto& [e, c] : p.terms()) {
    (void)c;
    if (v < 0 || e[0] < v) v = e[0];
  }
  return v < 0 ? 0 : v;
}

// Dehomogenize at x0 = 1 into Q(i)[x2][x1]. On a homogeneous polynomial the
// pair (e1,e2) determines e0, so no terms collide.
BiPoly dehomogenize(const HomogPoly3& p) {
  BiPoly out;
  for (const auto& [e, c] : p.terms()) {
    std::size_t i = static_cast<std::size_t>(e[1]);
    std::size_t j = static_cast<std::size_t>(e[2]);
    if (out.size() <= i) out.resize(i + 1);
    if (out[i].size() <= j) out[i].resize(j + 1);
    out[i][j] += c;
  }
  for (auto& c : out) uni_trim(c);
  bi_trim(out);
  return out;
}

HomogPoly3 rehomogenize(const BiPoly& p) {
  int deg = -1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      if (!p[i][j].is_zero()) deg = std::max(deg, static_cast<int>(i + j));
  HomogPoly3 out;
  if (deg < 0) return out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      if (!p[i][j].is_zero())
        out.add_term({deg - static_cast<int>(i + j), static_cast<int>(i),
                      static_cast<int>(j)},
                     p[i][j]);
  return out;
}

HomogPoly3 gcd_pair(const HomogPoly3& f, const HomogPoly3& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  // Dehomogenizing at x0 = 1 also strips the x0-power factor, which has to
  // be restored as min(vf, vg) afterwards.
  int vf = min_x0_power(f), vg = min_x0_power(g);
  BiPoly h = bi_gcd(dehomogenize(f), dehomogenize(g));
  HomogPoly3 out = rehomogenize(h);
  Exp3 shift{std::min(vf, vg), 0, 0};
  return out * HomogPoly3::monomial(shift, GaussRat(1));
}

}  // namespace

HomogPoly3 gcd_homog(const std::vector<HomogPoly3>& polys) {
  HomogPoly3 g;
  bool any = false;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    any = true;
    g = gcd_pair(g, p);
    if (g.is_constant() && !g.is_zero()) break;
  }
  if (!any) throw AllZero();
  return g.monic();
}

}  // namespace flagtwist
