#include "flagtwist/flag_geometry.hpp"

#include <cassert>

#include "flagtwist/errors.hpp"
#include "flagtwist/exact_matrix.hpp"

namespace flagtwist {

namespace {
constexpr int kMaxRetries = 256;
}

ProjPoint::ProjPoint(GaussRat c0, GaussRat c1, GaussRat c2)
    : v_{std::move(c0), std::move(c1), std::move(c2)} {
  int first = -1;
  for (int i = 0; i < 3; ++i) {
    if (!v_[i].is_zero()) {
      first = i;
      break;
    }
  }
  if (first < 0) throw ZeroPoint();
  GaussRat inv = v_[first].inverse();
  for (int i = first; i < 3; ++i) v_[i] *= inv;
}

ProjPoint ProjPoint::unit(int i) {
  std::array<GaussRat, 3> c{GaussRat(0), GaussRat(0), GaussRat(0)};
  c[i] = GaussRat(1);
  return ProjPoint(c);
}

ProjPoint ProjPoint::conj() const {
  return ProjPoint(v_[0].conj(), v_[1].conj(), v_[2].conj());
}

std::string ProjPoint::str() const {
  return "[" + v_[0].str() + " : " + v_[1].str() + " : " + v_[2].str() + "]";
}

GaussRat dot(const std::array<GaussRat, 3>& a, const std::array<GaussRat, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

GaussRat dot(const ProjPoint& a, const ProjPoint& b) {
  return dot(a.coords(), b.coords());
}

std::array<GaussRat, 3> cross_raw(const std::array<GaussRat, 3>& a,
                                  const std::array<GaussRat, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

std::optional<ProjPoint> cross(const ProjPoint& a, const ProjPoint& b) {
  std::array<GaussRat, 3> c = cross_raw(a.coords(), b.coords());
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) return std::nullopt;
  return ProjPoint(c);
}

std::pair<std::array<GaussRat, 3>, std::array<GaussRat, 3>> plane_basis(
    const ProjPoint& m) {
  const auto& v = m.coords();
  const GaussRat zero(0), one(1);
  if (!v[0].is_zero())  // canonical form has v[0] == 1
    return {{-v[1], one, zero}, {-v[2], zero, one}};
  if (!v[1].is_zero())
    return {{one, zero, zero}, {zero, -v[2], one}};
  return {{one, zero, zero}, {zero, one, zero}};
}

Conic::Conic(ProjPoint q_, ProjPoint m_) : q(std::move(q_)), m(std::move(m_)) {
  if (dot(q, m).is_zero()) throw NotSmooth();
  twistor = (m == q.conj());
}

Conic make_twistor_fiber(const ProjPoint& q) { return Conic(q, q.conj()); }

ProjPoint twistor_project(const ProjPoint& p, const ProjPoint& l) {
  if (!dot(p, l).is_zero()) throw NotOnFlag();
  auto c = cross(p.conj(), l);
  if (!c) throw DegenerateCross();
  return *c;
}

CurveParam conic_param(const Conic& c) {
  if (dot(c.q, c.m).is_zero()) throw NotSmooth();
  auto [u, v] = plane_basis(c.m);
  CurveParam out;
  out.pdeg = out.ldeg = 1;
  std::array<GaussRat, 3> uq = cross_raw(u, c.q.coords());
  std::array<GaussRat, 3> vq = cross_raw(v, c.q.coords());
  for (int i = 0; i < 3; ++i) {
    out.pmap[i] = {u[i], v[i]};
    out.lmap[i] = {uq[i], vq[i]};
  }
  assert(out.valid());
  return out;
}

bool FiberCurve::meets(const Conic& c) const {
  return kind == FiberKind::Pi2 ? dot(c.q, base).is_zero() : dot(base, c.m).is_zero();
}

CurveParam FiberCurve::param() const {
  CurveParam out;
  auto [u, v] = plane_basis(base);
  if (kind == FiberKind::Pi2) {
    out.pdeg = 1;
    out.ldeg = 0;
    for (int i = 0; i < 3; ++i) {
      out.pmap[i] = {u[i], v[i]};
      out.lmap[i] = {base[i]};
    }
  } else {
    out.pdeg = 0;
    out.ldeg = 1;
    for (int i = 0; i < 3; ++i) {
      out.pmap[i] = {base[i]};
      out.lmap[i] = {u[i], v[i]};
    }
  }
  assert(out.valid());
  return out;
}

std::string FiberCurve::str() const {
  return std::string(kind == FiberKind::Pi2 ? "pi2-fiber over " : "pi1-fiber over ") +
         base.str();
}

bool point_on_conic(const Conic& c, const ProjPoint& p, const ProjPoint& l) {
  return dot(p, l).is_zero() && dot(p, c.m).is_zero() && dot(c.q, l).is_zero();
}

bool are_disjoint(const Conic& c1, const Conic& c2) {
  if (c1 == c2) throw SameConic();
  auto qx = cross(c1.q, c2.q);
  auto mx = cross(c1.m, c2.m);
  if (!qx || !mx) return false;
  return !dot(*mx, *qx).is_zero();
}

bool collinear_triple(const Conic& c1, const Conic& c2, const Conic& c3,
                      FiberCurve* witness) {
  if (c1.q == c2.q || c1.q == c3.q || c2.q == c3.q) throw RepeatedConic();
  const auto &a = c1.q.coords(), &b = c2.q.coords(), &c = c3.q.coords();
  GaussRat det = a[0] * (b[1] * c[2] - b[2] * c[1]) -
                 a[1] * (b[0] * c[2] - b[2] * c[0]) +
                 a[2] * (b[0] * c[1] - b[1] * c[0]);
  if (!det.is_zero()) return false;
  if (witness) *witness = FiberCurve{FiberKind::Pi2, *cross(c1.q, c2.q)};
  return true;
}

std::pair<FiberCurve, FiberCurve> connecting_curves(const Conic& c1, const Conic& c2) {
  auto qx = cross(c1.q, c2.q);
  auto mx = cross(c1.m, c2.m);
  if (!qx || !mx) throw ParallelData();
  return {FiberCurve{FiberKind::Pi2, *qx}, FiberCurve{FiberKind::Pi1, *mx}};
}

Configuration classify_config(std::vector<Conic> conics) {
  if (conics.empty()) throw Error("classify_config: empty configuration");
  Configuration cfg;
  cfg.conics = std::move(conics);
  const std::size_t n = cfg.size();

  cfg.pairwise_disjoint = true;
  for (std::size_t i = 0; i < n && cfg.pairwise_disjoint; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!are_disjoint(cfg.conics[i], cfg.conics[j])) {
        cfg.pairwise_disjoint = false;
        break;
      }

  cfg.all_twistor = true;
  for (const Conic& c : cfg.conics)
    if (!c.twistor) {
      cfg.all_twistor = false;
      break;
    }

  // No pi2-fiber may meet three members: no q-triple with vanishing det.
  cfg.in_C_star = true;
  for (std::size_t i = 0; i < n && cfg.in_C_star; ++i)
    for (std::size_t j = i + 1; j < n && cfg.in_C_star; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto &a = cfg.conics[i].q.coords(), &b = cfg.conics[j].q.coords(),
                   &c = cfg.conics[k].q.coords();
        GaussRat det = a[0] * (b[1] * c[2] - b[2] * c[1]) -
                       a[1] * (b[0] * c[2] - b[2] * c[0]) +
                       a[2] * (b[0] * c[1] - b[1] * c[0]);
        if (det.is_zero()) {
          cfg.in_C_star = false;
          break;
        }
      }

  // A witness fiber must have its base orthogonal to every q.
  if (n >= 2) {
    ExactMatrix qmat(n, 3);
    for (std::size_t i = 0; i < n; ++i)
      for (int j = 0; j < 3; ++j) qmat.at(i, j) = cfg.conics[i].q[j];
    auto kernel = qmat.nullspace();
    if (!kernel.empty())
      cfg.collinear_witness =
          FiberCurve{FiberKind::Pi2, ProjPoint(kernel[0][0], kernel[0][1], kernel[0][2])};
  }
  return cfg;
}

ProjPoint random_point(Rng& rng) {
  for (;;) {
    std::array<GaussRat, 3> c{rng.gauss_rat(), rng.gauss_rat(), rng.gauss_rat()};
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) continue;
    return ProjPoint(c);
  }
}

std::pair<ProjPoint, ProjPoint> random_flag_point(Rng& rng) {
  for (;;) {
    ProjPoint p = random_point(rng);
    auto [u, v] = plane_basis(p);
    GaussRat s = rng.gauss_rat(), t = rng.gauss_rat();
    std::array<GaussRat, 3> l;
    bool zero = true;
    for (int i = 0; i < 3; ++i) {
      l[i] = u[i] * s + v[i] * t;
      zero = zero && l[i].is_zero();
    }
    if (zero) continue;
    return {p, ProjPoint(l)};
  }
}

namespace {

Conic random_conic(Rng& rng, bool twistor) {
  for (;;) {
    ProjPoint q = random_point(rng);
    if (twistor) return make_twistor_fiber(q);
    ProjPoint m = random_point(rng);
    if (dot(q, m).is_zero()) continue;
    return Conic(q, m);
  }
}

// A point on the line {x : x.base = 0}, drawn from the coordinate pool.
ProjPoint random_point_on_line(Rng& rng, const ProjPoint& base) {
  auto [u, v] = plane_basis(base);
  for (;;) {
    GaussRat s = rng.gauss_rat(), t = rng.gauss_rat();
    if (s.is_zero() && t.is_zero()) continue;
    std::array<GaussRat, 3> c;
    bool zero = true;
    for (int i = 0; i < 3; ++i) {
      c[i] = u[i] * s + v[i] * t;
      zero = zero && c[i].is_zero();
    }
    if (zero) continue;
    return ProjPoint(c);
  }
}

bool acceptable(const std::vector<Conic>& cs, bool need_c_star) {
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (cs[i] == cs[j]) return false;
      if (!are_disjoint(cs[i], cs[j])) return false;
    }
  if (need_c_star && cs.size() >= 3) {
    Configuration cfg = classify_config(cs);
    if (!cfg.in_C_star) return false;
  }
  return true;
}

}  // namespace

Configuration random_config(int n, ConfigMode mode, bool twistor, std::uint64_t seed) {
  if (n < 1) throw BadParams("random_config: n must be >= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<Conic> cs;
    cs.reserve(n);
    if (mode == ConfigMode::General) {
      for (int i = 0; i < n; ++i) cs.push_back(random_conic(rng, twistor));
      if (!acceptable(cs, /*need_c_star=*/true)) continue;
    } else {
      ProjPoint line = random_point(rng);
      ProjPoint mline = random_point(rng);
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        for (int tries = 0;; ++tries) {
          if (tries >= kMaxRetries) {
            ok = false;
            break;
          }
          ProjPoint q = random_point_on_line(rng, line);
          try {
            Conic c = twistor ? make_twistor_fiber(q)
                              : Conic(q, random_point_on_line(rng, mline));
            cs.push_back(c);
            break;
          } catch (const NotSmooth&) {
            continue;
          }
        }
      }
      if (!ok || !acceptable(cs, /*need_c_star=*/false)) continue;
    }
    Configuration cfg = classify_config(std::move(cs));
    if (mode == ConfigMode::Collinear && !cfg.collinear_witness) continue;
    return cfg;
  }
  throw ExhaustedRetries("random_config: no admissible draw within retry bound");
}

}  // namespace flagtwist
