#include "knotcomm/roots.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>

namespace knotcomm {

namespace {

mpfr_prec_t prec_for_target(double target, const PrecisionPolicy& pol) {
  double bits = 64.0 - std::log2(std::max(target, 1e-300));
  mpfr_prec_t p = pol.start;
  while (p < bits && p < pol.cap) p *= 2;
  return p;
}

/* ---- complex point arithmetic on mpfr (approximation only) -------------- */

struct CPoint {
  Mpfr re, im;
  explicit CPoint(mpfr_prec_t p) : re(p), im(p) {}
};

CPoint cp_at_prec(const CPoint& z, mpfr_prec_t p) {
  CPoint r(p);
  mpfr_set(r.re.raw(), z.re.raw(), MPFR_RNDN);
  mpfr_set(r.im.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}

CPoint cp_mul(const CPoint& a, const CPoint& b, mpfr_prec_t p) {
  CPoint r(p);
  Mpfr t1(p), t2(p);
  mpfr_mul(t1.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_mul(t2.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_sub(r.re.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
  mpfr_mul(t1.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_mul(t2.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_add(r.im.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
  return r;
}

CPoint cp_div(const CPoint& a, const CPoint& b, mpfr_prec_t p) {
  CPoint r(p);
  Mpfr den(p), t1(p), t2(p);
  mpfr_mul(t1.raw(), b.re.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_mul(t2.raw(), b.im.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_add(den.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
  mpfr_mul(t1.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_mul(t2.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_add(t1.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
  mpfr_div(r.re.raw(), t1.raw(), den.raw(), MPFR_RNDN);
  mpfr_mul(t1.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_mul(t2.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_sub(t1.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
  mpfr_div(r.im.raw(), t1.raw(), den.raw(), MPFR_RNDN);
  return r;
}

void cp_sub_inplace(CPoint& a, const CPoint& b) {
  mpfr_sub(a.re.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_sub(a.im.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
}

bool cp_is_zero(const CPoint& z) {
  return mpfr_zero_p(z.re.raw()) && mpfr_zero_p(z.im.raw());
}

mpfr_exp_t cp_exp(const CPoint& z) {
  /* exponent of max(|re|, |im|); meaningless for zero (guard before use) */
  mpfr_exp_t e1 = mpfr_zero_p(z.re.raw()) ? mpfr_get_emin() : mpfr_get_exp(z.re.raw());
  mpfr_exp_t e2 = mpfr_zero_p(z.im.raw()) ? mpfr_get_emin() : mpfr_get_exp(z.im.raw());
  return std::max(e1, e2);
}

CPoint eval_point(const IntPoly& f, const CPoint& z, mpfr_prec_t p) {
  CPoint acc(p);
  for (long k = f.degree(); k >= 0; --k) {
    acc = cp_mul(acc, z, p);
    mpfr_add_z(acc.re.raw(), acc.re.raw(), f.coeff(k).get_mpz_t(), MPFR_RNDN);
  }
  return acc;
}

/* ---- interval evaluation ------------------------------------------------ */

ComplexBox eval_box(const IntPoly& f, const ComplexBox& z, mpfr_prec_t p) {
  ComplexBox acc;
  for (long k = f.degree(); k >= 0; --k) {
    acc = acc * z;
    acc.re = acc.re + CertifiedReal::exact_int(f.coeff(k), p);
  }
  return acc;
}

ComplexBox point_box(const CPoint& z) {
  return {CertifiedReal::from_endpoints(z.re, z.re),
          CertifiedReal::from_endpoints(z.im, z.im)};
}

ComplexBox ball_box(const CPoint& c, const Mpfr& delta, mpfr_prec_t p) {
  Mpfr rlo(p), rhi(p), ilo(p), ihi(p);
  mpfr_sub(rlo.raw(), c.re.raw(), delta.raw(), MPFR_RNDD);
  mpfr_add(rhi.raw(), c.re.raw(), delta.raw(), MPFR_RNDU);
  mpfr_sub(ilo.raw(), c.im.raw(), delta.raw(), MPFR_RNDD);
  mpfr_add(ihi.raw(), c.im.raw(), delta.raw(), MPFR_RNDU);
  return {CertifiedReal::from_endpoints(std::move(rlo), std::move(rhi)),
          CertifiedReal::from_endpoints(std::move(ilo), std::move(ihi))};
}

bool strictly_inside(const CertifiedReal& inner, const CertifiedReal& outer) {
  return inner.lo().cmp(outer.lo()) > 0 && inner.hi().cmp(outer.hi()) < 0;
}

/* ---- double-precision Aberth starting approximations -------------------- */

std::vector<std::complex<double>> aberth(const IntPoly& f) {
  const long d = f.degree();
  std::vector<double> c(d + 1);
  double maxc = 0;
  for (long k = 0; k <= d; ++k) {
    c[k] = f.coeff(k).get_d();
    maxc = std::max(maxc, std::fabs(c[k]));
  }
  for (auto& v : c) v /= maxc;
  const double lead = c[d];

  double radius = 0;
  for (long k = 0; k < d; ++k) radius = std::max(radius, std::fabs(c[k] / lead));
  radius = 1.0 + radius;

  std::vector<std::complex<double>> z(d);
  for (long i = 0; i < d; ++i)
    z[i] = std::polar(0.8 * radius, 2.0 * M_PI * static_cast<double>(i) / d + 0.41);

  for (int iter = 0; iter < 400; ++iter) {
    double worst = 0;
    for (long i = 0; i < d; ++i) {
      std::complex<double> pv = 0, dv = 0;
      for (long k = d; k >= 0; --k) {
        dv = dv * z[i] + pv;
        pv = pv * z[i] + c[k];
      }
      std::complex<double> ratio = (dv == std::complex<double>(0)) ? pv : pv / dv;
      std::complex<double> sum = 0;
      for (long j = 0; j < d; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      std::complex<double> w = ratio / (1.0 - ratio * sum);
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[i])));
    }
    if (worst < 1e-14) break;
  }

  /* sanity: the approximations must be distinct and have small residuals */
  for (long i = 0; i < d; ++i) {
    std::complex<double> pv = 0;
    for (long k = d; k >= 0; --k) pv = pv * z[i] + c[k];
    double scale = std::pow(1.0 + std::abs(z[i]), d);
    if (!(std::abs(pv) < 1e-8 * scale))
      throw PrecisionExhausted("aberth: approximation did not converge for " + f.str());
    for (long j = i + 1; j < d; ++j)
      if (std::abs(z[i] - z[j]) < 1e-10 * (1.0 + std::abs(z[i])))
        throw PrecisionExhausted("aberth: approximations collided for " + f.str());
  }
  return z;
}

/* ---- Newton polish and Krawczyk certification --------------------------- */

void newton_polish(const IntPoly& f, const IntPoly& df, CPoint& z, mpfr_prec_t p) {
  for (int iter = 0; iter < 200; ++iter) {
    CPoint fv = eval_point(f, z, p);
    if (cp_is_zero(fv)) return;
    CPoint dv = eval_point(df, z, p);
    if (cp_is_zero(dv)) return;
    CPoint step = cp_div(fv, dv, p);
    cp_sub_inplace(z, step);
    if (cp_is_zero(step)) return;
    mpfr_exp_t ez = cp_is_zero(z) ? 1 : cp_exp(z);
    if (cp_exp(step) < ez - static_cast<mpfr_exp_t>(p) + 8) return;
  }
}

/* Krawczyk operator on the rectangle X = y +- delta:
     K = y - c f(y) + (I - c f'(X)) (X - y),  c = 1/f'(y).
   If K lies strictly inside X and |1 - c f'(X)| < 1 over the box, X contains
   exactly one root of f and that root lies in K (Brouwer for existence, the
   contraction bound for uniqueness).  Returns the tightened box K cap X. */
std::optional<ComplexBox> krawczyk(const IntPoly& f, const IntPoly& df, const CPoint& y,
                                   const Mpfr& delta, mpfr_prec_t p) {
  ComplexBox X = ball_box(y, delta, p);
  ComplexBox Y = point_box(y);

  CPoint dfy = eval_point(df, y, p);
  if (cp_is_zero(dfy)) return std::nullopt;
  CPoint one(p);
  mpfr_set_ui(one.re.raw(), 1, MPFR_RNDN);
  CPoint cinv = cp_div(one, dfy, p);
  ComplexBox C = point_box(cinv);

  ComplexBox G = ComplexBox{CertifiedReal::exact_int(1, p), CertifiedReal()} - C * eval_box(df, X, p);
  if (!(G.mag() < 1.0)) return std::nullopt;

  ComplexBox K = Y - C * eval_box(f, Y, p) + G * (X - Y);
  if (!strictly_inside(K.re, X.re) || !strictly_inside(K.im, X.im)) return std::nullopt;
  return ComplexBox{CertifiedReal::intersect(K.re, X.re), CertifiedReal::intersect(K.im, X.im)};
}

/* ---- per-root state ----------------------------------------------------- */

struct RootWork {
  IntPoly factor, dfactor;
  int mult = 1;
  bool exact_rational = false;
  Rat rat_root;
  CPoint approx{64};
  mpfr_prec_t prec = 0;
  ComplexBox box;

  double radius() const { return std::max(box.re.radius(), box.im.radius()); }
};

void refine_to(RootWork& w, double target, const PrecisionPolicy& pol) {
  target = std::max(target, 1e-290);
  if (w.exact_rational) {
    mpfr_prec_t p = prec_for_target(target, pol);
    w.box = ComplexBox{CertifiedReal::from_rat(w.rat_root, p), CertifiedReal()};
    w.prec = p;
    return;
  }
  mpfr_prec_t p = std::max(w.prec, prec_for_target(target, pol));
  for (; p <= pol.cap; p *= 2) {
    CPoint z = cp_at_prec(w.approx, p);
    newton_polish(w.factor, w.dfactor, z, p);
    /* delta ladder: start at the target and shrink if the contraction test
       needs a smaller box (nearby roots), stop near the precision floor */
    Mpfr delta(p);
    mpfr_set_d(delta.raw(), target / 2, MPFR_RNDU);
    for (int k = 0; k < 60; ++k) {
      if (mpfr_get_exp(delta.raw()) < -static_cast<mpfr_exp_t>(p) + 24) break;
      auto got = krawczyk(w.factor, w.dfactor, z, delta, p);
      if (got) {
        w.approx = std::move(z);
        w.prec = p;
        w.box = std::move(*got);
        return;
      }
      mpfr_div_2ui(delta.raw(), delta.raw(), 4, MPFR_RNDU);
    }
  }
  throw PrecisionExhausted("root certification failed for " + w.factor.str());
}

bool boxes_overlap(const ComplexBox& a, const ComplexBox& b) {
  return a.re.overlaps(b.re) && a.im.overlaps(b.im);
}

std::vector<RootWork> isolate_work(const IntPoly& p, const CertifyOptions& opts) {
  if (p.is_zero()) throw ZeroPolynomial("isolate_roots of zero polynomial");
  std::vector<RootWork> out;
  for (auto& [f, e] : squarefree_decomposition(p)) {
    if (f.degree() == 1) {
      RootWork w;
      w.factor = f;
      w.dfactor = f.derivative();
      w.mult = e;
      w.exact_rational = true;
      Rat r(-f.coeff(0), f.coeff(1));
      r.canonicalize();
      w.rat_root = r;
      refine_to(w, opts.target_radius, opts.prec);
      out.push_back(std::move(w));
      continue;
    }
    IntPoly df = f.derivative();
    for (const std::complex<double>& z0 : aberth(f)) {
      RootWork w;
      w.factor = f;
      w.dfactor = df;
      w.mult = e;
      w.approx = CPoint(opts.prec.start);
      mpfr_set_d(w.approx.re.raw(), z0.real(), MPFR_RNDN);
      mpfr_set_d(w.approx.im.raw(), z0.imag(), MPFR_RNDN);
      refine_to(w, opts.target_radius, opts.prec);
      out.push_back(std::move(w));
    }
  }

  /* separate any overlapping certified boxes; distinct roots, so this
     terminates */
  for (int round = 0; round < 80; ++round) {
    bool clash = false;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (boxes_overlap(out[i].box, out[j].box)) {
          clash = true;
          double t = std::min(out[i].radius(), out[j].radius()) / 16;
          refine_to(out[i], t, opts.prec);
          refine_to(out[j], t, opts.prec);
        }
    if (!clash) return out;
  }
  throw PrecisionExhausted("could not separate root boxes of " + p.str());
}

/* ---- exact unit-circle analysis ----------------------------------------- */

struct CircleRoots {
  int at_one = 0;        // multiplicity of the root t = 1
  int at_minus_one = 0;  // multiplicity of the root t = -1
  std::vector<RealRootInterval> xroots;  // roots of Q in (-2, 2); each stands
                                         // for a conjugate pair on the circle
  long pair_mult_total() const {
    long s = 0;
    for (const auto& r : xroots) s += r.multiplicity;
    return s;
  }
  long total_mult() const { return at_one + at_minus_one + 2 * pair_mult_total(); }
};

/* Unit-circle roots of an arbitrary nonzero p, with multiplicities as in p.
   They all divide g = gcd(p, reversal(p)) with the same multiplicity
   (conjugation pairs r with 1/r on the circle); after removing t = +-1, g's
   root set is inversion-closed with p(1) != 0 != p(-1), which forces a
   palindrome of even degree, so the x = t + 1/t substitution applies.  Real
   roots of Q in (-2, 2) correspond exactly to the circle pairs. */
CircleRoots circle_roots_of(const IntPoly& p) {
  CircleRoots out;
  IntPoly g = poly_gcd(p, p.reversed());
  if (g.degree() < 1) return out;
  IntPoly tm1{-1, 1}, tp1{1, 1};
  while (g.degree() >= 1 && g.sign_at(Rat(1)) == 0) {
    g = divexact(g, tm1);
    ++out.at_one;
  }
  while (g.degree() >= 1 && g.sign_at(Rat(-1)) == 0) {
    g = divexact(g, tp1);
    ++out.at_minus_one;
  }
  if (g.degree() < 1) return out;
  if (g.degree() % 2 != 0 || !g.is_palindrome())
    throw std::logic_error("circle factor is not reciprocal: " + g.str());
  IntPoly q = reciprocal_decompose(g);
  out.xroots = isolate_real_roots(q, Rat(-2), Rat(2));
  return out;
}

}  // namespace

/* angle enclosure acos(x/2) at the given target radius */
CertifiedReal circle_angle(RealRootInterval& xr, double target, const PrecisionPolicy& pol) {
  mpfr_prec_t p = prec_for_target(target, pol);
  for (int round = 0; round < 200; ++round) {
    Mpfr lo(p), hi(p);
    mpfr_set_q(lo.raw(), Rat(xr.lo).get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.raw(), Rat(xr.hi).get_mpq_t(), MPFR_RNDU);
    CertifiedReal x = CertifiedReal::from_endpoints(std::move(lo), std::move(hi));
    CertifiedReal ang = acos(Rat(1, 2) * x);
    if (ang.radius() <= target) return ang;
    if (xr.exact) {
      p *= 2;  // the interval is a point; only precision limits the radius
      if (p > pol.cap) break;
      continue;
    }
    refine_real_root(xr, xr.width() / 16);
  }
  throw PrecisionExhausted("angle enclosure did not reach target radius");
}

std::optional<Rat> exact_circle_turn(const RealRootInterval& xr) {
  /* acos(x/2) is a rational multiple of pi only for x in {0, +-1, +-2}
     (Niven); +-2 never appears inside (-2, 2).  An isolating interval holds
     exactly one root of its factor, so a candidate value that is a root of
     the factor and lies in the interval must be that root. */
  for (int c : {0, 1, -1}) {
    bool hit = xr.exact ? xr.lo == c
                        : xr.factor.sign_at(Rat(c)) == 0 && xr.lo < c && c < xr.hi;
    if (hit) return c == 0 ? Rat(1, 4) : (c == 1 ? Rat(1, 6) : Rat(1, 3));
  }
  return std::nullopt;
}

/* ---- public API --------------------------------------------------------- */

std::vector<RootBox> isolate_roots(const IntPoly& p, const CertifyOptions& opts) {
  std::vector<RootWork> work = isolate_work(p, opts);
  std::vector<RootBox> out;
  out.reserve(work.size());
  for (auto& w : work) out.push_back({std::move(w.box), w.mult});
  std::sort(out.begin(), out.end(), [](const RootBox& a, const RootBox& b) {
    Mpfr ar = a.box.re.midpoint_mpfr(), br = b.box.re.midpoint_mpfr();
    int c = ar.cmp(br);
    if (c != 0) return c < 0;
    Mpfr ai = a.box.im.midpoint_mpfr(), bi = b.box.im.midpoint_mpfr();
    return ai.cmp(bi) < 0;
  });
  return out;
}

std::vector<UnitRootAngle> unit_circle_roots(const IntPoly& p, const CertifyOptions& opts) {
  if (p.is_zero()) throw NotReciprocal("zero polynomial is not reciprocal");
  if (p.degree() % 2 != 0 || !p.is_palindrome())
    throw NotReciprocal("not a reciprocal polynomial: " + p.str());

  CircleRoots cr = circle_roots_of(p);
  mpfr_prec_t aprec = prec_for_target(opts.target_radius, opts.prec);

  std::vector<UnitRootAngle> out;
  if (cr.at_one > 0) out.push_back({CertifiedReal(), Rat(0), cr.at_one});
  /* acos is decreasing, so descending x gives ascending angles */
  for (auto it = cr.xroots.rbegin(); it != cr.xroots.rend(); ++it) {
    UnitRootAngle u;
    u.multiplicity = it->multiplicity;
    u.exact_turn = exact_circle_turn(*it);
    u.angle = circle_angle(*it, opts.target_radius, opts.prec);
    out.push_back(std::move(u));
  }
  if (cr.at_minus_one > 0)
    out.push_back({CertifiedReal::pi(aprec), Rat(1, 2), cr.at_minus_one});
  return out;
}

CertifiedReal log_mahler(const IntPoly& p, const CertifyOptions& opts) {
  if (p.is_zero()) throw ZeroPolynomial("log_mahler of zero polynomial");

  Int alc = abs(p.lc());
  CertifiedReal base;  // exact 0 when |lc| = 1
  if (alc != 1)
    base = log(CertifiedReal::exact_int(alc, prec_for_target(opts.target_radius, opts.prec)));
  if (p.degree() == 0) return base;

  CircleRoots cr = circle_roots_of(p);
  const long mcirc = cr.total_mult();
  if (mcirc == p.degree()) return base;  // every root has modulus exactly 1

  CertifyOptions box_opts = opts;
  box_opts.target_radius = std::min(opts.target_radius, 1e-8);
  std::vector<RootWork> work = isolate_work(p, box_opts);

  for (int round = 0;; ++round) {
    if (round > 80) throw PrecisionExhausted("log_mahler: could not classify roots");
    /* Boxes whose modulus enclosure straddles 1 must be exactly the circle
       roots: every circle root straddles, and once the straddling
       multiplicity matches the exact circle count, all remaining roots are
       certified off-circle. */
    long straddle = 0;
    bool refined = false;
    for (auto& w : work) {
      CertifiedReal m = w.box.modulus();
      if (m.contains(Rat(1))) straddle += w.mult;
    }
    if (straddle < mcirc) throw std::logic_error("log_mahler: circle count mismatch");
    if (straddle > mcirc) {
      for (auto& w : work) {
        CertifiedReal m = w.box.modulus();
        if (m.contains(Rat(1))) {
          refine_to(w, w.radius() / 16, opts.prec);
          refined = true;
        }
      }
      if (!refined) throw std::logic_error("log_mahler: straddling boxes not refinable");
      continue;
    }

    CertifiedReal sum = base;
    for (auto& w : work) {
      CertifiedReal m = w.box.modulus();
      if (m.contains(Rat(1))) continue;          // certified circle root: log is 0
      if (m.certainly_less(Rat(1))) continue;    // inside: no contribution
      sum = sum + Rat(w.mult) * log(m);
    }
    if (sum.radius() <= opts.target_radius) return sum;
    for (auto& w : work) {
      CertifiedReal m = w.box.modulus();
      if (m.certainly_greater(Rat(1))) refine_to(w, w.radius() / 16, opts.prec);
    }
  }
}

}  // namespace knotcomm
