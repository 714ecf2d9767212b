#include "knotcomm/interval.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace knotcomm {

namespace {

mpfr_prec_t max_prec(const CertifiedReal& a, const CertifiedReal& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

CertifiedReal CertifiedReal::exact_int(const Int& v, mpfr_prec_t prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_set_z(lo.raw(), v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.raw(), v.get_mpz_t(), MPFR_RNDU);
  return from_endpoints(std::move(lo), std::move(hi));
}

CertifiedReal CertifiedReal::from_rat(const Rat& v, mpfr_prec_t prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_set_q(lo.raw(), v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.raw(), v.get_mpq_t(), MPFR_RNDU);
  return from_endpoints(std::move(lo), std::move(hi));
}

CertifiedReal CertifiedReal::from_endpoints(Mpfr lo, Mpfr hi) {
  assert(lo.cmp(hi) <= 0);
  CertifiedReal r;
  r.lo_ = std::move(lo);
  r.hi_ = std::move(hi);
  return r;
}

CertifiedReal CertifiedReal::pi(mpfr_prec_t prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_const_pi(lo.raw(), MPFR_RNDD);
  mpfr_const_pi(hi.raw(), MPFR_RNDU);
  return from_endpoints(std::move(lo), std::move(hi));
}

mpfr_prec_t CertifiedReal::precision() const {
  return std::max(lo_.prec(), hi_.prec());
}

double CertifiedReal::midpoint() const {
  Mpfr m = midpoint_mpfr();
  return m.d();
}

Mpfr CertifiedReal::midpoint_mpfr() const {
  Mpfr m(precision());
  mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
  mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
  return m;
}

double CertifiedReal::radius() const {
  Mpfr r(precision());
  mpfr_sub(r.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
  mpfr_div_2ui(r.raw(), r.raw(), 1, MPFR_RNDU);
  return mpfr_get_d(r.raw(), MPFR_RNDU);
}

bool CertifiedReal::contains(const Rat& q) const {
  return mpfr_cmp_q(lo_.raw(), q.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_.raw(), q.get_mpq_t()) >= 0;
}

bool CertifiedReal::overlaps(const CertifiedReal& o) const {
  return !(certainly_less(o) || certainly_greater(o));
}

std::optional<int> CertifiedReal::sign() const {
  if (lo_.sgn() > 0) return 1;
  if (hi_.sgn() < 0) return -1;
  if (is_exact_zero()) return 0;
  return std::nullopt;
}

CertifiedReal CertifiedReal::operator-() const {
  mpfr_prec_t p = precision();
  Mpfr lo(p), hi(p);
  mpfr_neg(lo.raw(), hi_.raw(), MPFR_RNDD);
  mpfr_neg(hi.raw(), lo_.raw(), MPFR_RNDU);
  return from_endpoints(std::move(lo), std::move(hi));
}

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
  mpfr_prec_t p = max_prec(a, b);
  Mpfr lo(p), hi(p);
  mpfr_add(lo.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_add(hi.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  return CertifiedReal::from_endpoints(std::move(lo), std::move(hi));
}

CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) {
  mpfr_prec_t p = max_prec(a, b);
  Mpfr lo(p), hi(p);
  mpfr_sub(lo.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
  mpfr_sub(hi.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
  return CertifiedReal::from_endpoints(std::move(lo), std::move(hi));
}

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
  mpfr_prec_t p = max_prec(a, b);
  Mpfr lo(p), hi(p), tmp(p);
  bool first = true;
  const mpfr_srcptr as[2] = {a.lo_.raw(), a.hi_.raw()};
  const mpfr_srcptr bs[2] = {b.lo_.raw(), b.hi_.raw()};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(tmp.raw(), as[i], bs[j], MPFR_RNDD);
      if (first || mpfr_cmp(tmp.raw(), lo.raw()) < 0) mpfr_set(lo.raw(), tmp.raw(), MPFR_RNDD);
      mpfr_mul(tmp.raw(), as[i], bs[j], MPFR_RNDU);
      if (first || mpfr_cmp(tmp.raw(), hi.raw()) > 0) mpfr_set(hi.raw(), tmp.raw(), MPFR_RNDU);
      first = false;
    }
  return CertifiedReal::from_endpoints(std::move(lo), std::move(hi));
}

CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by zero-straddling interval");
  mpfr_prec_t p = max_prec(a, b);
  Mpfr lo(p), hi(p), tmp(p);
  bool first = true;
  const mpfr_srcptr as[2] = {a.lo_.raw(), a.hi_.raw()};
  const mpfr_srcptr bs[2] = {b.lo_.raw(), b.hi_.raw()};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_div(tmp.raw(), as[i], bs[j], MPFR_RNDD);
      if (first || mpfr_cmp(tmp.raw(), lo.raw()) < 0) mpfr_set(lo.raw(), tmp.raw(), MPFR_RNDD);
      mpfr_div(tmp.raw(), as[i], bs[j], MPFR_RNDU);
      if (first || mpfr_cmp(tmp.raw(), hi.raw()) > 0) mpfr_set(hi.raw(), tmp.raw(), MPFR_RNDU);
      first = false;
    }
  return CertifiedReal::from_endpoints(std::move(lo), std::move(hi));
}

CertifiedReal operator*(const Rat& q, const CertifiedReal& a) {
  mpfr_prec_t p = a.precision();
  Mpfr lo(p), hi(p);
  if (sgn(q) >= 0) {
    mpfr_mul_q(lo.raw(), a.lo_.raw(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi.raw(), a.hi_.raw(), q.get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(lo.raw(), a.hi_.raw(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi.raw(), a.lo_.raw(), q.get_mpq_t(), MPFR_RNDU);
  }
  return CertifiedReal::from_endpoints(std::move(lo), std::move(hi));
}

CertifiedReal CertifiedReal::hull(const CertifiedReal& a, const CertifiedReal& b) {
  mpfr_prec_t p = max_prec(a, b);
  Mpfr lo(p), hi(p);
  mpfr_min(lo.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_max(hi.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  return from_endpoints(std::move(lo), std::move(hi));
}

CertifiedReal CertifiedReal::intersect(const CertifiedReal& a, const CertifiedReal& b) {
  assert(a.overlaps(b));
  mpfr_prec_t p = max_prec(a, b);
  Mpfr lo(p), hi(p);
  mpfr_max(lo.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_min(hi.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  return from_endpoints(std::move(lo), std::move(hi));
}

std::string CertifiedReal::str() const {
  std::ostringstream os;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", midpoint());
  os << buf;
  std::snprintf(buf, sizeof buf, "%.3g", radius());
  os << " +- " << buf;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CertifiedReal& x) { return os << x.str(); }

/* ---- elementary functions ----------------------------------------------- */

CertifiedReal log(const CertifiedReal& x) {
  if (x.lo().sgn() <= 0) throw std::domain_error("interval log needs a positive interval");
  mpfr_prec_t p = x.precision();
  Mpfr lo(p), hi(p);
  mpfr_log(lo.raw(), x.lo().raw(), MPFR_RNDD);
  mpfr_log(hi.raw(), x.hi().raw(), MPFR_RNDU);
  return CertifiedReal::from_endpoints(std::move(lo), std::move(hi));
}

CertifiedReal exp(const CertifiedReal& x) {
  mpfr_prec_t p = x.precision();
  Mpfr lo(p), hi(p);
  mpfr_exp(lo.raw(), x.lo().raw(), MPFR_RNDD);
  mpfr_exp(hi.raw(), x.hi().raw(), MPFR_RNDU);
  return CertifiedReal::from_endpoints(std::move(lo), std::move(hi));
}

CertifiedReal sqrt(const CertifiedReal& x) {
  mpfr_prec_t p = x.precision();
  Mpfr lo(p), hi(p);
  if (x.lo().sgn() < 0)
    mpfr_set_zero(lo.raw(), 1);  // rounding slack below an exact zero
  else
    mpfr_sqrt(lo.raw(), x.lo().raw(), MPFR_RNDD);
  if (x.hi().sgn() < 0) throw std::domain_error("interval sqrt of a negative interval");
  mpfr_sqrt(hi.raw(), x.hi().raw(), MPFR_RNDU);
  return CertifiedReal::from_endpoints(std::move(lo), std::move(hi));
}

namespace {

void clamp_to(mpfr_ptr v, double lo, double hi) {
  if (mpfr_cmp_d(v, lo) < 0) mpfr_set_d(v, lo, MPFR_RNDZ);
  if (mpfr_cmp_d(v, hi) > 0) mpfr_set_d(v, hi, MPFR_RNDZ);
}

}  // namespace

CertifiedReal acos(const CertifiedReal& x) {
  mpfr_prec_t p = x.precision();
  Mpfr a(p), b(p), lo(p), hi(p);
  mpfr_set(a.raw(), x.lo().raw(), MPFR_RNDD);
  mpfr_set(b.raw(), x.hi().raw(), MPFR_RNDU);
  clamp_to(a.raw(), -1.0, 1.0);
  clamp_to(b.raw(), -1.0, 1.0);
  /* acos is decreasing */
  mpfr_acos(lo.raw(), b.raw(), MPFR_RNDD);
  mpfr_acos(hi.raw(), a.raw(), MPFR_RNDU);
  return CertifiedReal::from_endpoints(std::move(lo), std::move(hi));
}

namespace {

/* f(mid) +- (half-width + rounding), valid for any 1-Lipschitz f; result
   clamped to [-1, 1].  Used for cos and sin, where monotonicity depends on
   the quadrant. */
CertifiedReal lipschitz_enclosure(const CertifiedReal& x,
                                  int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  mpfr_prec_t p = x.precision();
  Mpfr mid = x.midpoint_mpfr();
  Mpfr w(p), lo(p), hi(p);
  /* half-width, rounded up; widen to cover mid's own rounding */
  mpfr_sub(w.raw(), x.hi().raw(), x.lo().raw(), MPFR_RNDU);
  f(lo.raw(), mid.raw(), MPFR_RNDD);
  f(hi.raw(), mid.raw(), MPFR_RNDU);
  mpfr_sub(lo.raw(), lo.raw(), w.raw(), MPFR_RNDD);
  mpfr_add(hi.raw(), hi.raw(), w.raw(), MPFR_RNDU);
  clamp_to(lo.raw(), -1.0, 1.0);
  clamp_to(hi.raw(), -1.0, 1.0);
  return CertifiedReal::from_endpoints(std::move(lo), std::move(hi));
}

}  // namespace

CertifiedReal cos(const CertifiedReal& x) { return lipschitz_enclosure(x, mpfr_cos); }
CertifiedReal sin(const CertifiedReal& x) { return lipschitz_enclosure(x, mpfr_sin); }

CertifiedReal abs(const CertifiedReal& x) {
  if (x.lo().sgn() >= 0) return x;
  if (x.hi().sgn() <= 0) return -x;
  mpfr_prec_t p = x.precision();
  Mpfr lo(p), hi(p), n(p);
  mpfr_set_zero(lo.raw(), 1);
  mpfr_neg(n.raw(), x.lo().raw(), MPFR_RNDU);
  mpfr_max(hi.raw(), n.raw(), x.hi().raw(), MPFR_RNDU);
  return CertifiedReal::from_endpoints(std::move(lo), std::move(hi));
}

double ComplexBox::mag() const {
  CertifiedReal m = modulus();
  return mpfr_get_d(m.hi().raw(), MPFR_RNDU);
}

}  // namespace knotcomm
