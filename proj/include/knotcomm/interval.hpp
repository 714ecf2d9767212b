#ifndef KNOTCOMM_INTERVAL_HPP
#define KNOTCOMM_INTERVAL_HPP

#include <mpfr.h>

#include <optional>
#include <string>

#include "knotcomm/errors.hpp"
#include "knotcomm/poly.hpp"

namespace knotcomm {

/* RAII wrapper for a single mpfr number with explicit precision. */
class Mpfr {
public:
  explicit Mpfr(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Mpfr(const Mpfr& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mpfr(Mpfr&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Mpfr& operator=(const Mpfr& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Mpfr& operator=(Mpfr&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Mpfr() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double d() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sgn() const { return mpfr_sgn(v_); }
  int cmp(const Mpfr& o) const { return mpfr_cmp(v_, o.v_); }

private:
  mpfr_t v_;
};

/* A real number known to lie in [lo, hi].  All operations round the lower
   endpoint down and the upper endpoint up, so enclosures stay valid no
   matter the working precision; midpoint/radius are derived views. */
class CertifiedReal {
public:
  /* exact zero */
  CertifiedReal() : lo_(2), hi_(2) {}

  static CertifiedReal exact_int(const Int& v, mpfr_prec_t prec = 256);
  static CertifiedReal from_rat(const Rat& v, mpfr_prec_t prec = 256);
  static CertifiedReal from_endpoints(Mpfr lo, Mpfr hi);
  static CertifiedReal pi(mpfr_prec_t prec = 256);

  const Mpfr& lo() const { return lo_; }
  const Mpfr& hi() const { return hi_; }
  mpfr_prec_t precision() const;

  double midpoint() const;
  /* upper bound on (hi - lo) / 2, rounded up */
  double radius() const;
  Mpfr midpoint_mpfr() const;

  bool is_exact_zero() const { return mpfr_zero_p(lo_.raw()) && mpfr_zero_p(hi_.raw()); }
  bool contains_zero() const { return lo_.sgn() <= 0 && hi_.sgn() >= 0; }
  bool contains(const Rat& q) const;
  bool overlaps(const CertifiedReal& o) const;
  /* certified sign: +-1 when the interval excludes zero, 0 when the interval
     is exactly [0, 0], nullopt when undecided */
  std::optional<int> sign() const;

  /* comparisons that are true only when certified */
  bool certainly_less(const CertifiedReal& o) const { return hi_.cmp(o.lo_) < 0; }
  bool certainly_greater(const CertifiedReal& o) const { return lo_.cmp(o.hi_) > 0; }
  bool certainly_less(const Rat& q) const { return mpfr_cmp_q(hi_.raw(), q.get_mpq_t()) < 0; }
  bool certainly_greater(const Rat& q) const { return mpfr_cmp_q(lo_.raw(), q.get_mpq_t()) > 0; }

  CertifiedReal operator-() const;
  friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
  /* requires 0 outside b */
  friend CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator*(const Rat& q, const CertifiedReal& a);

  /* smallest interval containing both */
  static CertifiedReal hull(const CertifiedReal& a, const CertifiedReal& b);
  /* intersection; the inputs must overlap */
  static CertifiedReal intersect(const CertifiedReal& a, const CertifiedReal& b);

  std::string str() const;

private:
  Mpfr lo_, hi_;
};

std::ostream& operator<<(std::ostream& os, const CertifiedReal& x);

/* monotone elementary functions, endpoint-evaluated with directed rounding */
CertifiedReal log(const CertifiedReal& x);   // requires lo > 0
CertifiedReal exp(const CertifiedReal& x);
CertifiedReal sqrt(const CertifiedReal& x);  // negative lo clamped to 0
CertifiedReal acos(const CertifiedReal& x);  // input clamped to [-1, 1]
/* cos/sin via midpoint value plus Lipschitz-1 padding by the half-width */
CertifiedReal cos(const CertifiedReal& x);
CertifiedReal sin(const CertifiedReal& x);
CertifiedReal abs(const CertifiedReal& x);

/* Rectangular complex enclosure. */
struct ComplexBox {
  CertifiedReal re, im;

  ComplexBox() = default;
  ComplexBox(CertifiedReal r, CertifiedReal i) : re(std::move(r)), im(std::move(i)) {}

  ComplexBox operator-() const { return {-re, -im}; }
  friend ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }

  /* enclosure of |z| */
  CertifiedReal modulus() const { return knotcomm::sqrt(re * re + im * im); }
  /* upper bound on |z| over the box, as a double rounded up */
  double mag() const;
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

/* Precision-escalation loop shared by the certified computations: f(prec)
   returns an engaged optional on success; the precision doubles from start
   until cap, after which PrecisionExhausted is thrown. */
struct PrecisionPolicy {
  mpfr_prec_t start = 256;
  mpfr_prec_t cap = 4096;
};

template <typename F>
auto with_escalation(const PrecisionPolicy& pol, const char* what, F f) {
  for (mpfr_prec_t p = pol.start; p <= pol.cap; p *= 2) {
    auto r = f(p);
    if (r) return *r;
  }
  throw PrecisionExhausted(std::string(what) + ": no certification up to " +
                           std::to_string(pol.cap) + " bits");
}

}  // namespace knotcomm

#endif
