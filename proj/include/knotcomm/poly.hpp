#ifndef KNOTCOMM_POLY_HPP
#define KNOTCOMM_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "knotcomm/errors.hpp"

namespace knotcomm {

using Int = mpz_class;
using Rat = mpq_class;

/* Dense univariate polynomial over Z.  Coefficients are stored
   constant-first; the zero polynomial has an empty coefficient vector and
   degree -1.  Trailing zero coefficients are stripped on construction, so
   degree() is always the true degree. */
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<int> coeffs);

  static IntPoly constant(Int v);
  /* c * t^k */
  static IntPoly monomial(Int c, unsigned k);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /* Coefficient of t^i; zero beyond the degree. */
  const Int& coeff(std::size_t i) const;
  const std::vector<Int>& coeffs() const { return c_; }

  /* Leading coefficient; the polynomial must be nonzero. */
  const Int& lc() const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  /* Sign of eval(x) without building the value when avoidable: -1, 0, +1. */
  int sign_at(const Rat& x) const;

  IntPoly derivative() const;
  /* t^degree * p(1/t), i.e. the coefficient vector reversed. */
  IntPoly reversed() const;
  /* True when the coefficient vector is a palindrome (p equals its own
     reversal).  The zero polynomial counts as palindromic. */
  bool is_palindrome() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Int& s, const IntPoly& p);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  /* Human-readable rendering, highest-degree term first, e.g.
     "t^4 - 7*t^3 + 11*t^2 - 7*t + 1". */
  std::string str(const char* var = "t") const;

private:
  std::vector<Int> c_;
  void trim();
};

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
  return os << p.str();
}

/* Laurent polynomial over Z: coeffs[i] is the coefficient of t^(low+i). */
struct IntLaurentPoly {
  std::vector<Int> coeffs;
  long low = 0;
};

/* ---- basic integer-polynomial arithmetic -------------------------------- */

/* Content: gcd of the coefficients, >= 0; zero for the zero polynomial. */
Int content(const IntPoly& p);
/* p divided by its content (sign of the leading coefficient preserved). */
IntPoly primitive_part(const IntPoly& p);

/* Exact quotient a / b; throws std::domain_error if b does not divide a
   in Z[t]. */
IntPoly divexact(const IntPoly& a, const IntPoly& b);
/* True iff b (monic) divides a exactly; quotient discarded. */
bool divides(const IntPoly& b, const IntPoly& a);

/* Primitive gcd with positive leading coefficient (content of the inputs is
   discarded).  gcd(0, 0) = 0. */
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/* Squarefree part: product of the distinct irreducible factors, primitive,
   positive leading coefficient. */
IntPoly squarefree_part(const IntPoly& p);

/* Yun decomposition: returns pairs (f, e) with p = c * prod f^e for a
   rational constant c, each f primitive, squarefree, positive leading
   coefficient, pairwise coprime, e strictly increasing.  Factors with f = 1
   are omitted. */
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

/* ---- resultants --------------------------------------------------------- */

/* Resultant in the Sylvester convention:
     Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots alpha of a.
   Computed with the subresultant PRS, so intermediate coefficient growth
   stays polynomial.  Res is 0 when either input is zero. */
Int resultant(const IntPoly& a, const IntPoly& b);

/* Res(p, t^n - 1) for n >= 1, via t^n mod p by binary exponentiation; n can
   be large (thousands) without the cost of a dense degree-n operand. */
Int resultant_cyclic(const IntPoly& p, unsigned long n);

/* The polynomial lc(p)^n * prod (s - r^n) over the roots r of p, as an exact
   integer polynomial in s.  Equals Res_t(p(t), s - t^n), computed by
   evaluation at integer points and Lagrange interpolation. */
IntPoly power_transform(const IntPoly& p, unsigned long n);

/* ---- reciprocal polynomials -------------------------------------------- */

/* For reciprocal p of even degree 2g, the unique Q with
   p(t) = t^g * Q(t + 1/t); deg Q = g and lc(Q) = lc(p).  Throws
   NotReciprocal on odd degree or a non-palindromic coefficient vector. */
IntPoly reciprocal_decompose(const IntPoly& p);

/* ---- real roots (Sturm) ------------------------------------------------- */

/* An isolating interval for one distinct real root.  If exact, the root is
   the rational lo == hi; otherwise the root lies in the open interval
   (lo, hi), the endpoints are not roots, and factor changes sign across it.
   factor is the squarefree factor of the input the root belongs to, and
   multiplicity its exponent in the input. */
struct RealRootInterval {
  Rat lo, hi;
  int multiplicity = 1;
  IntPoly factor;
  bool exact = false;

  Rat width() const { return exact ? Rat(0) : Rat(hi - lo); }
};

/* Number of distinct real roots of p in (a, b], counted without
   multiplicity.  Square factors are removed internally, so p need not be
   squarefree.  Requires a <= b. */
int sturm_count(const IntPoly& p, const Rat& a, const Rat& b);

/* Disjoint isolating intervals for all distinct roots of p in (a, b],
   sorted increasingly, with multiplicities. */
std::vector<RealRootInterval> isolate_real_roots(const IntPoly& p, const Rat& a,
                                                 const Rat& b);

/* Shrink an isolating interval by bisection until width() <= w.  May
   collapse to an exact rational root. */
void refine_real_root(RealRootInterval& r, const Rat& w);

/* ---- cyclotomic polynomials -------------------------------------------- */

unsigned long euler_phi(unsigned long n);

/* The n-th cyclotomic polynomial, n >= 1 (cached internally). */
const IntPoly& cyclotomic(unsigned long n);

/* Smallest n such that the n-th cyclotomic polynomial divides p, if any.
   Only n with phi(n) <= deg p can divide, which bounds the search.  This is
   equivalent to testing gcd(p, t^n - 1) != constant over all candidate n. */
std::optional<unsigned long> cyclotomic_divisor_index(const IntPoly& p);

/* True iff p has a root at some root of unity. */
bool cyclotomic_zero_exists(const IntPoly& p);

/* ---- Alexander normalization ------------------------------------------- */

/* Normalize up to units +-t^k: strip the power of t, then fix the sign so
   the value at t = 1 is positive when nonzero (leading coefficient positive
   when the value at 1 is zero).  Throws ZeroPolynomial on zero input. */
IntPoly normalize_alexander(const IntPoly& p);
IntPoly normalize_alexander(const IntLaurentPoly& p);

}  // namespace knotcomm

#endif
