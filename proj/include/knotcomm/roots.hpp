#ifndef KNOTCOMM_ROOTS_HPP
#define KNOTCOMM_ROOTS_HPP

#include <vector>

#include "knotcomm/interval.hpp"
#include "knotcomm/poly.hpp"

namespace knotcomm {

struct CertifyOptions {
  double target_radius = 1e-12;
  PrecisionPolicy prec;
};

/* One distinct complex root: a certified rectangle containing exactly that
   root (verified with a Krawczyk test on the squarefree factor it belongs
   to), plus its multiplicity in the input polynomial. */
struct RootBox {
  ComplexBox box;
  int multiplicity = 1;
};

/* All distinct complex roots of p as pairwise disjoint certified boxes of
   radius <= target_radius, sorted by (re, im) midpoint.  Deterministic for
   fixed options.  Throws ZeroPolynomial on zero input and PrecisionExhausted
   if certification fails below the precision cap. */
std::vector<RootBox> isolate_roots(const IntPoly& p, const CertifyOptions& opts = {});

/* A conjugate pair e^{+-i angle} of unit-circle roots (angle in [0, pi]; the
   endpoints 0 and pi stand for roots at t = 1 and t = -1).  exact_turn is
   angle/2pi when that is exactly rational: 0 and 1/2 at the endpoints, and
   the classical cos-rational cases 1/6, 1/4, 1/3 inside. */
struct UnitRootAngle {
  CertifiedReal angle;
  std::optional<Rat> exact_turn;
  int multiplicity = 1;
};

/* Support for angles of unit-circle roots through x = t + 1/t = 2 cos a.
   circle_angle turns an isolated real root x of a reciprocal decomposition
   into a certified enclosure of a = acos(x/2), refining the root interval in
   place until the enclosure radius reaches target.  exact_circle_turn
   reports a/2pi when it is exactly rational (Niven: x in {0, 1, -1}). */
CertifiedReal circle_angle(RealRootInterval& xr, double target, const PrecisionPolicy& pol);
std::optional<Rat> exact_circle_turn(const RealRootInterval& xr);

/* Unit-circle roots of a reciprocal polynomial, by exact bisection: circle
   membership is decided by Sturm counts of the Chebyshev-type substitution
   x = t + 1/t on (-2, 2), never by comparing a numerical modulus with 1.
   Angle enclosures are refined to target_radius.  Sorted by increasing
   angle.  Throws NotReciprocal if p is not palindromic of even degree. */
std::vector<UnitRootAngle> unit_circle_roots(const IntPoly& p,
                                             const CertifyOptions& opts = {});

/* Logarithmic Mahler measure log|lc| + sum log|r| over roots outside the
   unit circle.  Unit-circle roots are identified exactly (through
   gcd(p, reversal) and the Sturm route), so they contribute exactly zero;
   when all roots lie on the circle and |lc| = 1 the result is exactly 0.
   Otherwise the enclosure is refined until its radius is <= target_radius. */
CertifiedReal log_mahler(const IntPoly& p, const CertifyOptions& opts = {});

}  // namespace knotcomm

#endif
