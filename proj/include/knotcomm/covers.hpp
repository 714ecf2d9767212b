#pragma once

#include <map>
#include <vector>

#include "knotcomm/knot.hpp"
#include "knotcomm/poly.hpp"

namespace knotcomm {

/* Homology of cyclic covers.

   For a knot K with Alexander polynomial D, the first homology of the n-fold
   cyclic branched cover is presented by D(t) acting on Z[t]/(t^n - 1).  Its
   order, when finite, is the absolute value of the resultant of D and t^n - 1,
   i.e. the product of |D(z)| over all n-th roots of unity z.  The homology is
   infinite exactly when D vanishes at some n-th root of unity, which happens
   exactly when some cyclotomic polynomial Phi_q with q dividing n divides D.

   For the unbranched n-fold cover of the knot exterior the first Betti number
   is 1 + (number of zeros of D at n-th roots of unity, counted with
   multiplicity).  This can be phrased as an iterated gcd: repeatedly split off
   g = gcd(h, t^n - 1) from h = D and sum the degrees.  We precompute the
   multiset of cyclotomic divisors of D once and sum phi(q) times the
   multiplicity over q dividing n, which computes the same number without
   forming t^n - 1. */

/* Multiset of cyclotomic divisors: maps q to the exact multiplicity of Phi_q
   as a factor of p.  Only q with phi(q) <= deg p can occur, and the index q of
   any cyclotomic divisor of p is at most 2 deg(p)^2, so the search is finite. */
std::map<unsigned long, int> cyclotomic_multiplicities(const IntPoly& p);

/* Order of the torsion subgroup of H_1 of the n-fold cyclic branched cover,
   computed as |Res(p, t^n - 1)|.  Returns 0 when the homology is infinite,
   i.e. when p vanishes at an n-th root of unity.  Requires n >= 1. */
Int torsion_order(const IntPoly& p, unsigned long n);
Int torsion_order(const KnotRecord& k, unsigned long n);

/* First Betti number of the n-fold cyclic cover of the knot exterior:
   1 + sum over q | n of multiplicity(Phi_q in p) * phi(q).  Requires n >= 1. */
long b1_of_cover(const IntPoly& p, unsigned long n);
long b1_of_cover(const KnotRecord& k, unsigned long n);

/* A knot is admissible when every cyclic cover of its exterior has first
   Betti number one, i.e. when its Alexander polynomial has no zero at any
   root of unity.  Same answer as KnotRecord::admissible. */
bool admissible(const KnotRecord& k);

/* One term of the torsion growth sequence: value = ln(T_n) / n where T_n is
   the torsion order of the n-fold branched cover. */
struct GrowthTerm {
  unsigned long n = 0;
  double value = 0.0;
};

/* Growth sequence for n = 1 .. n_max.  The terms converge to the Mahler
   measure exponent of the Alexander polynomial, so this gives a cheap
   integer-only approximation of that limit.  Throws NotAdmissible when the
   knot has a cyclotomic zero, since the sequence then hits infinite homology.
   n_max is capped at 2000. */
std::vector<GrowthTerm> growth_sequence(const KnotRecord& k,
                                        unsigned long n_max = 2000);

}  // namespace knotcomm
