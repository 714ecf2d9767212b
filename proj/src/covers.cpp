#include "knotcomm/covers.hpp"

#include <mpfr.h>

#include <sstream>

#include "knotcomm/errors.hpp"

namespace knotcomm {

namespace {

/* Natural log of a positive integer, rounded to double.  64 bits of working
   precision is plenty for a final double result. */
double log_of_int(const Int& v) {
  mpfr_t x;
  mpfr_init2(x, 64);
  mpfr_set_z(x, v.get_mpz_t(), MPFR_RNDN);
  mpfr_log(x, x, MPFR_RNDN);
  double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return d;
}

}  // namespace

std::map<unsigned long, int> cyclotomic_multiplicities(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("cyclotomic_multiplicities of zero polynomial");
  std::map<unsigned long, int> out;
  long d = p.degree();
  if (d <= 0) return out;
  unsigned long bound = static_cast<unsigned long>(2 * d * d);
  for (unsigned long q = 1; q <= bound; ++q) {
    if (euler_phi(q) > static_cast<unsigned long>(d)) continue;
    const IntPoly& phi = cyclotomic(q);
    if (poly_gcd(p, phi).degree() < 1) continue;
    int mult = 0;
    IntPoly h = p;
    while (divides(phi, h)) {
      h = divexact(h, phi);
      ++mult;
    }
    out[q] = mult;
  }
  return out;
}

Int torsion_order(const IntPoly& p, unsigned long n) {
  if (n == 0) throw Error("torsion_order requires n >= 1");
  if (p.is_zero()) throw ZeroPolynomial("torsion_order of zero polynomial");
  Int r = resultant_cyclic(p, n);
  return abs(r);
}

Int torsion_order(const KnotRecord& k, unsigned long n) {
  return torsion_order(k.alexander(), n);
}

long b1_of_cover(const IntPoly& p, unsigned long n) {
  if (n == 0) throw Error("b1_of_cover requires n >= 1");
  long b = 1;
  for (const auto& [q, mult] : cyclotomic_multiplicities(p)) {
    if (n % q == 0) b += mult * static_cast<long>(euler_phi(q));
  }
  return b;
}

long b1_of_cover(const KnotRecord& k, unsigned long n) {
  return b1_of_cover(k.alexander(), n);
}

bool admissible(const KnotRecord& k) { return k.admissible(); }

std::vector<GrowthTerm> growth_sequence(const KnotRecord& k, unsigned long n_max) {
  if (n_max == 0) throw Error("growth_sequence requires n_max >= 1");
  if (n_max > 2000) throw Error("growth_sequence n_max is capped at 2000");
  if (!k.admissible()) {
    std::ostringstream os;
    os << "growth sequence of " << k.name()
       << " is undefined: the Alexander polynomial vanishes at a root of unity";
    throw NotAdmissible(os.str());
  }
  std::vector<GrowthTerm> out;
  out.reserve(n_max);
  for (unsigned long n = 1; n <= n_max; ++n) {
    Int t = torsion_order(k, n);
    /* Admissibility rules out zero resultants, so t >= 1 here. */
    out.push_back(GrowthTerm{n, log_of_int(t) / static_cast<double>(n)});
  }
  return out;
}

}  // namespace knotcomm
