#include "knotcomm/knot.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "knotcomm/errors.hpp"

namespace knotcomm {

namespace {

using CMatD = std::vector<std::vector<std::complex<double>>>;
using RatMat = std::vector<std::vector<Rat>>;

/* Bring a turn into the fundamental range [0, 1/2].  The signature function
   is invariant under conjugation, so sigma at turn s equals sigma at 1 - s,
   and it has period 1. */
Rat reduce_turn(const Rat& turn) {
  Rat r = turn;
  r.canonicalize();
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  r -= Rat(f);
  if (r > Rat(1, 2)) r = Rat(1) - r;
  r.canonicalize();
  return r;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix out(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

/* Cyclic Jacobi diagonalization of a Hermitian matrix in plain doubles.
   Returns an approximately unitary V with V^H H V near diagonal.  Each
   rotation first strips the phase of the pivot entry and then applies the
   classical symmetric Jacobi rotation; accuracy here only affects how sharp
   the certification below can be, never its soundness. */
CMatD jacobi_eigenvectors(CMatD h) {
  const std::size_t n = h.size();
  CMatD v(n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 80; ++sweep) {
    double scale = 0, off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        scale = std::max(scale, std::abs(h[i][j]));
        if (i < j) off = std::max(off, std::abs(h[i][j]));
      }
    if (off <= scale * 5e-16 || scale == 0) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const std::complex<double> hpq = h[p][q];
        const double r = std::abs(hpq);
        if (r <= scale * 1e-18) continue;
        const double a = h[p][p].real(), b = h[q][q].real();
        const std::complex<double> w = hpq / r;
        const double tau = (b - a) / (2 * r);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
        const double cth = 1 / std::sqrt(1 + t * t), sth = t * cth;
        const std::complex<double> upp = w * cth, upq = -w * sth;
        const double uqp = sth, uqq = cth;
        for (std::size_t i = 0; i < n; ++i) {
          const auto hp = h[i][p], hq = h[i][q];
          h[i][p] = hp * upp + hq * uqp;
          h[i][q] = hp * upq + hq * uqq;
          const auto vp = v[i][p], vq = v[i][q];
          v[i][p] = vp * upp + vq * uqp;
          v[i][q] = vp * upq + vq * uqq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const auto hp = h[p][j], hq = h[q][j];
          h[p][j] = std::conj(upp) * hp + uqp * hq;
          h[q][j] = std::conj(upq) * hp + uqq * hq;
        }
      }
  }
  return v;
}

Rat rat_of_double(double x) {
  if (!std::isfinite(x)) throw PrecisionExhausted("non-finite value in eigenvector seed");
  return Rat(x);  // doubles are dyadic rationals, so this is exact
}

/* One certification attempt for the signature of H = (1-c) S + i s T at a
   certified circle point (c, s).  The exact rational basis V is applied as
   a congruence in interval arithmetic; if every diagonal of B = V^H H V
   certifiably dominates its off-diagonal row sum, Gershgorin localizes the
   eigenvalues of the true (Hermitian) congruence away from zero on the side
   of the diagonal sign.  Strict dominance also makes B nonsingular, hence V
   invertible, so Sylvester transfers the sign count back to H. */
std::optional<int> certify_signature(const IntMatrix& sm, const IntMatrix& tm,
                                     const CertifiedReal& c, const CertifiedReal& s,
                                     const RatMat& vre, const RatMat& vim, CMatD* bmid) {
  const std::size_t n = sm.size();
  const mpfr_prec_t p = c.precision();
  const CertifiedReal omc = CertifiedReal::from_rat(Rat(1), p) - c;

  std::vector<std::vector<ComplexBox>> h(n, std::vector<ComplexBox>(n));
  std::vector<std::vector<ComplexBox>> v(n, std::vector<ComplexBox>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      h[i][j] = ComplexBox(Rat(sm[i][j]) * omc, Rat(tm[i][j]) * s);
      v[i][j] = ComplexBox(CertifiedReal::from_rat(vre[i][j], p),
                           CertifiedReal::from_rat(vim[i][j], p));
    }

  std::vector<std::vector<ComplexBox>> hv(n, std::vector<ComplexBox>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ComplexBox acc;
      for (std::size_t k = 0; k < n; ++k) acc = acc + h[i][k] * v[k][j];
      hv[i][j] = std::move(acc);
    }
  std::vector<std::vector<ComplexBox>> b(n, std::vector<ComplexBox>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ComplexBox acc;
      for (std::size_t k = 0; k < n; ++k) {
        ComplexBox conj_vki(v[k][i].re, -v[k][i].im);
        acc = acc + conj_vki * hv[k][j];
      }
      b[i][j] = std::move(acc);
    }

  if (bmid) {
    bmid->assign(n, std::vector<std::complex<double>>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        (*bmid)[i][j] = {b[i][j].re.midpoint(), b[i][j].im.midpoint()};
  }

  int pos = 0, neg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    CertifiedReal rsum;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) rsum = rsum + b[i][j].modulus();
    const CertifiedReal& di = b[i][i].re;
    auto above = (di - rsum).sign();
    if (above && *above > 0) {
      ++pos;
      continue;
    }
    auto below = (di + rsum).sign();
    if (below && *below < 0) {
      ++neg;
      continue;
    }
    return std::nullopt;
  }
  return pos - neg;
}

/* Certified signature of (1-c) S + i s T where (c, s) is produced at any
   requested precision by the point generator.  Escalation raises the
   working precision and refines the congruence basis by absorbing a fresh
   double-precision diagonalization of the current residual. */
int certified_hermitian(const IntMatrix& a,
                        const std::function<std::pair<CertifiedReal, CertifiedReal>(mpfr_prec_t)>& point,
                        const PrecisionPolicy& pol) {
  const std::size_t n = a.size();
  IntMatrix sm(n, std::vector<Int>(n)), tm(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      sm[i][j] = a[i][j] + a[j][i];
      tm[i][j] = a[j][i] - a[i][j];
    }

  mpfr_prec_t p = pol.start;
  auto seed = point(p);
  CMatD hd(n, std::vector<std::complex<double>>(n));
  const double omc = 1 - seed.first.midpoint(), sy = seed.second.midpoint();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      hd[i][j] = {omc * sm[i][j].get_d(), sy * tm[i][j].get_d()};
  CMatD v0 = jacobi_eigenvectors(std::move(hd));
  RatMat vre(n, std::vector<Rat>(n)), vim(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      vre[i][j] = rat_of_double(v0[i][j].real());
      vim[i][j] = rat_of_double(v0[i][j].imag());
    }

  for (int round = 0; round < 16; ++round) {
    auto cs = point(p);
    CMatD bmid;
    auto sig = certify_signature(sm, tm, cs.first, cs.second, vre, vim, &bmid);
    if (sig) return *sig;
    CMatD w = jacobi_eigenvectors(std::move(bmid));
    RatMat nre(n, std::vector<Rat>(n, Rat(0))), nim(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
          Rat wr = rat_of_double(w[k][j].real()), wi = rat_of_double(w[k][j].imag());
          nre[i][j] += vre[i][k] * wr - vim[i][k] * wi;
          nim[i][j] += vre[i][k] * wi + vim[i][k] * wr;
        }
    vre = std::move(nre);
    vim = std::move(nim);
    if (p < pol.cap) p = std::min<mpfr_prec_t>(p * 2, pol.cap);
  }
  throw PrecisionExhausted("could not certify the Hermitian signature");
}

int hermitian_signature_at_cos(const IntMatrix& a, const Rat& cosv, const PrecisionPolicy& pol) {
  auto gen = [&cosv](mpfr_prec_t p) {
    CertifiedReal c = CertifiedReal::from_rat(cosv, p);
    CertifiedReal s = sqrt(CertifiedReal::from_rat(Rat(1), p) - c * c);
    return std::make_pair(std::move(c), std::move(s));
  };
  return certified_hermitian(a, gen, pol);
}

int hermitian_signature_at_turn(const IntMatrix& a, const Rat& turn, const PrecisionPolicy& pol) {
  auto gen = [&turn](mpfr_prec_t p) {
    CertifiedReal ang = (Rat(2) * turn) * CertifiedReal::pi(p);
    return std::make_pair(cos(ang), sin(ang));
  };
  return certified_hermitian(a, gen, pol);
}

/* Certified enclosure of turn = acos(x/2) / (2 pi) for an isolated x-root,
   refined until the turn radius comes under target. */
CertifiedReal turn_enclosure(RealRootInterval& xr, double target, const PrecisionPolicy& pol) {
  CertifiedReal ang = circle_angle(xr, target * 6.0, pol);
  CertifiedReal two_pi = Rat(2) * CertifiedReal::pi(ang.precision());
  return ang / two_pi;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace

/* ---- exact integer linear algebra --------------------------------------- */

Int int_det(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error("int_det: matrix is not square");
  if (n == 0) return 1;
  /* Bareiss fraction-free elimination: every division below is exact, and
     the last pivot is the determinant up to the row-swap sign. */
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign == 1 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

int symmetric_signature(const IntMatrix& s) {
  const std::size_t n = s.size();
  for (const auto& row : s)
    if (row.size() != n) throw Error("symmetric_signature: matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (s[i][j] != s[j][i]) throw Error("symmetric_signature: matrix is not symmetric");

  /* Faddeev-LeVerrier: with M_1 = S and M_j = S (M_{j-1} + c_{j-1} I), the
     traces give the characteristic polynomial lambda^n + c_1 lambda^{n-1}
     + ... + c_n with c_j = -tr(M_j)/j, all divisions exact. */
  std::vector<Int> c(n + 1);
  c[0] = 1;
  IntMatrix m;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j == 1) {
      m = s;
    } else {
      IntMatrix t = m;
      for (std::size_t i = 0; i < n; ++i) t[i][i] += c[j - 1];
      m = mat_mul(s, t);
    }
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += m[i][i];
    Int jj(static_cast<unsigned long>(j));
    mpz_divexact(c[j].get_mpz_t(), tr.get_mpz_t(), jj.get_mpz_t());
    c[j] = -c[j];
  }

  /* All eigenvalues are real, so Descartes' rule counts the positive and
     negative ones exactly (with multiplicity); zeros just drop out. */
  auto variations = [](const std::vector<Int>& a) {
    int v = 0, last = 0;
    for (const Int& x : a) {
      int sg = sgn(x);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++v;
      last = sg;
    }
    return v;
  };
  std::vector<Int> neg(n + 1);
  for (std::size_t j = 0; j <= n; ++j) neg[j] = ((n - j) % 2 == 0) ? c[j] : Int(-c[j]);
  return variations(c) - variations(neg);
}

/* ---- Seifert matrices ---------------------------------------------------- */

SeifertMatrix::SeifertMatrix(IntMatrix m) : a_(std::move(m)) {
  const std::size_t n = a_.size();
  for (const auto& row : a_)
    if (row.size() != n) throw InvalidSeifert("Seifert matrix must be square");
  IntMatrix d(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = a_[i][j] - a_[j][i];
  if (int_det(std::move(d)) != 1)
    throw InvalidSeifert("det(A - A^t) must be 1 for a Seifert matrix");
}

IntPoly SeifertMatrix::alexander() const {
  const std::size_t n = a_.size();
  if (n == 0) return IntPoly{1};
  /* det(A t - A^t) has degree at most n; evaluate at the integers 0..n and
     rebuild the coefficients by Newton interpolation.  The divided
     differences are rational, the final coefficients integral. */
  std::vector<Rat> node(n + 1), val(n + 1);
  for (std::size_t t0 = 0; t0 <= n; ++t0) {
    IntMatrix m(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m[i][j] = a_[i][j] * Int(static_cast<unsigned long>(t0)) - a_[j][i];
    node[t0] = Rat(static_cast<unsigned long>(t0));
    val[t0] = Rat(int_det(std::move(m)));
  }
  for (std::size_t lvl = 1; lvl <= n; ++lvl)
    for (std::size_t i = n; i >= lvl; --i)
      val[i] = (val[i] - val[i - 1]) / (node[i] - node[i - lvl]);
  std::vector<Rat> coef{val[n]};
  for (long i = static_cast<long>(n) - 1; i >= 0; --i) {
    std::vector<Rat> next(coef.size() + 1, Rat(0));
    for (std::size_t j = 0; j < coef.size(); ++j) {
      next[j + 1] += coef[j];
      next[j] -= node[i] * coef[j];
    }
    next[0] += val[i];
    coef = std::move(next);
  }
  std::vector<Int> ic(coef.size());
  for (std::size_t j = 0; j < coef.size(); ++j) {
    coef[j].canonicalize();
    if (coef[j].get_den() != 1)
      throw std::logic_error("Seifert determinant interpolation is not integral");
    ic[j] = coef[j].get_num();
  }
  return normalize_alexander(IntPoly(std::move(ic)));
}

int SeifertMatrix::signature() const {
  const std::size_t n = a_.size();
  IntMatrix s(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i][j] = a_[i][j] + a_[j][i];
  return symmetric_signature(s);
}

int SeifertMatrix::signature_at(const Rat& turn, const CertifyOptions& opts) const {
  Rat r = reduce_turn(turn);
  if (r == 0) return 0;
  IntPoly d = alexander();
  const long deg = d.degree();
  if (deg >= 1 && r.get_den().fits_ulong_p()) {
    /* e^{2 pi i p/q} in lowest terms is a primitive q-th root of unity, so
       the form is singular exactly when the q-th cyclotomic polynomial
       divides the Alexander polynomial. */
    unsigned long q = r.get_den().get_ui();
    if (q <= static_cast<unsigned long>(2 * deg * deg) &&
        poly_gcd(d, cyclotomic(q)).degree() >= 1)
      throw SingularAtZ("Alexander polynomial vanishes at turn " + rat_str(r));
  }
  if (r == Rat(1, 2)) return signature();
  return hermitian_signature_at_turn(a_, r, opts.prec);
}

SeifertMatrix SeifertMatrix::mirrored() const {
  IntMatrix m = a_;
  for (auto& row : m)
    for (auto& x : row) x = -x;
  return SeifertMatrix(std::move(m));
}

/* ---- knot records -------------------------------------------------------- */

KnotRecord::KnotRecord(KnotData data, const CertifyOptions& opts)
    : data_(std::move(data)), opts_(opts) {
  const std::string& nm = data_.name;
  if (nm.empty()) throw CatalogError("knot record must have a name");
  if (!data_.seifert && !data_.alexander)
    throw CatalogError(nm + ": record needs a Seifert matrix or an Alexander polynomial");

  if (data_.seifert) {
    SeifertMatrix sm(*data_.seifert);  // validates
    if (data_.mirror) {
      seifert_ = sm.mirrored().matrix();
    } else {
      seifert_ = sm.matrix();
    }
    alex_ = SeifertMatrix(*seifert_).alexander();
    if (data_.alexander) {
      IntPoly declared;
      try {
        declared = normalize_alexander(*data_.alexander);
      } catch (const ZeroPolynomial&) {
        throw CatalogError(nm + ": Alexander polynomial is zero");
      }
      if (declared != alex_)
        throw CatalogError(nm + ": declared Alexander polynomial does not match the Seifert matrix");
    }
  } else {
    try {
      alex_ = normalize_alexander(*data_.alexander);
    } catch (const ZeroPolynomial&) {
      throw CatalogError(nm + ": Alexander polynomial is zero");
    }
  }

  if (alex_.degree() % 2 != 0 || !alex_.is_palindrome())
    throw CatalogError(nm + ": Alexander polynomial is not reciprocal");
  if (alex_.eval(Int(1)) != 1)
    throw CatalogError(nm + ": Alexander polynomial value at t = 1 is not a unit");
  if (alex_.eval(Int(-1)) % 2 == 0)
    throw CatalogError(nm + ": knot determinant (value at t = -1) must be odd");

  const long d = alex_.degree();
  for (unsigned long q = 1; d >= 1 && q <= static_cast<unsigned long>(2 * d * d); ++q) {
    if (static_cast<long>(euler_phi(q)) > d) continue;
    if (poly_gcd(alex_, cyclotomic(q)).degree() >= 1) cyclo_.push_back(q);
  }

  if (data_.signature && *data_.signature % 2 != 0)
    throw CatalogError(nm + ": total signature must be even");
  if (data_.jumps) {
    Rat prev(0);
    for (const DeclaredJump& e : data_.jumps.value()) {
      Rat t = e.turn;
      t.canonicalize();
      if (!(t > 0 && t < Rat(1, 2)))
        throw CatalogError(nm + ": jump turn " + e.text + " must lie strictly between 0 and 1/2");
      if (!(t > prev))
        throw CatalogError(nm + ": jump turns must be strictly increasing");
      prev = t;
      if (e.value % 2 != 0)
        throw CatalogError(nm + ": jump value after " + e.text + " must be even");
      if (e.digits < 0) throw CatalogError(nm + ": negative digit count on jump " + e.text);
    }
  }

  build_profile();
}

void KnotRecord::build_profile() {
  const std::string& nm = data_.name;

  struct Build {
    RealRootInterval xr;
    std::optional<Rat> exact;
    CertifiedReal turn;
    double tgt = 0;
    int mult = 1;
  };
  std::vector<Build> bs;
  if (alex_.degree() >= 2) {
    IntPoly q = reciprocal_decompose(alex_);
    std::vector<RealRootInterval> xroots = isolate_real_roots(q, Rat(-2), Rat(2));
    /* acos is decreasing, so descending x gives ascending turns */
    for (auto it = xroots.rbegin(); it != xroots.rend(); ++it) {
      Build b;
      b.xr = *it;
      b.exact = exact_circle_turn(b.xr);
      b.tgt = opts_.target_radius;
      b.turn = turn_enclosure(b.xr, b.tgt, opts_.prec);
      b.mult = b.xr.multiplicity;
      bs.push_back(std::move(b));
    }
  }

  /* Refine until every enclosure sits strictly inside (0, 1/2) and
     consecutive jumps are certifiably separated, so each arc between them
     is well defined. */
  for (int round = 0;; ++round) {
    if (round > 120) throw PrecisionExhausted(nm + ": could not separate jump angles");
    bool ok = true;
    auto tighten = [&](Build& b) {
      if (b.exact) return;
      b.tgt /= 16.0;
      b.turn = turn_enclosure(b.xr, b.tgt, opts_.prec);
      ok = false;
    };
    for (auto& b : bs) {
      if (b.exact) continue;
      if (!(b.turn.lo().sgn() > 0 &&
            mpfr_cmp_q(b.turn.hi().raw(), Rat(1, 2).get_mpq_t()) < 0))
        tighten(b);
    }
    for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
      Build &a = bs[i], &b = bs[i + 1];
      bool sep;
      if (a.exact && b.exact) {
        if (!(*a.exact < *b.exact)) throw std::logic_error(nm + ": jump angles out of order");
        sep = true;
      } else if (a.exact) {
        sep = mpfr_cmp_q(b.turn.lo().raw(), a.exact->get_mpq_t()) > 0;
      } else if (b.exact) {
        sep = mpfr_cmp_q(a.turn.hi().raw(), b.exact->get_mpq_t()) < 0;
      } else {
        sep = a.turn.hi().cmp(b.turn.lo()) < 0;
      }
      if (!sep) {
        tighten(a);
        tighten(b);
      }
    }
    if (ok) break;
  }

  const int k = static_cast<int>(bs.size());
  std::optional<int> declared_sigma;
  if (data_.signature)
    declared_sigma = data_.mirror ? -*data_.signature : *data_.signature;

  auto finish = [&](const std::vector<int>& values) {
    SignatureProfile pf;
    for (int j = 0; j < k; ++j) {
      SignatureJump sj;
      sj.turn = bs[j].turn;
      sj.exact_turn = bs[j].exact;
      sj.xroot = bs[j].xr;
      sj.multiplicity = bs[j].mult;
      sj.value_after = values[j];
      pf.jumps.push_back(std::move(sj));
    }
    pf.sigma = k == 0 ? 0 : values.back();
    profile_ = std::move(pf);
    sigma_ = profile_->sigma;
  };

  /* Turn matching for declared jump rows: an exact p/q must be exactly a
     jump angle; a decimal with d digits must come within half an ulp of the
     certified enclosure (with a little slack). */
  auto match_turn = [&](const Build& b, const DeclaredJump& e) {
    Rat et = e.turn;
    et.canonicalize();
    if (e.digits == 0) {
      if (!b.exact || *b.exact != et)
        throw CatalogError(nm + ": jump turn " + e.text +
                           " is not an exact jump angle of the Alexander polynomial");
      return;
    }
    Rat tol(51, 100);
    for (int i = 0; i < e.digits; ++i) tol /= 10;
    bool okm;
    if (b.exact) {
      Rat diff = *b.exact - et;
      if (diff < 0) diff = -diff;
      okm = diff <= tol;
    } else {
      Rat lo = et - tol, hi = et + tol;
      okm = !(mpfr_cmp_q(b.turn.lo().raw(), hi.get_mpq_t()) > 0 ||
              mpfr_cmp_q(b.turn.hi().raw(), lo.get_mpq_t()) < 0);
    }
    if (!okm)
      throw CatalogError(nm + ": declared jump turn " + e.text +
                         " does not match a jump angle of the Alexander polynomial");
  };

  if (seifert_) {
    const IntMatrix& a = *seifert_;
    const std::size_t n = a.size();
    IntMatrix s(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s[i][j] = a[i][j] + a[j][i];
    const int sig = symmetric_signature(s);

    std::vector<int> values(static_cast<std::size_t>(k), 0);
    auto upper = [](const RealRootInterval& r) { return r.exact ? r.lo : r.hi; };
    if (k > 0) {
      values[k - 1] = sig;  // arc ending at z = -1
      /* sample each interior arc at a rational cosine strictly between the
         isolating x-intervals of its bounding jumps */
      for (int j = 0; j + 1 < k; ++j) {
        Rat x = (upper(bs[j + 1].xr) + bs[j].xr.lo) / 2;
        values[j] = hermitian_signature_at_cos(a, x / 2, opts_.prec);
        if (values[j] % 2 != 0) throw std::logic_error(nm + ": odd arc signature");
      }
      /* the arc touching z = 1 must carry signature zero */
      Rat x0 = (upper(bs[0].xr) + 2) / 2;
      if (hermitian_signature_at_cos(a, x0 / 2, opts_.prec) != 0)
        throw std::logic_error(nm + ": signature does not vanish near z = 1");
    } else if (sig != 0) {
      throw std::logic_error(nm + ": nonzero signature without unit-circle roots");
    }

    if (declared_sigma && *declared_sigma != sig)
      throw CatalogError(nm + ": declared signature " + std::to_string(*declared_sigma) +
                         " does not match the Seifert matrix value " + std::to_string(sig));
    if (data_.jumps) {
      const auto& dj = *data_.jumps;
      if (static_cast<int>(dj.size()) != k)
        throw CatalogError(nm + ": declares " + std::to_string(dj.size()) +
                           " signature jumps but the Alexander polynomial has " +
                           std::to_string(k) + " jump pairs");
      for (int j = 0; j < k; ++j) {
        match_turn(bs[j], dj[j]);
        int ev = data_.mirror ? -dj[j].value : dj[j].value;
        if (ev != values[j])
          throw CatalogError(nm + ": declared jump value after " + dj[j].text +
                             " does not match the Seifert matrix");
      }
    }
    finish(values);
    return;
  }

  if (data_.jumps) {
    const auto& dj = *data_.jumps;
    if (static_cast<int>(dj.size()) != k)
      throw CatalogError(nm + ": declares " + std::to_string(dj.size()) +
                         " signature jumps but the Alexander polynomial has " +
                         std::to_string(k) + " jump pairs");
    std::vector<int> values(static_cast<std::size_t>(k), 0);
    for (int j = 0; j < k; ++j) {
      match_turn(bs[j], dj[j]);
      values[j] = data_.mirror ? -dj[j].value : dj[j].value;
    }
    if (declared_sigma) {
      int last = k == 0 ? 0 : values.back();
      if (*declared_sigma != last)
        throw CatalogError(nm + ": declared signature does not match the last jump value");
    }
    finish(values);
    return;
  }

  if (k == 0) {
    if (declared_sigma && *declared_sigma != 0)
      throw CatalogError(nm + ": signature must be zero when the Alexander polynomial has no unit-circle roots");
    finish({});
    return;
  }
  if (k == 1 && declared_sigma) {
    /* one jump pair: the signature is 0 before it and sigma(K) after it */
    finish({*declared_sigma});
    return;
  }
  sigma_ = declared_sigma;
  no_profile_reason_ = nm + ": signature profile undetermined: the Alexander polynomial has " +
                       std::to_string(k) + " jump pairs and the record carries " +
                       (declared_sigma ? "only the total signature" : "no signature data");
}

KnotRecord::KnotRecord(const KnotRecord& o)
    : data_(o.data_), opts_(o.opts_), seifert_(o.seifert_), alex_(o.alex_),
      cyclo_(o.cyclo_), profile_(o.profile_), sigma_(o.sigma_),
      no_profile_reason_(o.no_profile_reason_) {
  std::lock_guard<std::mutex> g(o.mu_);
  tau_ = o.tau_;
}

KnotRecord& KnotRecord::operator=(const KnotRecord& o) {
  if (this == &o) return *this;
  std::scoped_lock g(mu_, o.mu_);
  data_ = o.data_;
  opts_ = o.opts_;
  seifert_ = o.seifert_;
  alex_ = o.alex_;
  cyclo_ = o.cyclo_;
  profile_ = o.profile_;
  sigma_ = o.sigma_;
  no_profile_reason_ = o.no_profile_reason_;
  tau_ = o.tau_;
  return *this;
}

const SignatureProfile& KnotRecord::profile() const {
  if (!profile_) throw InsufficientData(no_profile_reason_);
  return *profile_;
}

int KnotRecord::signature() const {
  if (sigma_) return *sigma_;
  throw InsufficientData(data_.name + ": total signature is not determined by the record");
}

int KnotRecord::signature_at(const Rat& turn) const {
  Rat r = reduce_turn(turn);
  if (r == 0) return 0;
  if (r.get_den().fits_ulong_p()) {
    unsigned long q = r.get_den().get_ui();
    if (std::find(cyclo_.begin(), cyclo_.end(), q) != cyclo_.end())
      throw SingularAtZ(data_.name + ": Alexander polynomial vanishes at turn " + rat_str(r));
  }
  if (r == Rat(1, 2)) return signature();

  const SignatureProfile& pf = profile();
  int before = 0;
  for (const SignatureJump& j : pf.jumps) {
    if (j.exact_turn) {
      /* equality would be a singular point, rejected above */
      if (r < *j.exact_turn) return before;
      before = j.value_after;
      continue;
    }
    RealRootInterval xr = j.xroot;
    CertifiedReal t = j.turn;
    double tgt = opts_.target_radius;
    bool after = false, decided = false;
    for (int round = 0; round < 90; ++round) {
      if (mpfr_cmp_q(t.lo().raw(), r.get_mpq_t()) > 0) {
        decided = true;  // the whole enclosure is above r
        break;
      }
      if (mpfr_cmp_q(t.hi().raw(), r.get_mpq_t()) < 0) {
        decided = after = true;
        break;
      }
      tgt /= 16;
      t = turn_enclosure(xr, tgt, opts_.prec);
    }
    if (!decided)
      throw PrecisionExhausted(data_.name + ": could not separate turn " + rat_str(r) +
                               " from a jump angle");
    if (!after) return before;
    before = j.value_after;
  }
  return before;
}

long long KnotRecord::signature_sum(unsigned long n) const {
  if (n == 0) throw Error("signature_sum needs n >= 1");
  for (unsigned long q : cyclo_)
    if (n % q == 0)
      throw SingularAtRootOfUnity(data_.name + ": an n-th root of unity with n = " +
                                  std::to_string(n) + " is a root of the Alexander polynomial");
  long long total = 0;
  for (unsigned long j = 1; 2 * j < n; ++j) {
    Rat r(j, n);
    r.canonicalize();
    total += signature_at(r);
  }
  total *= 2;  // conjugate pairs
  if (n % 2 == 0) total += signature();  // the term at z = -1
  return total;  // the term at z = 1 contributes zero
}

CertifiedReal KnotRecord::rho() const {
  const SignatureProfile& pf = profile();
  if (pf.jumps.empty()) return CertifiedReal();  // exactly zero
  mpfr_prec_t p = 256;
  for (const SignatureJump& j : pf.jumps)
    if (!j.exact_turn) p = std::max(p, j.turn.precision());
  const std::size_t k = pf.jumps.size();
  std::vector<CertifiedReal> s(k);
  for (std::size_t i = 0; i < k; ++i)
    s[i] = pf.jumps[i].exact_turn ? CertifiedReal::from_rat(*pf.jumps[i].exact_turn, p)
                                  : pf.jumps[i].turn;
  const CertifiedReal half = CertifiedReal::from_rat(Rat(1, 2), p);
  /* rho = 2 sum_i value_i (s_{i+1} - s_i), the last endpoint being 1/2;
     the factor 2 accounts for the conjugate half of the circle */
  CertifiedReal acc;
  for (std::size_t i = 0; i < k; ++i) {
    const CertifiedReal& next = (i + 1 < k) ? s[i + 1] : half;
    int v = pf.jumps[i].value_after;
    if (v != 0) acc = acc + Rat(2 * static_cast<long>(v)) * (next - s[i]);
  }
  return acc;
}

CertifiedReal KnotRecord::tau() const {
  std::lock_guard<std::mutex> g(mu_);
  if (!tau_) tau_ = log_mahler(alex_, opts_);
  return *tau_;
}

KnotRecord KnotRecord::mirrored() const {
  KnotData d = data_;
  d.mirror = !d.mirror;
  return KnotRecord(std::move(d), opts_);
}

}  // namespace knotcomm
