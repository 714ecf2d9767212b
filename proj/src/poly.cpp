#include "knotcomm/poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace knotcomm {

namespace {

const Int kZero = 0;

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/* Exact integer quotient; throws if the division is not exact. */
Int divexact_int(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::domain_error("divexact_int: not divisible");
  return q;
}

}  // namespace

/* ---- IntPoly ------------------------------------------------------------ */

IntPoly::IntPoly(std::initializer_list<int> coeffs) {
  c_.reserve(coeffs.size());
  for (int v : coeffs) c_.emplace_back(v);
  trim();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int v) {
  IntPoly p;
  p.c_.push_back(std::move(v));
  p.trim();
  return p;
}

IntPoly IntPoly::monomial(Int c, unsigned k) {
  IntPoly p;
  p.c_.assign(k + 1, Int(0));
  p.c_[k] = std::move(c);
  p.trim();
  return p;
}

const Int& IntPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

const Int& IntPoly::lc() const {
  if (c_.empty()) throw std::domain_error("lc of zero polynomial");
  return c_.back();
}

Int IntPoly::eval(const Int& x) const {
  Int r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

int IntPoly::sign_at(const Rat& x) const {
  if (c_.empty()) return 0;
  /* sign(p(u/v)) = sign(sum c_i u^i v^(d-i)) since v > 0 in canonical form */
  const Int& u = x.get_num();
  const Int& v = x.get_den();
  Int acc = c_.back();
  Int vp = 1;
  for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) {
    vp *= v;
    acc = acc * u + *it * vp;
  }
  return sgn(acc);
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Int(i) * c_[i];
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reversed() const {
  std::vector<Int> r(c_.rbegin(), c_.rend());
  return IntPoly(std::move(r));
}

bool IntPoly::is_palindrome() const {
  std::size_t n = c_.size();
  for (std::size_t i = 0; i < n / 2; ++i)
    if (c_[i] != c_[n - 1 - i]) return false;
  return true;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(r));
}

IntPoly operator*(const Int& s, const IntPoly& p) {
  if (s == 0) return {};
  IntPoly r = p;
  for (auto& v : r.c_) v *= s;
  return r;
}

std::string IntPoly::str(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Int& c = c_[i];
    if (c == 0) continue;
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

/* ---- rational polynomials (internal) ------------------------------------ */

namespace {

/* Thin dense polynomial over Q used for remainder arithmetic where integer
   pseudo-division would obscure signs or blow up exponents. */
struct RatPoly {
  std::vector<Rat> c;  // constant-first, trimmed

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Rat& lc() const { return c.back(); }

  static RatPoly from(const IntPoly& p) {
    RatPoly r;
    r.c.reserve(p.coeffs().size());
    for (const Int& v : p.coeffs()) r.c.emplace_back(v);
    return r;
  }
};

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

/* a mod m in Q[t]; m nonzero. */
RatPoly rp_mod(RatPoly a, const RatPoly& m) {
  long dm = m.degree();
  while (!a.is_zero() && a.degree() >= dm) {
    Rat q = a.lc() / m.lc();
    long shift = a.degree() - dm;
    for (long j = 0; j <= dm; ++j) a.c[shift + j] -= q * m.c[j];
    a.trim();
  }
  return a;
}

/* t^n mod m for deg m >= 1, by binary exponentiation. */
RatPoly t_pow_mod(unsigned long n, const RatPoly& m) {
  RatPoly base;
  base.c = {Rat(0), Rat(1)};  // t
  base = rp_mod(std::move(base), m);
  RatPoly acc;
  acc.c = {Rat(1)};
  acc = rp_mod(std::move(acc), m);  // handles deg m == 1
  while (n) {
    if (n & 1) acc = rp_mod(rp_mul(acc, base), m);
    n >>= 1;
    if (n) base = rp_mod(rp_mul(base, base), m);
  }
  return acc;
}

/* Write p as (integer polynomial) / den with den > 0 minimal. */
std::pair<IntPoly, Int> clear_denominators(const RatPoly& p) {
  Int den = 1;
  for (const Rat& v : p.c) den = lcm(den, v.get_den());
  std::vector<Int> c(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    Rat scaled = p.c[i] * den;
    assert(scaled.get_den() == 1);
    c[i] = scaled.get_num();
  }
  return {IntPoly(std::move(c)), den};
}

/* Newton-form interpolation through (xs[i], vs[i]); xs pairwise distinct. */
RatPoly interpolate(const std::vector<Int>& xs, const std::vector<Rat>& vs) {
  std::size_t n = xs.size();
  assert(vs.size() == n && n > 0);
  /* divided differences, built in place */
  std::vector<Rat> dd = vs;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - level]);
  /* Horner expansion of the Newton form */
  RatPoly acc;
  acc.c = {dd[n - 1]};
  acc.trim();
  for (std::size_t i = n - 1; i-- > 0;) {
    RatPoly lin;  // t - xs[i]
    lin.c = {Rat(-xs[i]), Rat(1)};
    acc = rp_mul(acc, lin);
    if (acc.c.empty()) acc.c.assign(1, Rat(0));
    acc.c[0] += dd[i];
    acc.trim();
  }
  return acc;
}

}  // namespace

/* ---- content, division, gcd -------------------------------------------- */

Int content(const IntPoly& p) {
  Int g = 0;
  for (const Int& c : p.coeffs()) g = gcd(g, c);
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  Int ct = content(p);
  std::vector<Int> c(p.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = divexact_int(p.coeffs()[i], ct);
  return IntPoly(std::move(c));
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("divexact: division by zero polynomial");
  if (a.is_zero()) return {};
  long da = a.degree(), db = b.degree();
  if (da < db) throw std::domain_error("divexact: not divisible (degree)");
  std::vector<Int> r = a.coeffs();
  std::vector<Int> q(da - db + 1, Int(0));
  for (long i = da - db; i >= 0; --i) {
    Int& top = r[i + db];
    if (top == 0) continue;
    Int qi, rem;
    mpz_tdiv_qr(qi.get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
    if (rem != 0) throw std::domain_error("divexact: not divisible");
    q[i] = qi;
    for (long j = 0; j <= db; ++j) r[i + j] -= qi * b.coeff(j);
  }
  for (const Int& v : r)
    if (v != 0) throw std::domain_error("divexact: not divisible (remainder)");
  return IntPoly(std::move(q));
}

bool divides(const IntPoly& b, const IntPoly& a) {
  if (b.is_zero()) return a.is_zero();
  if (a.is_zero()) return true;
  if (a.degree() < b.degree()) return false;
  return rp_mod(RatPoly::from(a), RatPoly::from(b)).is_zero();
}

/* Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, all over Z. */
static IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const long db = b.degree();
  const Int lcb = b.lc();
  long needed = a.degree() - db + 1;
  long done = 0;
  while (!a.is_zero() && a.degree() >= db) {
    long e = a.degree() - db;
    a = lcb * a - IntPoly::monomial(a.lc(), static_cast<unsigned>(e)) * b;
    ++done;
  }
  for (; done < needed; ++done) a = lcb * a;
  return a;
}

IntPoly poly_gcd(const IntPoly& a0, const IntPoly& b0) {
  IntPoly a = primitive_part(a0), b = primitive_part(b0);
  if (a.is_zero()) std::swap(a, b);
  if (b.is_zero()) {
    if (!a.is_zero() && a.lc() < 0) return -a;
    return a;
  }
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (a.lc() < 0) return -a;
  return a;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree_part of zero polynomial");
  IntPoly f = primitive_part(p);
  if (f.lc() < 0) f = -f;
  if (f.degree() == 0) return IntPoly{1};
  IntPoly g = poly_gcd(f, f.derivative());
  if (g.degree() == 0) return f;
  return divexact(f, g);
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  if (p.is_zero()) throw ZeroPolynomial("squarefree_decomposition of zero polynomial");
  IntPoly f = primitive_part(p);
  if (f.lc() < 0) f = -f;
  if (f.degree() == 0) return out;
  /* Yun's algorithm */
  IntPoly df = f.derivative();
  IntPoly g = poly_gcd(f, df);
  if (g.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  IntPoly w = divexact(f, g);
  IntPoly y = divexact(df, g);
  IntPoly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    IntPoly fac = poly_gcd(w, z);
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = divexact(w, fac);
    y = divexact(z, fac);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

/* ---- resultants --------------------------------------------------------- */

Int resultant(const IntPoly& a0, const IntPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) return 0;
  IntPoly A = a0, B = b0;
  int s = 1;
  if (A.degree() < B.degree()) {
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    std::swap(A, B);
  }
  if (B.degree() == 0) return s * ipow(B.lc(), A.degree());

  /* subresultant PRS with the classical g/h bookkeeping; all the interior
     divisions are exact */
  Int ca = content(A), cb = content(B);
  A = primitive_part(A);
  B = primitive_part(B);
  Int acc = ipow(ca, B.degree()) * ipow(cb, A.degree());
  Int g = 1, h = 1;
  for (;;) {
    long da = A.degree(), db = B.degree();
    long delta = da - db;
    if ((da & 1) && (db & 1)) s = -s;
    IntPoly R = pseudo_rem(A, B);
    A = std::move(B);
    if (R.is_zero()) return 0;
    {
      Int div = g * ipow(h, delta);
      std::vector<Int> c(R.coeffs().size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = divexact_int(R.coeffs()[i], div);
      B = IntPoly(std::move(c));
    }
    g = A.lc();
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = divexact_int(ipow(g, delta), ipow(h, delta - 1));
    if (B.degree() == 0) break;
  }
  /* A holds the last member of positive degree, B the final constant */
  Int num = ipow(B.lc(), A.degree());
  Int den = ipow(h, A.degree() - 1);
  return s * acc * divexact_int(num, den);
}

namespace {

/* Res(p, q) where q is given modulo p: q = qbar/qden on the roots of p, with
   formal degree dq.  Uses Res(p, q) = lc(p)^(dq - deg qbar) * Res(p, qbar) /
   qden^deg p, valid because p's roots see only q mod p. */
Rat resultant_via_reduction(const IntPoly& p, const RatPoly& qred, unsigned long dq) {
  if (qred.is_zero()) return Rat(0);
  auto [qbar, qden] = clear_denominators(qred);
  Rat r(resultant(p, qbar));
  r /= make_rat(ipow(qden, p.degree()), 1);
  r *= make_rat(ipow(p.lc(), dq - qbar.degree()), 1);
  return r;
}

}  // namespace

Int resultant_cyclic(const IntPoly& p, unsigned long n) {
  if (p.is_zero()) return 0;
  if (p.degree() == 0) return ipow(p.lc(), n);
  RatPoly m = RatPoly::from(p);
  RatPoly q = t_pow_mod(n, m);
  if (q.c.empty()) q.c.assign(1, Rat(0));
  q.c[0] -= 1;
  q.trim();
  Rat r = resultant_via_reduction(p, q, n);
  assert(r.get_den() == 1);
  return r.get_num();
}

IntPoly power_transform(const IntPoly& p, unsigned long n) {
  if (p.is_zero()) throw ZeroPolynomial("power_transform of zero polynomial");
  assert(n >= 1);
  const long m = p.degree();
  if (m == 0) return IntPoly::constant(ipow(p.lc(), n));
  RatPoly mod = RatPoly::from(p);
  RatPoly tn = t_pow_mod(n, mod);

  /* R(s) = Res_t(p(t), s - t^n) has degree m in s; interpolate it from m+1
     integer values of s */
  std::vector<Int> xs;
  std::vector<Rat> vs;
  for (long j = 0; j <= m; ++j) {
    Int x = (j % 2 == 0) ? Int(j / 2) : Int(-(j + 1) / 2);
    RatPoly q;  // x - t^n  (mod p)
    q.c.assign(std::max<std::size_t>(tn.c.size(), 1), Rat(0));
    for (std::size_t i = 0; i < tn.c.size(); ++i) q.c[i] = -tn.c[i];
    q.c[0] += Rat(x);
    q.trim();
    vs.push_back(resultant_via_reduction(p, q, n));
    xs.push_back(std::move(x));
  }
  RatPoly res = interpolate(xs, vs);
  std::vector<Int> c(res.c.size());
  for (std::size_t i = 0; i < res.c.size(); ++i) {
    if (res.c[i].get_den() != 1)
      throw std::logic_error("power_transform: non-integral interpolation");
    c[i] = res.c[i].get_num();
  }
  IntPoly out(std::move(c));
  if (out.degree() != m || out.lc() != ipow(p.lc(), n))
    throw std::logic_error("power_transform: inconsistent result");
  return out;
}

/* ---- reciprocal polynomials -------------------------------------------- */

IntPoly reciprocal_decompose(const IntPoly& p) {
  if (p.is_zero()) throw NotReciprocal("zero polynomial is not reciprocal");
  if (p.degree() % 2 != 0)
    throw NotReciprocal("odd degree: " + p.str());
  if (!p.is_palindrome())
    throw NotReciprocal("coefficients not palindromic: " + p.str());
  const long g = p.degree() / 2;
  /* p(t) = t^g * ( c_g + sum_{k=1..g} c_{g-k} (t^k + t^-k) ); substitute the
     Chebyshev-like basis u_k(x) = t^k + t^-k with u_0 = 2, u_1 = x,
     u_{k+1} = x u_k - u_{k-1}. */
  IntPoly x = IntPoly::monomial(1, 1);
  IntPoly u_prev = IntPoly{2};
  IntPoly u_cur = x;
  IntPoly q = IntPoly::constant(p.coeff(g));
  for (long k = 1; k <= g; ++k) {
    q = q + p.coeff(g - k) * u_cur;
    IntPoly u_next = x * u_cur - u_prev;
    u_prev = std::move(u_cur);
    u_cur = std::move(u_next);
  }
  return q;
}

/* ---- Sturm -------------------------------------------------------------- */

namespace {

/* Sturm chain of a squarefree polynomial.  Each member is scaled to a
   primitive integer polynomial by a positive rational, which preserves every
   sign evaluation. */
struct SturmChain {
  std::vector<IntPoly> seq;

  explicit SturmChain(const IntPoly& f) {
    seq.push_back(f);
    if (f.degree() >= 1) seq.push_back(primitive_part(f.derivative()));
    while (seq.size() >= 2 && !seq.back().is_zero() && seq.back().degree() >= 1) {
      RatPoly r = rp_mod(RatPoly::from(seq[seq.size() - 2]), RatPoly::from(seq.back()));
      if (r.is_zero()) break;  // cannot happen for squarefree input
      auto [ip, den] = clear_denominators(r);
      (void)den;
      seq.push_back(-primitive_part(ip));
    }
  }

  int variations(const Rat& x) const {
    int count = 0, prev = 0;
    for (const IntPoly& f : seq) {
      int s = f.sign_at(x);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  }
};

/* Remove the factor (v t - u) for the rational root u/v; f squarefree. */
IntPoly strip_rational_root(const IntPoly& f, const Rat& root) {
  std::vector<Int> lin = {-root.get_num(), root.get_den()};
  return divexact(f, IntPoly(std::move(lin)));
}

/* Distinct roots of squarefree f in the open interval (a, b); f(a) != 0 and
   f(b) != 0 are preconditions. */
int count_open(const SturmChain& ch, const Rat& a, const Rat& b) {
  return ch.variations(a) - ch.variations(b);
}

void isolate_rec(const IntPoly& f, const SturmChain& ch, const Rat& a, const Rat& b,
                 int mult, std::vector<RealRootInterval>& out) {
  int n = count_open(ch, a, b);
  if (n == 0) return;
  if (n == 1) {
    RealRootInterval r;
    r.lo = a;
    r.hi = b;
    r.multiplicity = mult;
    r.factor = f;
    r.exact = false;
    out.push_back(std::move(r));
    return;
  }
  Rat m = (a + b) / 2;
  if (f.sign_at(m) == 0) {
    RealRootInterval r;
    r.lo = m;
    r.hi = m;
    r.multiplicity = mult;
    r.factor = f;
    r.exact = true;
    out.push_back(std::move(r));
    IntPoly f2 = strip_rational_root(f, m);
    SturmChain ch2(f2);
    isolate_rec(f2, ch2, a, m, mult, out);
    isolate_rec(f2, ch2, m, b, mult, out);
    return;
  }
  isolate_rec(f, ch, a, m, mult, out);
  isolate_rec(f, ch, m, b, mult, out);
}

/* Roots of one squarefree factor in (a, b], with endpoint handling. */
void isolate_factor(IntPoly f, const Rat& a, const Rat& b, int mult,
                    std::vector<RealRootInterval>& out) {
  if (f.degree() < 1) return;
  if (f.sign_at(b) == 0) {
    RealRootInterval r;
    r.lo = b;
    r.hi = b;
    r.multiplicity = mult;
    r.factor = f;
    r.exact = true;
    out.push_back(r);
    f = strip_rational_root(f, b);
  }
  if (!f.is_zero() && f.degree() >= 1 && f.sign_at(a) == 0)
    f = strip_rational_root(f, a);
  if (f.degree() < 1) return;
  if (f.degree() == 1) {
    Rat root(-f.coeff(0), f.coeff(1));
    root.canonicalize();
    if (a < root && root < b) {
      RealRootInterval r;
      r.lo = root;
      r.hi = root;
      r.multiplicity = mult;
      r.factor = f;
      r.exact = true;
      out.push_back(std::move(r));
    }
    return;
  }
  SturmChain ch(f);
  isolate_rec(f, ch, a, b, mult, out);
}

bool intervals_disjoint(const RealRootInterval& x, const RealRootInterval& y) {
  /* open intervals (or points); touching endpoints are fine */
  const Rat& xl = x.lo;
  const Rat& xh = x.hi;
  const Rat& yl = y.lo;
  const Rat& yh = y.hi;
  if (x.exact && y.exact) return xl != yl;
  if (x.exact) return xl <= yl || xl >= yh;
  if (y.exact) return yl <= xl || yl >= xh;
  return xh <= yl || yh <= xl;
}

}  // namespace

int sturm_count(const IntPoly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw ZeroPolynomial("sturm_count of zero polynomial");
  if (!(a < b)) return 0;
  IntPoly f = squarefree_part(p);
  if (f.degree() < 1) return 0;
  int extra = 0;
  if (f.sign_at(b) == 0) {
    ++extra;  // b itself is in (a, b]
    f = strip_rational_root(f, b);
  }
  if (f.degree() >= 1 && f.sign_at(a) == 0) f = strip_rational_root(f, a);
  if (f.degree() < 1) return extra;
  SturmChain ch(f);
  return extra + count_open(ch, a, b);
}

std::vector<RealRootInterval> isolate_real_roots(const IntPoly& p, const Rat& a,
                                                 const Rat& b) {
  std::vector<RealRootInterval> out;
  if (p.is_zero()) throw ZeroPolynomial("isolate_real_roots of zero polynomial");
  if (!(a < b)) return out;
  for (auto& [f, e] : squarefree_decomposition(p)) isolate_factor(f, a, b, e, out);

  /* Refine until pairwise disjoint (factors are coprime, so the roots are
     distinct and separation always succeeds), then order increasingly. */
  for (;;) {
    bool clash = false;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (!intervals_disjoint(out[i], out[j])) {
          clash = true;
          Rat w1 = out[i].width() / 4;
          Rat w2 = out[j].width() / 4;
          refine_real_root(out[i], w1);
          refine_real_root(out[j], w2);
        }
    if (!clash) break;
  }
  std::sort(out.begin(), out.end(), [](const RealRootInterval& x, const RealRootInterval& y) {
    if (x.lo != y.lo) return x.lo < y.lo;
    return x.hi < y.hi;
  });
  return out;
}

void refine_real_root(RealRootInterval& r, const Rat& w) {
  if (r.exact) return;
  int slo = r.factor.sign_at(r.lo);
  while (r.hi - r.lo > w) {
    Rat m = (r.lo + r.hi) / 2;
    int sm = r.factor.sign_at(m);
    if (sm == 0) {
      r.lo = r.hi = m;
      r.exact = true;
      return;
    }
    if (sm == slo)
      r.lo = m;
    else
      r.hi = m;
  }
}

/* ---- cyclotomic polynomials -------------------------------------------- */

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const IntPoly& cyclotomic(unsigned long n) {
  static std::map<unsigned long, IntPoly> cache;
  static std::mutex mtx;
  assert(n >= 1);
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  /* build Phi_d for all divisors d of n, smallest first */
  std::vector<unsigned long> divs;
  for (unsigned long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      divs.push_back(d);
      if (d != n / d) divs.push_back(n / d);
    }
  std::sort(divs.begin(), divs.end());
  for (unsigned long d : divs) {
    if (cache.count(d)) continue;
    IntPoly f = IntPoly::monomial(1, static_cast<unsigned>(d)) - IntPoly{1};
    for (unsigned long e : divs)
      if (e < d && d % e == 0) f = divexact(f, cache.at(e));
    cache.emplace(d, std::move(f));
  }
  return cache.at(n);
}

std::optional<unsigned long> cyclotomic_divisor_index(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("cyclotomic test of zero polynomial");
  long d = p.degree();
  if (d == 0) return std::nullopt;
  /* phi(n) >= sqrt(n/2), so phi(n) <= d forces n <= 2 d^2 */
  unsigned long bound = 2 * static_cast<unsigned long>(d) * static_cast<unsigned long>(d);
  for (unsigned long n = 1; n <= bound; ++n) {
    if (euler_phi(n) > static_cast<unsigned long>(d)) continue;
    if (divides(cyclotomic(n), p)) return n;
  }
  return std::nullopt;
}

bool cyclotomic_zero_exists(const IntPoly& p) {
  return cyclotomic_divisor_index(p).has_value();
}

/* ---- Alexander normalization ------------------------------------------- */

IntPoly normalize_alexander(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("normalize_alexander of zero polynomial");
  std::size_t k = 0;
  while (p.coeffs()[k] == 0) ++k;
  std::vector<Int> c(p.coeffs().begin() + static_cast<long>(k), p.coeffs().end());
  IntPoly q(std::move(c));
  Int at1 = q.eval(Int(1));
  if (at1 < 0 || (at1 == 0 && q.lc() < 0)) return -q;
  return q;
}

IntPoly normalize_alexander(const IntLaurentPoly& p) {
  /* the unit t^low is irrelevant for normalization */
  return normalize_alexander(IntPoly(p.coeffs));
}

}  // namespace knotcomm
