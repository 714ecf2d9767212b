#include "knotcomm/obstructions.hpp"

#include <cstdlib>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "knotcomm/errors.hpp"

namespace knotcomm {

namespace {

std::string enclosure_str(const CertifiedReal& x) {
  std::ostringstream os;
  os << std::setprecision(15) << x.midpoint() << " +/- " << std::setprecision(2)
     << x.radius();
  return os.str();
}

/* Three-way verdict for "is this certified enclosure zero": an enclosure
   excluding zero is a certified violation, one containing zero counts as
   agreement only when it is narrow enough to mean something. */
Verdict equality_verdict(const CertifiedReal& x, double pass_width) {
  auto s = x.sign();
  if (s && *s != 0) return Verdict::fail;
  if (2.0 * x.radius() < pass_width) return Verdict::pass;
  return Verdict::inconclusive;
}

/* True when the Alexander polynomial of k vanishes at some n-th root of
   unity, i.e. when the n-fold cover of the exterior has first Betti number
   above one. */
bool cover_infinite(const KnotRecord& k, unsigned long n) {
  for (unsigned long q : k.cyclotomic_divisors()) {
    if (n % q == 0) return true;
  }
  return false;
}

void require_b1_one(const KnotRecord& a, unsigned long n1, const KnotRecord& b,
                    unsigned long n2) {
  if (n1 == 0 || n2 == 0) throw Error("cover indices must be at least 1");
  if (cover_infinite(a, n1)) {
    throw B1Violation("the " + std::to_string(n1) + "-fold cover of " + a.name() +
                      " has first Betti number above one");
  }
  if (cover_infinite(b, n2)) {
    throw B1Violation("the " + std::to_string(n2) + "-fold cover of " + b.name() +
                      " has first Betti number above one");
  }
}

/* Certified enclosure of n rho(k) - sum_{j=1}^{n} sigma(k, j/n), the side of
   the rho condition belonging to one knot. */
CertifiedReal rho_side(const KnotRecord& k, unsigned long n) {
  CertifiedReal s = Rat(n) * k.rho();
  return s - CertifiedReal::exact_int(Int(static_cast<long>(k.signature_sum(n))));
}

/* True when the enclosure is certified to contain no integer.  floor and
   ceil are exact here because the magnitudes in play are far below the
   working precision. */
bool excludes_all_integers(const CertifiedReal& x) {
  Mpfr fl(x.hi().prec()), ce(x.lo().prec());
  mpfr_floor(fl.raw(), x.hi().raw());
  mpfr_ceil(ce.raw(), x.lo().raw());
  return mpfr_cmp(fl.raw(), ce.raw()) < 0;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "inconclusive";
  }
}

const TestEntry* ObstructionReport::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

ObstructionReport static_compare(const KnotRecord& a, const KnotRecord& b) {
  ObstructionReport rep;
  rep.subject = a.name() + " vs " + b.name();

  long da = a.alexander().degree();
  long db = b.alexander().degree();
  rep.entries.push_back(TestEntry{
      "degree", da == db ? Verdict::pass : Verdict::fail,
      std::to_string(da) + " vs " + std::to_string(db)});

  bool ma = abs(a.alexander().lc()) == 1;
  bool mb = abs(b.alexander().lc()) == 1;
  rep.entries.push_back(TestEntry{
      "monic", ma == mb ? Verdict::pass : Verdict::fail,
      std::string(ma ? "monic" : "not monic") + " vs " +
          (mb ? "monic" : "not monic")});

  if (a.genus() && b.genus()) {
    rep.entries.push_back(TestEntry{
        "genus", *a.genus() == *b.genus() ? Verdict::pass : Verdict::fail,
        std::to_string(*a.genus()) + " vs " + std::to_string(*b.genus())});
  } else {
    rep.entries.push_back(TestEntry{"genus", Verdict::inconclusive,
                                    "not declared on both records"});
  }

  if (a.fibered() && b.fibered()) {
    rep.entries.push_back(TestEntry{
        "fibered", *a.fibered() == *b.fibered() ? Verdict::pass : Verdict::fail,
        std::string(*a.fibered() ? "fibered" : "not fibered") + " vs " +
            (*b.fibered() ? "fibered" : "not fibered")});
  } else {
    rep.entries.push_back(TestEntry{"fibered", Verdict::inconclusive,
                                    "not declared on both records"});
  }

  /* Informational: the cover tests assume admissibility, so surface it here
     without treating a mismatch as an obstruction in its own right. */
  bool aa = a.admissible(), ab = b.admissible();
  rep.entries.push_back(TestEntry{
      "admissible",
      aa && ab ? Verdict::pass : Verdict::inconclusive,
      std::string(aa ? "admissible" : "not admissible") + " vs " +
          (ab ? "admissible" : "not admissible")});

  /* The overall verdict folds the four invariant comparisons; the entries
     that are merely undeclared stay visible but do not block a pass. */
  rep.overall = Verdict::pass;
  for (const auto& e : rep.entries) {
    if (e.name != "admissible" && e.verdict == Verdict::fail) {
      rep.overall = Verdict::fail;
    }
  }
  return rep;
}

ObstructionReport cover_pair_test(const KnotRecord& a, unsigned long n1,
                                  const KnotRecord& b, unsigned long n2,
                                  const CompareOptions& opts) {
  require_b1_one(a, n1, b, n2);

  ObstructionReport rep;
  {
    std::ostringstream os;
    os << a.name() << " cover " << n1 << " vs " << b.name() << " cover " << n2;
    rep.subject = os.str();
  }

  CertifiedReal tau_diff = Rat(n1) * a.tau() - Rat(n2) * b.tau();
  Verdict tau_v = equality_verdict(tau_diff, opts.pass_width);
  rep.entries.push_back(TestEntry{"tau", tau_v, enclosure_str(tau_diff)});

  CertifiedReal left = rho_side(a, n1);
  CertifiedReal right = rho_side(b, n2);

  bool want_plus = opts.orientation != Orientation::reversing;
  bool want_minus = opts.orientation != Orientation::preserving;
  int rho_fails = 0, rho_passes = 0, rho_count = 0;
  if (want_plus) {
    CertifiedReal d = left - right;
    Verdict v = equality_verdict(d, opts.pass_width);
    rep.entries.push_back(TestEntry{"rho[+1]", v, enclosure_str(d)});
    ++rho_count;
    if (v == Verdict::fail) ++rho_fails;
    if (v == Verdict::pass) ++rho_passes;
  }
  if (want_minus) {
    CertifiedReal d = left + right;
    Verdict v = equality_verdict(d, opts.pass_width);
    rep.entries.push_back(TestEntry{"rho[-1]", v, enclosure_str(d)});
    ++rho_count;
    if (v == Verdict::fail) ++rho_fails;
    if (v == Verdict::pass) ++rho_passes;
  }

  /* The pair of covers is ruled out when tau separates them or when no
     orientation can reconcile the rho sides.  It survives as a pass when tau
     agrees and at least one orientation agrees. */
  if (tau_v == Verdict::fail || rho_fails == rho_count) {
    rep.overall = Verdict::fail;
  } else if (tau_v == Verdict::pass && rho_passes > 0) {
    rep.overall = Verdict::pass;
  } else {
    rep.overall = Verdict::inconclusive;
  }
  return rep;
}

ObstructionReport multiset_power_test(const KnotRecord& a, unsigned long n1,
                                      const KnotRecord& b, unsigned long n2) {
  require_b1_one(a, n1, b, n2);

  ObstructionReport rep;
  {
    std::ostringstream os;
    os << a.name() << " cover " << n1 << " vs " << b.name() << " cover " << n2;
    rep.subject = os.str();
  }

  long da = a.alexander().degree();
  long db = b.alexander().degree();
  rep.entries.push_back(TestEntry{
      "degree", da == db ? Verdict::pass : Verdict::fail,
      std::to_string(da) + " vs " + std::to_string(db)});
  if (da != db) {
    rep.overall = Verdict::fail;
    return rep;
  }

  /* Power transforms track the root multisets exactly, and normalization
     cancels the unit ambiguity, so this comparison is exact. */
  IntPoly pa = normalize_alexander(power_transform(a.alexander(), n1));
  IntPoly pb = normalize_alexander(power_transform(b.alexander(), n2));
  bool equal = pa == pb;
  rep.entries.push_back(TestEntry{
      "multiset", equal ? Verdict::pass : Verdict::fail,
      equal ? "power transforms agree" : "power transforms differ"});
  rep.overall = equal ? Verdict::pass : Verdict::fail;
  return rep;
}

std::vector<RatioCandidate> ratio_scan(const KnotRecord& a, const KnotRecord& b,
                                       unsigned long n_max) {
  if (n_max == 0) throw Error("ratio_scan requires n_max >= 1");
  CertifiedReal ta = a.tau();
  CertifiedReal tb = b.tau();
  std::vector<RatioCandidate> out;
  for (unsigned long p = 1; p <= n_max; ++p) {
    for (unsigned long q = 1; q <= n_max; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CertifiedReal d = Rat(p) * ta - Rat(q) * tb;
      auto s = d.sign();
      if (s && *s != 0) continue;
      out.push_back(RatioCandidate{p, q, d.midpoint()});
    }
  }
  return out;
}

OrientationScan orientation_test(const KnotRecord& a, const KnotRecord& b,
                                 unsigned long p, unsigned long q,
                                 unsigned long k_max, unsigned long confirm_max,
                                 const CompareOptions& opts) {
  if (p == 0 || q == 0) throw Error("orientation_test requires a positive ratio");
  if (std::gcd(p, q) != 1) throw Error("orientation_test ratio must be coprime");
  if (!a.admissible() || !b.admissible()) {
    throw B1Violation("orientation_test requires admissible knots");
  }

  OrientationScan scan;
  scan.p = p;
  scan.q = q;
  scan.k_max = k_max;
  scan.confirm_max = confirm_max;

  /* Both signature sums in the rho condition are integers, so along the
     ladder (k p, k q) the combination k (p rho(a) - eps q rho(b)) has to be
     an integer.  A certified integer-free enclosure kills the pair without
     any signature computation. */
  CertifiedReal base_plus = Rat(p) * a.rho() - Rat(q) * b.rho();
  CertifiedReal base_minus = Rat(p) * a.rho() + Rat(q) * b.rho();
  for (unsigned long k = 1; k <= k_max; ++k) {
    if (!excludes_all_integers(Rat(k) * base_plus)) scan.plus_candidates.push_back(k);
    if (!excludes_all_integers(Rat(k) * base_minus)) scan.minus_candidates.push_back(k);
  }

  CompareOptions plus_opts = opts;
  plus_opts.orientation = Orientation::preserving;
  for (unsigned long k : scan.plus_candidates) {
    if (k > confirm_max) break;
    if (cover_pair_test(a, k * p, b, k * q, plus_opts).overall == Verdict::pass) {
      scan.plus_confirmed.push_back(k);
    }
  }
  CompareOptions minus_opts = opts;
  minus_opts.orientation = Orientation::reversing;
  for (unsigned long k : scan.minus_candidates) {
    if (k > confirm_max) break;
    if (cover_pair_test(a, k * p, b, k * q, minus_opts).overall == Verdict::pass) {
      scan.minus_confirmed.push_back(k);
    }
  }
  return scan;
}

}  // namespace knotcomm
