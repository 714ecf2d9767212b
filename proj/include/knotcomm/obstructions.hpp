#pragma once

#include <string>
#include <vector>

#include "knotcomm/interval.hpp"
#include "knotcomm/knot.hpp"

namespace knotcomm {

/* Obstruction tests for cyclic commensurability of knot complements.

   Two knots whose complements share a common finite cyclic cover satisfy a
   collection of computable compatibility conditions.  Each test below checks
   one of them and returns a three-valued verdict:

     fail          the condition is certifiably violated, so the specific
                   commensurability configuration under test is impossible
     pass          the condition holds to within the certified enclosures,
                   with enclosures tight enough to make the agreement
                   meaningful
     inconclusive  the enclosures are too wide to decide, or the needed data
                   is not declared

   A fail is a proof; a pass is strong numerical evidence, never a proof,
   since equality of real numbers cannot be certified from enclosures. */

enum class Verdict { pass, fail, inconclusive };

const char* verdict_name(Verdict v);

struct TestEntry {
  std::string name;
  Verdict verdict = Verdict::inconclusive;
  std::string detail;
};

struct ObstructionReport {
  std::string subject;
  std::vector<TestEntry> entries;
  Verdict overall = Verdict::inconclusive;

  /* Entry lookup by name; null when absent. */
  const TestEntry* find(const std::string& name) const;
};

/* Orientation convention for the rho comparison.  A common cover can match
   the orientations of the two knot complements (epsilon = +1) or reverse one
   of them (epsilon = -1).  "both" tries the two cases and reports each. */
enum class Orientation { preserving, reversing, both };

struct CompareOptions {
  Orientation orientation = Orientation::both;
  /* An equality test whose enclosure contains zero is reported as a pass
     only when the enclosure is narrower than this; otherwise the result is
     inconclusive because a wide interval containing zero proves nothing. */
  double pass_width = 1e-4;
};

/* Invariants that commensurable knots must share outright: the degree of the
   Alexander polynomial, whether it is monic, the genus, and whether the knot
   fibers.  Genus and fiberedness are compared only when declared on both
   records, and are reported inconclusive otherwise.  The report also carries
   an informational admissibility entry, since the cover tests below assume
   both knots are admissible. */
ObstructionReport static_compare(const KnotRecord& a, const KnotRecord& b);

/* Tests whether the covers of index n1 over a and n2 over b could be the
   same manifold, using the two L2-invariant conditions:

     n1 tau(a) = n2 tau(b)
     n1 rho(a) - sum_{k=1}^{n1} sigma(a, k/n1)
         = epsilon (n2 rho(b) - sum_{k=1}^{n2} sigma(b, k/n2))

   Both sides are evaluated as certified enclosures; a verdict of fail means
   the enclosure of the difference excludes zero.  The rho condition is
   checked for each orientation requested in the options, and the overall
   verdict fails only when the tau test fails or every requested orientation
   fails.  Throws B1Violation when either cover has first Betti number
   above one, since the conditions are stated only for homology-sphere-like
   covers.  Throws InsufficientData when a signature profile is missing. */
ObstructionReport cover_pair_test(const KnotRecord& a, unsigned long n1,
                                  const KnotRecord& b, unsigned long n2,
                                  const CompareOptions& opts = {});

/* Exact root-multiset condition: if the two covers coincide, the multiset of
   n1-th powers of the Alexander roots of a equals the multiset of n2-th
   powers of the Alexander roots of b.  Both multisets are compared exactly
   through the normalized power transforms of the polynomials, so the verdict
   is always pass or fail.  Throws B1Violation like cover_pair_test. */
ObstructionReport multiset_power_test(const KnotRecord& a, unsigned long n1,
                                      const KnotRecord& b, unsigned long n2);

/* A candidate cover ratio: p tau(a) - q tau(b) has an enclosure straddling
   zero, so covers of index ratio n1 : n2 = p : q cannot be ruled out by the
   tau condition alone. */
struct RatioCandidate {
  unsigned long p = 0;
  unsigned long q = 0;
  double midpoint = 0.0;
};

/* Scans all coprime ratios with p, q <= n_max and keeps the candidates.  For
   knots with tau > 0 at the default certification radius, at most a handful
   survive; a pair of knots with a genuine commensurability shows exactly its
   cover ratio here. */
std::vector<RatioCandidate> ratio_scan(const KnotRecord& a, const KnotRecord& b,
                                       unsigned long n_max = 24);

/* Result of scanning the cover ladder (k p, k q) for k = 1 .. k_max.

   For each k and each orientation the rho condition forces
   k (p rho(a) - epsilon q rho(b)) to be an integer, because the signature
   sums on the other side of the equation are integers.  When the certified
   enclosure of that quantity contains no integer the pair (k p, k q) is
   excluded outright without computing signature sums; the surviving k are
   recorded as candidates.  Candidates with k <= confirm_max are then put
   through the full cover_pair_test and recorded as confirmed when it
   passes. */
struct OrientationScan {
  unsigned long p = 0, q = 0;
  unsigned long k_max = 0, confirm_max = 0;
  std::vector<unsigned long> plus_candidates;
  std::vector<unsigned long> minus_candidates;
  std::vector<unsigned long> plus_confirmed;
  std::vector<unsigned long> minus_confirmed;
};

/* Requires both knots admissible (throws B1Violation otherwise) and with
   signature profiles (throws InsufficientData otherwise). */
OrientationScan orientation_test(const KnotRecord& a, const KnotRecord& b,
                                 unsigned long p, unsigned long q,
                                 unsigned long k_max = 480,
                                 unsigned long confirm_max = 8,
                                 const CompareOptions& opts = {});

}  // namespace knotcomm
