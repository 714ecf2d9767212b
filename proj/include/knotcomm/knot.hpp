#ifndef KNOTCOMM_KNOT_HPP
#define KNOTCOMM_KNOT_HPP

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "knotcomm/interval.hpp"
#include "knotcomm/poly.hpp"
#include "knotcomm/roots.hpp"

namespace knotcomm {

using IntMatrix = std::vector<std::vector<Int>>;

/* Exact determinant of an integer matrix (fraction-free Bareiss
   elimination; every division is exact). */
Int int_det(IntMatrix m);

/* Signature of an integer symmetric matrix, computed exactly: the
   characteristic polynomial comes from the Faddeev-LeVerrier recursion and
   its real-rooted coefficient sequence makes Descartes counting exact.
   Zero eigenvalues are allowed and simply do not contribute. */
int symmetric_signature(const IntMatrix& s);

/* A Seifert matrix A for a knot.  Validation: square, and
   det(A - A^t) = 1, which is exactly the condition for the rows and columns
   to come from a basis of the first homology of a genus-size/2 surface. */
class SeifertMatrix {
public:
  explicit SeifertMatrix(IntMatrix m);

  const IntMatrix& matrix() const { return a_; }
  std::size_t size() const { return a_.size(); }

  /* Normalized Alexander polynomial det(A t - A^t), unit-adjusted so the
     value at t = 1 is +1. */
  IntPoly alexander() const;

  /* sigma(K) = sigma(K, -1): the signature of A + A^t, exact. */
  int signature() const;

  /* sigma(K, z) at z = e^{2 pi i turn}.  Exact at turn 0 and 1/2; other
     turns go through a certified Hermitian evaluation.  Throws SingularAtZ
     when the Alexander polynomial vanishes at z. */
  int signature_at(const Rat& turn, const CertifyOptions& opts = {}) const;

  /* The Seifert matrix of the mirror image: -A. */
  SeifertMatrix mirrored() const;

private:
  IntMatrix a_;
};

/* One conjugate pair of jump points of the signature function, at
   e^{+- 2 pi i turn} with turn in (0, 1/2), plus the constant value taken
   on the arc immediately after the jump (moving toward turn 1/2).  xroot
   isolates x = 2 cos(2 pi turn) so the enclosure can be re-refined without
   touching the polynomial again. */
struct SignatureJump {
  CertifiedReal turn;
  std::optional<Rat> exact_turn;
  RealRootInterval xroot;
  int multiplicity = 1;
  int value_after = 0;
};

/* Full description of s in (0, 1/2) -> sigma(K, e^{2 pi i s}) as a step
   function: zero before the first jump (the signature vanishes near z = 1),
   then jumps[i].value_after on each following arc.  sigma is the value on
   the last arc, i.e. sigma(K). */
struct SignatureProfile {
  std::vector<SignatureJump> jumps;
  int sigma = 0;
};

/* One declared jump row as it appears in a catalog: the original text of
   the turn (kept verbatim for round trips), its parsed value, the number of
   decimal digits given (0 means the exact fraction form p/q), and the
   signature value on the arc after the jump. */
struct DeclaredJump {
  std::string text;
  Rat turn;
  int digits = 0;
  int value = 0;
};

/* Raw knot record data, exactly as loaded; KnotRecord validates it.  At
   least one of seifert / alexander must be present.  The mirror flag means
   the record denotes the mirror image of the knot the data describes. */
struct KnotData {
  std::string name;
  std::optional<IntMatrix> seifert;
  std::optional<IntPoly> alexander;  // constant coefficient first
  std::optional<int> signature;
  std::optional<std::vector<DeclaredJump>> jumps;
  bool mirror = false;
  std::optional<int> genus;
  std::optional<bool> fibered;
  std::string comment;
};

/* A validated knot with cached invariants.  Construction performs all
   validation: Seifert validity, reciprocity and the unit condition of the
   Alexander polynomial, cross-checks between declared and derived data, and
   the reconstruction of the signature profile whenever the data determines
   one.  tau is computed lazily (and at most once) on first use. */
class KnotRecord {
public:
  explicit KnotRecord(KnotData data, const CertifyOptions& opts = {});

  KnotRecord(const KnotRecord& o);
  KnotRecord& operator=(const KnotRecord& o);

  const std::string& name() const { return data_.name; }
  const KnotData& data() const { return data_; }
  bool mirror() const { return data_.mirror; }
  const std::string& comment() const { return data_.comment; }
  std::optional<int> genus() const { return data_.genus; }
  std::optional<bool> fibered() const { return data_.fibered; }

  /* Seifert matrix with the mirror flag already applied, if present. */
  const std::optional<IntMatrix>& seifert() const { return seifert_; }

  /* Normalized Alexander polynomial (value +1 at t = 1). */
  const IntPoly& alexander() const { return alex_; }

  /* All n >= 1 such that the n-th cyclotomic polynomial divides the
     Alexander polynomial; empty exactly when the knot is admissible. */
  const std::vector<unsigned long>& cyclotomic_divisors() const { return cyclo_; }
  bool admissible() const { return cyclo_.empty(); }

  bool has_profile() const { return profile_.has_value(); }
  /* Throws InsufficientData when the loaded data does not determine the
     profile (two or more jump pairs with only the total signature given). */
  const SignatureProfile& profile() const;

  /* sigma(K).  Available from a profile or from a declared signature even
     when the full profile is undetermined. */
  int signature() const;

  /* sigma(K, e^{2 pi i turn}) for rational turn, from the profile.  Throws
     SingularAtZ when the Alexander polynomial vanishes there, and
     InsufficientData when no profile is available and the value is not
     forced (turn 0 always gives 0, turn 1/2 needs only sigma). */
  int signature_at(const Rat& turn) const;

  /* sum over k = 1..n of sigma(K, e^{2 pi i k/n}).  Throws
     SingularAtRootOfUnity when some n-th root of unity is a root of the
     Alexander polynomial. */
  long long signature_sum(unsigned long n) const;

  /* rho(K): the integral of the signature function over the circle with
     total measure 1.  Exactly zero when there are no jumps. */
  CertifiedReal rho() const;

  /* tau(K): the logarithmic Mahler measure of the Alexander polynomial. */
  CertifiedReal tau() const;

  /* The same knot with the mirror flag toggled (signature data negates,
     the Alexander polynomial stays). */
  KnotRecord mirrored() const;

private:
  KnotData data_;
  CertifyOptions opts_;
  std::optional<IntMatrix> seifert_;  // mirror applied
  IntPoly alex_;
  std::vector<unsigned long> cyclo_;
  std::optional<SignatureProfile> profile_;
  std::optional<int> sigma_;
  std::string no_profile_reason_;

  mutable std::mutex mu_;
  mutable std::optional<CertifiedReal> tau_;

  void build_profile();
};

}  // namespace knotcomm

#endif
