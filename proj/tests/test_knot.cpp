#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <knotcomm/errors.hpp>
#include <knotcomm/knot.hpp>
#include <knotcomm/poly.hpp>

using namespace knotcomm;

namespace {

const IntMatrix kTrefoil{{-1, 1}, {0, -1}};
const IntMatrix kFigureEight{{1, 1}, {0, -1}};

IntMatrix negated(const IntMatrix& a) {
  IntMatrix m = a;
  for (auto& row : m)
    for (auto& x : row) x = -x;
  return m;
}

IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), m = b.size();
  IntMatrix out(n + m, std::vector<Int>(n + m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out[n + i][n + j] = b[i][j];
  return out;
}

KnotData seifert_knot(std::string name, IntMatrix a) {
  KnotData d;
  d.name = std::move(name);
  d.seifert = std::move(a);
  return d;
}

KnotData poly_knot(std::string name, IntPoly p, std::optional<int> sig = std::nullopt) {
  KnotData d;
  d.name = std::move(name);
  d.alexander = std::move(p);
  d.signature = sig;
  return d;
}

bool near(double x, double y, double tol = 1e-11) { return std::fabs(x - y) <= tol; }

/* determinant by cofactor expansion, as an independent oracle */
Int cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    IntMatrix minor(n - 1, std::vector<Int>(n - 1));
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor[i - 1][jj++] = m[i][j];
      }
    }
    Int term = m[0][c] * cofactor_det(minor);
    acc += (c % 2 == 0) ? term : Int(-term);
  }
  return acc;
}

}  // namespace

TEST_CASE("integer determinant matches cofactor expansion") {
  CHECK(int_det({}) == 1);
  CHECK(int_det({{5}}) == 5);
  CHECK(int_det({{1, 2}, {3, 4}}) == -2);
  /* zero pivot forces a row swap */
  CHECK(int_det({{0, 1}, {1, 0}}) == -1);
  CHECK(int_det({{0, 2, 1}, {1, 0, 0}, {0, 1, 1}}) == cofactor_det({{0, 2, 1}, {1, 0, 0}, {0, 1, 1}}));

  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 5;
    IntMatrix m(n, std::vector<Int>(n));
    for (auto& row : m)
      for (auto& x : row) x = coeff(rng);
    CHECK(int_det(m) == cofactor_det(m));
  }
}

TEST_CASE("symmetric signature against congruence oracle") {
  CHECK(symmetric_signature({}) == 0);
  CHECK(symmetric_signature({{0, 0}, {0, 0}}) == 0);
  CHECK(symmetric_signature({{2, 0}, {0, -3}}) == 0);
  CHECK(symmetric_signature({{2, 1}, {1, 2}}) == 2);
  CHECK(symmetric_signature({{-2, 1}, {1, -2}}) == -2);
  CHECK(symmetric_signature({{1, 1}, {1, 1}}) == 1);  // eigenvalues 0 and 2

  /* S = U^t D U with U unimodular has the signature of the diagonal D */
  std::mt19937 rng(911);
  std::uniform_int_distribution<int> diag(-5, 5), shear(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + rng() % 4;
    std::vector<int> d(n);
    int expected = 0;
    for (auto& v : d) {
      v = diag(rng);
      expected += (v > 0) - (v < 0);
    }
    IntMatrix u(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
    for (int step = 0; step < 20; ++step) {
      std::size_t i = rng() % n, j = rng() % n;
      if (i == j) continue;
      Int c = shear(rng);
      for (std::size_t k = 0; k < n; ++k) u[i][k] += c * u[j][k];
    }
    IntMatrix s(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) s[i][j] += u[k][i] * Int(d[k]) * u[k][j];
    CHECK(symmetric_signature(s) == expected);
  }
}

TEST_CASE("Seifert matrix validation") {
  CHECK_NOTHROW(SeifertMatrix{kTrefoil});
  CHECK_NOTHROW(SeifertMatrix(IntMatrix{}));  // genus zero: the unknot
  CHECK_NOTHROW(SeifertMatrix({{1, 2}, {3, 4}}));  // det(A - A^t) = (2 - 3)^2 = 1
  CHECK_THROWS_AS(SeifertMatrix({{0, 0}, {0, 0}}), InvalidSeifert);
  CHECK_THROWS_AS(SeifertMatrix({{1, 3}, {1, 4}}), InvalidSeifert);  // det(A - A^t) = 4
  CHECK_THROWS_AS(SeifertMatrix({{1, 2, 3}, {4, 5, 6}}), InvalidSeifert);  // not square
  /* odd size makes A - A^t an odd antisymmetric matrix, determinant zero */
  CHECK_THROWS_AS(SeifertMatrix({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}), InvalidSeifert);
}

TEST_CASE("Alexander polynomials from Seifert matrices") {
  CHECK(SeifertMatrix(kTrefoil).alexander() == IntPoly{1, -1, 1});
  CHECK(SeifertMatrix(kFigureEight).alexander() == IntPoly{-1, 3, -1});
  CHECK(SeifertMatrix(IntMatrix{}).alexander() == IntPoly{1});
  /* a connected sum multiplies Alexander polynomials */
  SeifertMatrix s(block_sum(kTrefoil, kFigureEight));
  CHECK(s.alexander() == normalize_alexander(IntPoly{1, -1, 1} * IntPoly{-1, 3, -1}));
  SeifertMatrix ss(block_sum(kTrefoil, kTrefoil));
  CHECK(ss.alexander() == IntPoly{1, -1, 1} * IntPoly{1, -1, 1});
  /* mirror image: same polynomial after normalization */
  CHECK(SeifertMatrix(negated(kTrefoil)).alexander() == IntPoly{1, -1, 1});
}

TEST_CASE("direct signature evaluation on the circle") {
  SeifertMatrix tre(kTrefoil);
  CHECK(tre.signature() == -2);
  CHECK(tre.signature_at(Rat(0)) == 0);
  CHECK(tre.signature_at(Rat(1, 12)) == 0);
  CHECK(tre.signature_at(Rat(1, 4)) == -2);
  CHECK(tre.signature_at(Rat(1, 3)) == -2);
  CHECK(tre.signature_at(Rat(1, 2)) == -2);
  CHECK_THROWS_AS(tre.signature_at(Rat(1, 6)), SingularAtZ);
  /* conjugation symmetry and periodicity through turn reduction */
  CHECK(tre.signature_at(Rat(11, 12)) == 0);
  CHECK(tre.signature_at(Rat(7, 12)) == -2);
  CHECK(tre.signature_at(Rat(13, 12)) == 0);
  CHECK_THROWS_AS(tre.signature_at(Rat(5, 6)), SingularAtZ);

  SeifertMatrix fig(kFigureEight);
  CHECK(fig.signature() == 0);
  for (int k = 1; k <= 6; ++k) CHECK(fig.signature_at(Rat(k, 13)) == 0);

  SeifertMatrix mir(negated(kTrefoil));
  CHECK(mir.signature() == 2);
  CHECK(mir.signature_at(Rat(1, 4)) == 2);
}

TEST_CASE("trefoil record from its Seifert matrix") {
  KnotRecord rec(seifert_knot("trefoil", kTrefoil));
  CHECK(rec.alexander() == IntPoly{1, -1, 1});
  CHECK(rec.signature() == -2);
  CHECK_FALSE(rec.admissible());  // the polynomial is the 6th cyclotomic
  CHECK(rec.cyclotomic_divisors() == std::vector<unsigned long>{6});

  REQUIRE(rec.has_profile());
  const SignatureProfile& pf = rec.profile();
  REQUIRE(pf.jumps.size() == 1);
  REQUIRE(pf.jumps[0].exact_turn.has_value());
  CHECK(*pf.jumps[0].exact_turn == Rat(1, 6));
  CHECK(pf.jumps[0].multiplicity == 1);
  CHECK(pf.jumps[0].value_after == -2);

  CHECK(rec.tau().is_exact_zero());
  CHECK(rec.rho().contains(Rat(-4, 3)));
  CHECK(rec.rho().radius() <= 1e-11);

  CHECK(rec.signature_at(Rat(1, 12)) == 0);
  CHECK(rec.signature_at(Rat(1, 4)) == -2);
  CHECK_THROWS_AS(rec.signature_at(Rat(1, 6)), SingularAtZ);

  CHECK(rec.signature_sum(2) == -2);
  CHECK(rec.signature_sum(3) == -4);
  CHECK(rec.signature_sum(4) == -6);
  CHECK(rec.signature_sum(5) == -8);
  CHECK_THROWS_AS(rec.signature_sum(6), SingularAtRootOfUnity);
  CHECK_THROWS_AS(rec.signature_sum(12), SingularAtRootOfUnity);
}

TEST_CASE("figure eight record from its Seifert matrix") {
  KnotRecord rec(seifert_knot("figure8", kFigureEight));
  CHECK(rec.alexander() == IntPoly{-1, 3, -1});
  CHECK(rec.signature() == 0);
  CHECK(rec.admissible());
  REQUIRE(rec.has_profile());
  CHECK(rec.profile().jumps.empty());
  CHECK(rec.rho().is_exact_zero());
  CHECK(rec.tau().radius() <= 1e-12);
  CHECK(near(rec.tau().midpoint(), 0.96242365011920694, 1e-12));
  for (int n = 1; n <= 9; ++n) CHECK(rec.signature_sum(n) == 0);
}

TEST_CASE("connected sums from block Seifert matrices") {
  /* granny knot: one jump of multiplicity two at turn 1/6 */
  KnotRecord granny(seifert_knot("granny", block_sum(kTrefoil, kTrefoil)));
  CHECK(granny.signature() == -4);
  REQUIRE(granny.has_profile());
  REQUIRE(granny.profile().jumps.size() == 1);
  CHECK(granny.profile().jumps[0].multiplicity == 2);
  CHECK(granny.profile().jumps[0].value_after == -4);
  CHECK(granny.rho().contains(Rat(-8, 3)));

  /* square knot: trefoil plus its mirror; the jump survives with value 0 */
  KnotRecord square(seifert_knot("square", block_sum(kTrefoil, negated(kTrefoil))));
  CHECK(square.signature() == 0);
  REQUIRE(square.has_profile());
  REQUIRE(square.profile().jumps.size() == 1);
  CHECK(square.profile().jumps[0].value_after == 0);
  CHECK(square.rho().is_exact_zero());

  /* trefoil + figure eight */
  KnotRecord sum(seifert_knot("tre+fig8", block_sum(kTrefoil, kFigureEight)));
  CHECK(sum.signature() == -2);
  CHECK(sum.rho().contains(Rat(-4, 3)));
  CHECK(sum.tau().radius() <= 1e-12);
  CHECK(near(sum.tau().midpoint(), 0.96242365011920694, 1e-12));
}

TEST_CASE("profile evaluation agrees with direct Hermitian evaluation") {
  IntMatrix a = block_sum(kTrefoil, kFigureEight);
  KnotRecord rec(seifert_knot("tre+fig8", a));
  SeifertMatrix sm(a);
  for (int k = 0; k <= 20; ++k) {
    Rat turn(k, 40);
    turn.canonicalize();
    CHECK(rec.signature_at(turn) == sm.signature_at(turn));
  }
  CHECK_THROWS_AS(rec.signature_at(Rat(1, 6)), SingularAtZ);
  CHECK_THROWS_AS(sm.signature_at(Rat(1, 6)), SingularAtZ);
}

TEST_CASE("polynomial records with a declared signature") {
  KnotRecord k1(poly_knot("9_48", IntPoly{1, -7, 11, -7, 1}, 2));
  CHECK(k1.alexander() == IntPoly{-1, 7, -11, 7, -1});  // value +1 at t = 1
  CHECK(k1.admissible());
  CHECK(k1.signature() == 2);
  REQUIRE(k1.has_profile());
  REQUIRE(k1.profile().jumps.size() == 1);
  CHECK_FALSE(k1.profile().jumps[0].exact_turn.has_value());
  CHECK(k1.profile().jumps[0].turn.radius() <= 1e-12);
  CHECK(near(k1.profile().jumps[0].turn.midpoint(), 0.088719328100619548, 1e-12));
  CHECK(near(k1.rho().midpoint(), 1.6451226875975218, 1e-11));
  CHECK(k1.rho().radius() <= 1e-11);
  CHECK(near(k1.tau().midpoint(), 1.6306052174936085, 1e-12));
  CHECK(k1.tau().radius() <= 1e-12);
  CHECK(k1.signature_sum(1) == 0);
  CHECK(k1.signature_sum(2) == 2);
  CHECK(k1.signature_sum(4) == 6);
  CHECK(k1.signature_sum(8) == 14);

  KnotRecord k2(poly_knot("12n_642", IntPoly{1, 7, -15, 7, 1}, 2));
  CHECK(k2.alexander() == IntPoly{1, 7, -15, 7, 1});
  CHECK(k2.signature() == 2);
  REQUIRE(k2.has_profile());
  CHECK(near(k2.profile().jumps[0].turn.midpoint(), 0.048374229199173936, 1e-12));
  CHECK(near(k2.rho().midpoint(), 1.8065030832033043, 1e-11));
  CHECK(near(k2.tau().midpoint(), 2.1741402899914783, 1e-12));
  CHECK(k2.signature_sum(3) == 4);
  CHECK(k2.signature_sum(6) == 10);

  /* rho = (1 - 2 s) sigma for a single jump pair */
  CertifiedReal s1 = k1.profile().jumps[0].turn;
  mpfr_prec_t p = s1.precision();
  CertifiedReal expect = Rat(2) * (CertifiedReal::from_rat(Rat(1), p) - Rat(2) * s1);
  CHECK(k1.rho().overlaps(expect));
}

TEST_CASE("satellite template polynomials carry exact zero rho") {
  IntPoly ds{25, -250, 1035, -2300, 2981, -2300, 1035, -250, 25};
  IntPoly df{-1, 29, -254, 1035, -2304, 2991, -2304, 1035, -254, 29, -1};

  KnotData dds = poly_knot("D_s", ds);
  dds.genus = 4;
  dds.fibered = false;
  KnotRecord rs(dds);
  CHECK(rs.admissible());
  REQUIRE(rs.has_profile());
  CHECK(rs.profile().jumps.empty());
  CHECK(rs.signature() == 0);
  CHECK(rs.rho().is_exact_zero());
  CHECK(near(rs.tau().midpoint(), 5.9123725624036304, 1e-12));
  CHECK(rs.tau().radius() <= 1e-12);
  CHECK(rs.genus() == 4);
  CHECK(rs.fibered() == false);

  KnotData ddf = poly_knot("D_f", df);
  ddf.genus = 5;
  ddf.fibered = true;
  KnotRecord rf(ddf);
  CHECK(rf.admissible());
  CHECK(rf.rho().is_exact_zero());
  CHECK(near(rf.tau().midpoint(), 5.9458660171803731, 1e-12));
  CHECK(rf.tau().radius() <= 1e-12);
}

TEST_CASE("mirror images") {
  KnotRecord k1(poly_knot("9_48", IntPoly{1, -7, 11, -7, 1}, 2));
  KnotRecord m = k1.mirrored();
  CHECK(m.mirror());
  CHECK(m.signature() == -2);
  CHECK(m.alexander() == k1.alexander());
  CHECK(near(m.rho().midpoint(), -1.6451226875975218, 1e-11));
  CHECK(m.tau().overlaps(k1.tau()));
  CHECK(m.signature_sum(4) == -6);

  KnotRecord back = m.mirrored();
  CHECK_FALSE(back.mirror());
  CHECK(back.signature() == 2);
  CHECK(back.rho().lo().cmp(k1.rho().lo()) == 0);
  CHECK(back.rho().hi().cmp(k1.rho().hi()) == 0);

  KnotRecord tre(seifert_knot("trefoil", kTrefoil));
  KnotRecord tm = tre.mirrored();
  CHECK(tm.signature() == 2);
  CHECK(tm.rho().contains(Rat(4, 3)));
  CHECK(tm.signature_at(Rat(1, 3)) == 2);
}

TEST_CASE("declared jump lists") {
  IntPoly p948{1, -7, 11, -7, 1};

  KnotData d = poly_knot("9_48", p948);
  d.jumps = std::vector<DeclaredJump>{{"0.0887193281", Rat(887193281, 10000000000), 10, 2}};
  KnotRecord rec(d);
  CHECK(rec.signature() == 2);
  CHECK(near(rec.rho().midpoint(), 1.6451226875975218, 1e-11));

  /* declared signature must match the last jump value */
  KnotData bad = d;
  bad.signature = -2;
  CHECK_THROWS_AS(KnotRecord{bad}, CatalogError);

  /* wrong turn */
  KnotData wrong = poly_knot("9_48", p948);
  wrong.jumps = std::vector<DeclaredJump>{{"0.25", Rat(1, 4), 2, 2}};
  CHECK_THROWS_AS(KnotRecord{wrong}, CatalogError);

  /* wrong count */
  KnotData extra = poly_knot("9_48", p948);
  extra.jumps = std::vector<DeclaredJump>{{"0.0887193281", Rat(887193281, 10000000000), 10, 2},
                                          {"0.4", Rat(2, 5), 1, 2}};
  CHECK_THROWS_AS(KnotRecord{extra}, CatalogError);

  /* an exact fraction must be exactly a jump angle */
  KnotData fake = poly_knot("9_48", p948);
  fake.jumps = std::vector<DeclaredJump>{{"1/11", Rat(1, 11), 0, 2}};
  CHECK_THROWS_AS(KnotRecord{fake}, CatalogError);

  /* exact declaration for a genuinely exact jump */
  KnotData tre = poly_knot("trefoil", IntPoly{1, -1, 1});
  tre.jumps = std::vector<DeclaredJump>{{"1/6", Rat(1, 6), 0, -2}};
  KnotRecord tr(tre);
  CHECK(tr.signature() == -2);
  CHECK(tr.rho().contains(Rat(-4, 3)));

  /* odd jump value */
  KnotData odd = poly_knot("trefoil", IntPoly{1, -1, 1});
  odd.jumps = std::vector<DeclaredJump>{{"1/6", Rat(1, 6), 0, -3}};
  CHECK_THROWS_AS(KnotRecord{odd}, CatalogError);

  /* declared jumps validated against a Seifert matrix when both given */
  KnotData both = seifert_knot("trefoil", kTrefoil);
  both.jumps = std::vector<DeclaredJump>{{"1/6", Rat(1, 6), 0, -2}};
  CHECK_NOTHROW(KnotRecord{both});
  KnotData clash = seifert_knot("trefoil", kTrefoil);
  clash.jumps = std::vector<DeclaredJump>{{"1/6", Rat(1, 6), 0, 2}};
  CHECK_THROWS_AS(KnotRecord{clash}, CatalogError);

  /* mirror flag negates declared jump values */
  KnotData md = poly_knot("9_48", p948);
  md.jumps = std::vector<DeclaredJump>{{"0.0887193281", Rat(887193281, 10000000000), 10, 2}};
  md.mirror = true;
  KnotRecord mr(md);
  CHECK(mr.signature() == -2);
  CHECK(near(mr.rho().midpoint(), -1.6451226875975218, 1e-11));
}

TEST_CASE("records that cannot determine a profile") {
  IntPoly prod = IntPoly{1, -7, 11, -7, 1} * IntPoly{1, 7, -15, 7, 1};

  KnotRecord with_sigma(poly_knot("two-jumps", prod, 4));
  CHECK_FALSE(with_sigma.has_profile());
  CHECK(with_sigma.signature() == 4);          // declared value still usable
  CHECK(with_sigma.signature_at(Rat(1, 2)) == 4);
  CHECK(with_sigma.signature_at(Rat(0)) == 0);
  CHECK(with_sigma.signature_sum(2) == 4);     // only needs the value at -1
  CHECK_THROWS_AS(with_sigma.rho(), InsufficientData);
  CHECK_THROWS_AS(with_sigma.signature_at(Rat(1, 4)), InsufficientData);
  CHECK_THROWS_AS(with_sigma.signature_sum(4), InsufficientData);
  CHECK_THROWS_AS(with_sigma.profile(), InsufficientData);

  KnotRecord bare(poly_knot("two-jumps-bare", prod));
  CHECK_THROWS_AS(bare.signature(), InsufficientData);
  CHECK_THROWS_AS(bare.rho(), InsufficientData);
  CHECK_THROWS_AS(bare.signature_sum(2), InsufficientData);

  /* tau never needs signature data */
  KnotRecord k1(poly_knot("9_48", IntPoly{1, -7, 11, -7, 1}, 2));
  KnotRecord k2(poly_knot("12n_642", IntPoly{1, 7, -15, 7, 1}, 2));
  CHECK(bare.tau().overlaps(k1.tau() + k2.tau()));

  /* a single jump pair with a declared signature is enough */
  KnotRecord one(poly_knot("one-jump", IntPoly{1, -7, 11, -7, 1}, 2));
  CHECK(one.has_profile());
  /* ... but not without the signature */
  KnotRecord one_bare(poly_knot("one-jump-bare", IntPoly{1, -7, 11, -7, 1}));
  CHECK_FALSE(one_bare.has_profile());
  CHECK_THROWS_AS(one_bare.rho(), InsufficientData);
}

TEST_CASE("record validation rejects non-knot data") {
  CHECK_THROWS_AS(KnotRecord(poly_knot("", IntPoly{1, -1, 1})), CatalogError);
  CHECK_THROWS_AS(KnotRecord(KnotData{}), CatalogError);  // no name, no data
  KnotData empty;
  empty.name = "nothing";
  CHECK_THROWS_AS(KnotRecord{empty}, CatalogError);

  /* not reciprocal */
  CHECK_THROWS_AS(KnotRecord(poly_knot("bad", IntPoly{1, -2, 2})), CatalogError);
  /* reciprocal but the value at 1 is not a unit */
  CHECK_THROWS_AS(KnotRecord(poly_knot("bad", IntPoly{1, 1, 1})), CatalogError);
  /* non-monic polynomials are fine as long as the value at 1 is a unit */
  KnotRecord nonmonic(poly_knot("nonmonic", IntPoly{2, -3, 2}));
  CHECK_FALSE(nonmonic.has_profile());  // one jump pair, no signature given
  CHECK(near(nonmonic.tau().midpoint(), 0.69314718055994529, 1e-12));
  /* zero polynomial */
  CHECK_THROWS_AS(KnotRecord(poly_knot("bad", IntPoly{})), CatalogError);
  /* odd total signature */
  CHECK_THROWS_AS(KnotRecord(poly_knot("bad", IntPoly{1, -1, 1}, 3)), CatalogError);
  /* no circle roots forces zero signature */
  CHECK_THROWS_AS(KnotRecord(poly_knot("bad", IntPoly{-1, 3, -1}, 2)), CatalogError);
  /* declared polynomial must match the Seifert matrix */
  KnotData clash = seifert_knot("clash", kTrefoil);
  clash.alexander = IntPoly{-1, 3, -1};
  CHECK_THROWS_AS(KnotRecord{clash}, CatalogError);
  /* declared signature must match the Seifert matrix */
  KnotData sig = seifert_knot("clash", kTrefoil);
  sig.signature = 2;
  CHECK_THROWS_AS(KnotRecord{sig}, CatalogError);
  /* matching declared data is fine */
  KnotData good = seifert_knot("trefoil", kTrefoil);
  good.alexander = IntPoly{1, -1, 1};
  good.signature = -2;
  CHECK_NOTHROW(KnotRecord{good});
}

TEST_CASE("unknot record") {
  KnotRecord rec(seifert_knot("unknot", IntMatrix{}));
  CHECK(rec.alexander() == IntPoly{1});
  CHECK(rec.admissible());
  CHECK(rec.signature() == 0);
  CHECK(rec.rho().is_exact_zero());
  CHECK(rec.tau().is_exact_zero());
  CHECK(rec.signature_sum(12) == 0);
  CHECK(rec.signature_at(Rat(1, 3)) == 0);

  KnotRecord poly(poly_knot("unknot", IntPoly{1}));
  CHECK(poly.rho().is_exact_zero());
  CHECK(poly.tau().is_exact_zero());
}

TEST_CASE("Riemann sums converge to rho") {
  /* signature_sum(n)/n is a Riemann sum for rho; the error is bounded by
     the jump count times 2/n */
  KnotRecord tre(seifert_knot("trefoil", kTrefoil));
  double r1 = static_cast<double>(tre.signature_sum(4095)) / 4095.0;
  CHECK(std::fabs(r1 - tre.rho().midpoint()) <= 4.0 / 4095.0);

  KnotRecord k1(poly_knot("9_48", IntPoly{1, -7, 11, -7, 1}, 2));
  double r2 = static_cast<double>(k1.signature_sum(4096)) / 4096.0;
  CHECK(std::fabs(r2 - k1.rho().midpoint()) <= 4.0 / 4096.0);
}

TEST_CASE("deterministic invariants") {
  KnotRecord a(poly_knot("9_48", IntPoly{1, -7, 11, -7, 1}, 2));
  KnotRecord b(poly_knot("9_48", IntPoly{1, -7, 11, -7, 1}, 2));
  CHECK(a.rho().lo().cmp(b.rho().lo()) == 0);
  CHECK(a.rho().hi().cmp(b.rho().hi()) == 0);
  CHECK(a.tau().lo().cmp(b.tau().lo()) == 0);
  CHECK(a.tau().hi().cmp(b.tau().hi()) == 0);
  CHECK(a.profile().jumps[0].turn.lo().cmp(b.profile().jumps[0].turn.lo()) == 0);
}
