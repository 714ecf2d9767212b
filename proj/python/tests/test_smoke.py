"""End-to-end smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import knotcomm as kc


def test_catalog_and_names():
    cat = kc.Catalog.builtin()
    names = cat.names()
    assert names[0] == "unknot"
    assert "9_48" in names and "12n_642" in names
    assert "trefoil" in cat and "nope" not in cat
    assert len(cat) == len(names)
    assert kc.Catalog.parse(cat.to_json()).names() == names


def test_trefoil():
    k = kc.Catalog.builtin().record("trefoil")
    assert k.signature() == -2
    assert k.signature_at(Fraction(1, 4)) == -2
    assert k.signature_at(0) == 0
    assert str(k.alexander) == "t^2 - t + 1"
    assert k.alexander(2) == 3
    assert not k.admissible
    assert k.cyclotomic_divisors == [6]
    assert k.tau().midpoint == 0.0 and k.tau().radius == 0.0
    (jump,) = k.jumps
    assert jump.exact_turn == Fraction(1, 6)
    assert jump.value_after == -2


def test_flagship_pair():
    cat = kc.Catalog.builtin()
    a, b = cat.record("9_48"), cat.record("12n_642")
    assert abs(a.tau().midpoint - 1.6306052174936085) < 1e-12
    assert abs(a.rho().midpoint - 1.6451226875975218) < 1e-11
    assert abs(b.rho().midpoint - 1.8065030832033043) < 1e-11
    assert a.signature_sum(4) == 6 and a.signature_sum(8) == 14
    assert b.signature_sum(3) == 4 and b.signature_sum(6) == 10

    diff = 8 * a.tau() - 6 * b.tau()
    assert diff.contains_zero() and diff.radius < 1e-20 and diff.sign() is None

    rep = kc.cover_pair_test(a, 8, b, 6)
    assert rep.overall == kc.Verdict.PASS
    assert rep.find("rho[+1]").verdict == kc.Verdict.FAIL
    assert rep.find("rho[-1]").verdict == kc.Verdict.PASS
    assert rep.find("absent") is None
    assert kc.cover_pair_test(a, 4, b, 3).overall == kc.Verdict.FAIL
    assert kc.multiset_power_test(a, 8, b, 6).overall == kc.Verdict.PASS

    assert [(r.p, r.q) for r in kc.ratio_scan(a, b, 12)] == [(4, 3)]
    scan = kc.orientation_test(a, b, 4, 3, k_max=40, confirm_max=4)
    assert scan.plus_candidates == [] and scan.minus_confirmed == [2, 4]


def test_covers_and_growth():
    k = kc.Catalog.builtin().record("9_48")
    assert kc.torsion_order(k, 2) == 27
    assert kc.b1_of_cover(k, 6) == 1
    seq = kc.growth_sequence(k, 60)
    assert seq[0] == (1, 0.0) and seq[-1][0] == 60
    fig8 = kc.Catalog.builtin().record("figure8")
    # T_4 of the figure eight knot is Lucas(8) - 2.
    assert kc.torsion_order(fig8, 4) == 45


def test_custom_records_and_errors():
    k = kc.knot_from_alexander("k", [1, -7, 11, -7, 1], signature=2, genus=2)
    assert k.genus == 2 and k.fibered is None
    assert k.signature_at(Fraction(1, 2)) == 2
    f = kc.knot_from_seifert("f", [[1, 1], [0, -1]])
    assert f.signature() == 0 and f.admissible

    with pytest.raises(kc.UnknownKnot):
        kc.Catalog.builtin().record("nope")
    with pytest.raises(kc.NotAdmissible):
        kc.growth_sequence(kc.Catalog.builtin().record("trefoil"), 10)
    with pytest.raises(kc.InvalidSeifert):
        kc.knot_from_seifert("bad", [[1, 1], [1, 1]])
    with pytest.raises(kc.Error):
        kc.knot_from_alexander("bad", [1, 1])
    with pytest.raises(TypeError):
        kc.Catalog.builtin().record("trefoil").signature_at(0.25)


def test_mirror():
    k = kc.Catalog.builtin().record("9_48")
    mk = k.mirrored()
    assert mk.mirror and mk.signature() == -2
    assert abs((mk.rho() + k.rho()).midpoint) < 1e-11
    assert mk.tau().midpoint == k.tau().midpoint
    assert mk.alexander == k.alexander
