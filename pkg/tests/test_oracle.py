import pytest

from ncgb.corpus import gen_klein
from ncgb.engine import EngineConfig, hfree_gbasis
from ncgb.errors import InconsistentIdealError
from ncgb.freealg import FreePoly
from ncgb.oracle import _overlaps, nc_buchberger, nf_member
from ncgb.ordering import OrderingSpec

XY = OrderingSpec(("x", "y"))
KLEIN = [FreePoly.parse(s, XY) for s in ("x^2 - 1", "y^2 - 1", "y*x - x*y")]


def F(text, spec=XY):
    return FreePoly.parse(text, spec)


def test_klein():
    ref = nc_buchberger(gen_klein().generators, XY)
    assert {str(f) for f in ref} == {"x^2 - 1", "y^2 - 1", "y*x - x*y"}


def test_monomial():
    assert [str(f) for f in nc_buchberger([F("x*y")], XY)] == ["x*y"]


def test_cross_check_with_homogeneous_engine():
    H = [F("x^2 - y^2")]
    ref = nc_buchberger(H, XY, max_deg=6)
    eng = hfree_gbasis(H, XY, EngineConfig(6))
    assert {str(f) for f in ref} == {str(f) for f in eng.minimal_basis}


def test_nf_member_examples():
    assert not nf_member(F("x*y*x*y - 1"), KLEIN)
    assert str(nf_member(F("1"), KLEIN)) == "1"
    assert str(nf_member(F("y*x"), [F("y*x - x*y")])) == "x*y"


def test_inconsistent():
    with pytest.raises(InconsistentIdealError):
        nc_buchberger([F("x*y - 1"), F("y")], XY)


def test_confluence_and_membership():
    gens = gen_klein().generators
    G = nc_buchberger(gens, XY)
    for g in gens:
        assert not nf_member(g, G)
    for a in G:
        for b in G:
            u, v = a.lm, b.lm
            for k in _overlaps(u, v):
                # overlap relation a*v[k:] - u[:-k]*b must vanish
                s = a * FreePoly.word(v[k:], XY) - FreePoly.word(u[: len(u) - k], XY) * b
                assert not nf_member(s, G)


def test_truncation_status():
    basis, complete = nc_buchberger([F("x*y*x - y*x*y")], XY, max_deg=4, with_status=True)
    assert not complete
