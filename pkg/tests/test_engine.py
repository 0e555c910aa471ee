import itertools
import logging

import pytest

from ncgb.coeff import param_ring
from ncgb.corpus import gen_klein
from ncgb.engine import (EngineConfig, GenEntry, certify_complete, free_gbasis, hfree_gbasis,
                         minimalize, pair_schedule, reduce, spoly)
from ncgb.errors import CriterionError, InconsistentIdealError
from ncgb.freealg import FreePoly, homogenize
from ncgb.letterplace import LPPoly
from ncgb.oracle import nc_buchberger
from ncgb.ordering import OrderingSpec

XY = OrderingSpec(("x", "y"))


def lp(items, spec=XY):
    return LPPoly.from_words(spec, [(tuple(w), c) for w, c in items])


def F(text, spec=XY):
    return FreePoly.parse(text, spec)


g1 = lp([("xx", 1), ("tt", -1)])
g2 = lp([("yy", 1), ("tt", -1)])
g3 = lp([("xyxy", 1), ("tttt", -1)])
g4 = lp([("xyx", 1), ("ytt", -1)])
d1 = lp([("tx", 1), ("xt", -1)])
d2 = lp([("ty", 1), ("yt", -1)])


def test_spoly_self_overlap():
    assert str(spoly(g1, g1, 1)) == "-t(1)*t(2)*x(3) + x(1)*t(2)*t(3)"


def test_spoly_sign_convention():
    # conventional sign (l/lm f) f - (l/lm g) g; some references print the negation
    s = spoly(g3, g2, 3)
    assert str(s) == "-t(1)*t(2)*t(3)*t(4)*y(5) + x(1)*y(2)*x(3)*t(4)*t(5)"
    assert str(-s) == "t(1)*t(2)*t(3)*t(4)*y(5) - x(1)*y(2)*x(3)*t(4)*t(5)"


def test_spoly_prefix_overlap_and_trivial():
    assert str(spoly(g3, g4, 0)) == "y(1)*t(2)*t(3)*y(4) - t(1)*t(2)*t(3)*t(4)"
    assert not spoly(g1, g1, 0)


def test_spoly_criteria():
    with pytest.raises(CriterionError):
        spoly(g1, g1, 2)  # disjoint supports
    with pytest.raises(CriterionError):
        spoly(g1, g2, 1)  # place 2 would carry x and y


def test_reduce_by_commutator():
    p = lp([("xtx", -1), ("ttt", 1)])
    r = reduce(p, [d1])
    assert str(-r) == "x(1)*x(2)*t(3) - t(1)*t(2)*t(3)"


def test_reduce_to_zero_by_commutator_and_g2():
    assert not reduce(spoly(g3, g4, 0), [d2, g2])


def test_reduce_irreducible_unchanged():
    p = lp([("yx", 1), ("xy", -1)])
    assert reduce(p, [g1, g2]) == p


def test_reduce_without_tail():
    p = lp([("xy", 1), ("yy", 1)])
    assert reduce(p, [g2], tail_reduce=False) == p
    assert str(reduce(p, [g2])) == "x(1)*y(2) + t(1)*t(2)"


def _entries(polys):
    return [GenEntry(p.monic(), k) for k, p in enumerate(polys)]


def test_pair_schedule_single_quadratic():
    pairs = pair_schedule(_entries([g1]), "std", 10)
    assert [(p.left, p.right, p.shift) for p in pairs] == [(0, 0, 1)]


def test_pair_schedule_excludes_disjoint_and_nonmultilinear():
    pairs = pair_schedule(_entries([g1, g2]), "std", 10)
    assert all(p.shift < 2 for p in pairs)
    assert not any({p.left, p.right} == {0, 1} for p in pairs)


def test_pair_schedule_noc_copies_and_bound():
    std = pair_schedule(_entries([g1]), "std", 5)
    noc = pair_schedule(_entries([g1]), "noc", 5)
    assert len(std) == 1 and sorted(p.base for p in noc) == [0, 1, 2]
    assert pair_schedule(_entries([g1]), "std", 2) == []
    keys = [p.key for p in noc]
    assert keys == sorted(keys)


def test_minimalize_worked_example():
    res = free_gbasis(gen_klein().generators, XY, EngineConfig(10))
    names = {g.name for g in minimalize(res.entries)}
    assert names == {"d1", "d2", "g1", "g2", "g5"}


def test_minimalize_trivial_cases():
    e = _entries([g1])
    assert minimalize(e) == e
    dup = _entries([g1, lp([("xx", 1), ("yy", 1)])])
    assert len(minimalize(dup)) == 1 and minimalize(dup)[0].index == 0


@pytest.mark.parametrize("d, bound, expected", [(5, 10, True), (11, 15, False), (1, 1, True)])
def test_certify_complete(d, bound, expected):
    assert certify_complete(d, bound) is expected


def test_hfree_matches_oracle():
    H = [F("x^2 - y^2")]
    res = hfree_gbasis(H, XY, EngineConfig(6))
    ref = nc_buchberger(H, XY, max_deg=6)
    assert {str(f) for f in res.minimal_basis} == {str(f) for f in ref} == {"x^2 - y^2", "y^2*x - x*y^2"}
    assert res.certified_complete


def test_hfree_monomial_and_coprime():
    res = hfree_gbasis([F("x*y")], XY, EngineConfig(5))
    assert [str(f) for f in res.basis] == ["x*y"] and res.stats.pairs_reduced == 1
    res = hfree_gbasis([F("2*x^2"), F("y^2 + x*y")], XY, EngineConfig(2))
    assert {str(f) for f in res.basis} == {"x^2", "x*y + y^2"}


def test_hfree_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        hfree_gbasis([F("x^2 - y")], XY, EngineConfig(4))


def test_free_klein():
    res = free_gbasis(gen_klein().generators, XY, EngineConfig(10))
    assert {str(f) for f in res.minimal_basis} == {"x^2 - 1", "y^2 - 1", "y*x - x*y"}
    assert res.certified_complete and res.stats.saturations == 2


def test_free_single_letter():
    X = OrderingSpec(("x",))
    res = free_gbasis([F("x - 1", X)], X, EngineConfig(4))
    assert [str(f) for f in res.basis] == ["x - 1"]


def test_free_on_homogeneous_input_matches_hfree():
    H = [F("x^2 - y^2")]
    a = free_gbasis(H, XY, EngineConfig(6))
    b = hfree_gbasis(H, XY, EngineConfig(6))
    assert a.stats.saturations == 0
    assert {str(f) for f in a.basis} == {str(f) for f in b.basis}
    assert [str(f) for f in a.minimal_basis] == [str(f) for f in b.minimal_basis]


def test_inconsistent_presentation():
    with pytest.raises(InconsistentIdealError, match="ideal contains 1"):
        free_gbasis([F("x*y - 1"), F("x")], XY, EngineConfig(6))
    with pytest.raises(InconsistentIdealError):
        free_gbasis([F("3")], XY, EngineConfig(2))


def test_zero_generators_dropped(caplog):
    with caplog.at_level(logging.WARNING):
        res = free_gbasis([F("x - x"), F("x^2 - 1")], XY, EngineConfig(4))
    assert "zero generator" in caplog.text
    assert [str(f) for f in res.basis] == ["x^2 - 1"]
    assert free_gbasis([], XY, EngineConfig(3)).basis == []


def test_bound_below_generator_degree():
    with pytest.raises(ValueError):
        free_gbasis([F("x^3 - 1")], XY, EngineConfig(2))
    with pytest.raises(ValueError):
        EngineConfig(3, "fast")


def test_parameters_flow_through():
    R = param_ring(("q",))
    spec = OrderingSpec(("a", "b"), "reverse")
    H = [FreePoly.parse(s, spec, R) for s in
         ["a^2 - (q-1)*a - q", "b^2 - (q-1)*b - q", "a*b*a - b*a*b"]]
    res = free_gbasis(H, spec, EngineConfig(7))
    ref = nc_buchberger(H, spec, max_deg=7)
    assert {str(f) for f in res.minimal_basis} == {str(f) for f in ref}
    assert res.certified_complete


@pytest.mark.parametrize("variant", ["std", "noc", "bas"])
def test_variants_agree_small(variant):
    res = free_gbasis(gen_klein().generators, XY, EngineConfig(10, variant))
    assert {str(f) for f in res.minimal_basis} == {"x^2 - 1", "y^2 - 1", "y*x - x*y"}


def test_saturation_invariant_and_lm_preservation():
    res = free_gbasis(gen_klein().generators, XY, EngineConfig(10))
    for g in res.entries:
        if not g.commutator:
            assert g.poly.trailing_t() == 0
    for f in res.basis:
        assert homogenize(f).lm == f.lm


def test_trace_is_deterministic():
    a = free_gbasis(gen_klein().generators, XY, EngineConfig(10, trace=True))
    b = free_gbasis(gen_klein().generators, XY, EngineConfig(10, trace=True))
    assert a.trace == b.trace and a.record() == b.record()


def test_random_small_presentations_against_oracle():
    import random

    rng = random.Random(3)
    checked = 0
    for _ in range(40):
        gens = []
        for _ in range(rng.randint(1, 3)):
            terms = [(tuple(rng.choice("xy") for _ in range(rng.randint(0, 3))), rng.randint(-2, 2))
                     for _ in range(rng.randint(1, 3))]
            f = FreePoly(terms, XY)
            if f:
                gens.append(f)
        if not gens:
            continue
        try:
            ref, complete = nc_buchberger(gens, XY, max_deg=7, with_status=True)
        except InconsistentIdealError:
            with pytest.raises(InconsistentIdealError):
                free_gbasis(gens, XY, EngineConfig(7))
            continue
        res = free_gbasis(gens, XY, EngineConfig(7))
        if res.certified_complete and complete:
            assert {str(f) for f in res.minimal_basis} == {str(f) for f in ref}, gens
            checked += 1
    assert checked >= 10
