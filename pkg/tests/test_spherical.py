import random

import pytest

from eqbundles.exact_linalg import IntegerMatrix, RationalMatrix, Subspace
from eqbundles.filtration import Filtration, MultiFiltration
from eqbundles.fixtures import FIXTURES, EXPECTED_VERDICTS
from eqbundles.spherical import (
    PGL2_RAY,
    FilteredRep,
    LatticeInclusion,
    LieFiltrationData,
    category_hom,
    check_condition_C,
    is_neutralizable,
    lowers_by_one,
    pgl2_preset,
)
from helpers import lowers_everywhere, random_invertible, random_pgl2_instance, random_unimodular


def test_raising_example_passes():
    f = Filtration(2, [(0, [(1, 0), (0, 1)]), (1, [(1, 0)])])
    action = RationalMatrix([[0, 0], [1, 0]])
    assert check_condition_C(pgl2_preset(2, action, f))
    assert lowers_by_one(action, f)


def test_lowering_too_far_fails_with_witness():
    f = Filtration(2, [(0, [(1, 0), (0, 1)]), (2, [(0, 1)])])
    action = RationalMatrix([[0, 1], [0, 0]])
    res = check_condition_C(pgl2_preset(2, action, f))
    assert not res
    ray, i, j, xi, w = res.violations[0]
    assert ray == PGL2_RAY and (i, j) == (-1, 2)
    assert Subspace(2, [w]) == Subspace(2, [(0, 1)])


def test_pgl2_coherence():
    rng = random.Random(51)
    seen = set()
    for k in range(120):
        dim, action, f = random_pgl2_instance(rng, lowering_bias=k % 2 == 0)
        verdict = bool(check_condition_C(pgl2_preset(dim, action, f)))
        assert verdict == lowers_everywhere(action, f) == lowers_by_one(action, f)
        seen.add(verdict)
    assert seen == {True, False}


def test_condition_c_basis_invariant():
    rng = random.Random(52)
    for k in range(60):
        dim, action, f = random_pgl2_instance(rng, lowering_bias=k % 2 == 0)
        g = random_invertible(rng, dim)
        moved = g @ action @ g.inverse()
        assert bool(check_condition_C(pgl2_preset(dim, action, f))) == bool(
            check_condition_C(pgl2_preset(dim, moved, f.transform(g)))
        )


def test_bracket_check():
    # sl2 basis e, f, h with [e, f] = h, [h, e] = 2e, [h, f] = -2f
    e = RationalMatrix([[0, 1], [0, 0]])
    fm = RationalMatrix([[0, 0], [1, 0]])
    h = RationalMatrix([[1, 0], [0, -1]])
    br = (
        ((0, 0, 0), (0, 0, 1), (-2, 0, 0)),
        ((0, 0, -1), (0, 0, 0), (0, 2, 0)),
        ((2, 0, 0), (0, -2, 0), (0, 0, 0)),
    )
    LieFiltrationData(3, (e, fm, h), {}, br)
    with pytest.raises(ValueError, match="bracket"):
        LieFiltrationData(3, (e, fm, e), {}, br)


def _rep(dim, action, f):
    return pgl2_preset(dim, action, f)


def test_category_hom_examples():
    zero = RationalMatrix([[0]])
    a = _rep(1, zero, Filtration.trivial(1, 0))
    b = _rep(1, zero, Filtration.trivial(1, 1))
    assert category_hom(a, b)[0] == 1
    assert category_hom(b, a)[0] == 0


def test_category_hom_identity_and_composition():
    rng = random.Random(53)
    for _ in range(30):
        reps = []
        for _ in range(3):
            dim, action, f = random_pgl2_instance(rng, True)
            reps.append(_rep(dim, action, f))
        a, b, c = reps
        dim_aa, basis_aa = category_hom(a, a)
        ident = RationalMatrix.identity(a.w_dim)
        flat = lambda m: [x for row in m.rows for x in row]
        assert flat(ident) in Subspace(a.w_dim ** 2, [flat(m) for m in basis_aa])
        _, hab = category_hom(a, b)
        _, hbc = category_hom(b, c)
        _, hac = category_hom(a, c)
        span = Subspace(a.w_dim * c.w_dim, [flat(m) for m in hac])
        for p in hab:
            for q in hbc:
                assert flat(q @ p) in span


def test_category_hom_basis_change():
    rng = random.Random(54)
    for _ in range(30):
        da, xa, fa = random_pgl2_instance(rng, True)
        db, xb, fb = random_pgl2_instance(rng, True)
        a, b = _rep(da, xa, fa), _rep(db, xb, fb)
        g = random_invertible(rng, db)
        moved = _rep(db, g @ xb @ g.inverse(), fb.transform(g))
        assert category_hom(a, b)[0] == category_hom(a, moved)[0]


def test_category_hom_rejects_mismatched_lie_data():
    a = _rep(1, RationalMatrix([[0]]), Filtration.trivial(1))
    lie = LieFiltrationData(1, (RationalMatrix([[0]]),), {PGL2_RAY: Filtration.trivial(1, 0)})
    b = FilteredRep(1, lie, MultiFiltration(1, {PGL2_RAY: Filtration.trivial(1)}))
    with pytest.raises(ValueError):
        category_hom(a, b)


def test_neutralizability_fixtures():
    for name, expected in EXPECTED_VERDICTS.items():
        inc = LatticeInclusion(IntegerMatrix(FIXTURES[name]["payload"]["generators"]))
        assert is_neutralizable(inc)[0] == (expected == "pass"), name
    assert is_neutralizable(LatticeInclusion(IntegerMatrix([[2]]))) == (False, [2])


def test_neutralizability_unimodular_invariance():
    rng = random.Random(55)
    for _ in range(80):
        m, k = rng.randint(1, 4), None
        k = rng.randint(1, m)
        cols = IntegerMatrix([[rng.randint(-3, 3) for _ in range(k)] for _ in range(m)], ncols=k)
        if cols.to_rational().rank() != k:
            continue
        u = IntegerMatrix(random_unimodular(rng, m), ncols=m)
        v = IntegerMatrix(random_unimodular(rng, k), ncols=k)
        assert is_neutralizable(LatticeInclusion(cols)) == is_neutralizable(LatticeInclusion(u @ cols @ v))


def test_dependent_generators_rejected():
    with pytest.raises(ValueError, match="dependent"):
        LatticeInclusion(IntegerMatrix([[1, 2], [2, 4]]))
