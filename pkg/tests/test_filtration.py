import random

import pytest

from eqbundles.exact_linalg import Subspace
from eqbundles.filtration import (
    FailureReport,
    Filtration,
    Grading,
    MultiFiltration,
    check_condition_K,
    filtration_level,
    tensor_filtration,
    verify_grading,
)
from helpers import k_total_oracle, lines_filtration, random_filtration, random_invertible, random_multifiltration


def two_step():
    # V at levels <= 0, span(e2) at 1 and 2, zero above
    return Filtration(2, [(0, [(1, 0), (0, 1)]), (2, [(0, 1)])])


def test_level_reading():
    f = two_step()
    assert filtration_level(f, -5).is_full()
    assert filtration_level(f, 0).is_full()
    assert filtration_level(f, 1) == Subspace(2, [(0, 1)])
    assert filtration_level(f, 2) == Subspace(2, [(0, 1)])
    assert filtration_level(f, 3).is_zero()
    assert f(1) == f.level(1)


def test_first_step_below_full_is_padded():
    f = Filtration(2, [(2, [(0, 1)])])
    assert f.levels == (1, 2)
    assert f.level(-10).is_full()


def test_non_decreasing_is_rejected():
    with pytest.raises(ValueError):
        Filtration(2, [(0, [(1, 0)]), (1, [(0, 1)])])
    with pytest.raises(ValueError):
        Filtration(2, [])


def test_adapted_basis_construction():
    f = Filtration.from_adapted_basis([(1, 0), (0, 1)], [0, 2])
    assert f == two_step()
    assert f.jump_dims() == {0: 1, 2: 1}


def test_two_lines_accepted():
    mf = MultiFiltration(2, {"a": lines_filtration((1, 0)), "b": lines_filtration((0, 1))})
    g = check_condition_K(mf, ["a", "b"])
    assert isinstance(g, Grading)
    assert verify_grading(mf, ["a", "b"], g)
    assert sorted(t for t, _ in g.pieces) == [(0, 1), (1, 0)]


def test_three_lines_rejected():
    mf = MultiFiltration(
        2, {r: lines_filtration(v) for r, v in zip("abc", [(1, 0), (0, 1), (1, 1)])}
    )
    rep = check_condition_K(mf, ["a", "b", "c"])
    assert isinstance(rep, FailureReport)
    assert not rep and not rep.indeterminate
    assert rep.total == 3 and rep.ambient_dim == 2
    assert "3 > dim 2" in rep.summary()


def test_unknown_ray():
    mf = MultiFiltration(1, {"a": Filtration.trivial(1)})
    with pytest.raises(KeyError, match="unknown ray"):
        check_condition_K(mf, ["z"])


def test_degenerate_inputs():
    mf = MultiFiltration(0, {"a": Filtration(0)})
    assert check_condition_K(mf, ["a"]).pieces == ()
    mf = MultiFiltration(2, {"a": Filtration.trivial(2)})
    g = check_condition_K(mf, [])
    assert g.pieces == (((), Subspace.full(2)),)


def test_swapped_tuples_fail_verification():
    mf = MultiFiltration(2, {"a": lines_filtration((1, 0)), "b": lines_filtration((0, 1))})
    g = check_condition_K(mf, ["a", "b"])
    swapped = Grading(2, g.rays, tuple((t, s) for (t, _), (_, s) in zip(g.pieces, reversed(g.pieces))))
    assert not verify_grading(mf, ["a", "b"], swapped)


def test_k_self_certifies_and_matches_oracle():
    rng = random.Random(11)
    for _ in range(120):
        dim = rng.randint(1, 3)
        rays = ["a", "b", "c"][: rng.randint(1, 3)]
        mf = random_multifiltration(rng, dim, rays)
        res = check_condition_K(mf, rays)
        oracle = k_total_oracle(mf, rays)
        if isinstance(res, Grading):
            assert oracle == dim
            assert verify_grading(mf, rays, res)
        else:
            assert not res.indeterminate
            assert res.total == oracle != dim


def test_at_most_two_rays_always_split():
    rng = random.Random(12)
    for _ in range(120):
        dim = rng.randint(1, 4)
        rays = ["a", "b"][: rng.randint(1, 2)]
        mf = random_multifiltration(rng, dim, rays, -2, 2)
        assert isinstance(check_condition_K(mf, rays), Grading)


def test_three_generic_lines_always_fail():
    rng = random.Random(13)
    for _ in range(50):
        lines = set()
        while len(lines) < 3:
            v = (rng.randint(-5, 5), rng.randint(-5, 5))
            if v != (0, 0):
                lines.add(Subspace(2, [v]))
        mf = MultiFiltration(2, {r: lines_filtration(l.basis[0]) for r, l in zip("abc", lines)})
        rep = check_condition_K(mf, "abc")
        assert isinstance(rep, FailureReport) and rep.total == 3


def test_k_invariant_under_basis_change_and_shift():
    rng = random.Random(14)
    for _ in range(60):
        dim = rng.randint(1, 3)
        rays = ["a", "b", "c"][: rng.randint(1, 3)]
        mf = random_multifiltration(rng, dim, rays)
        ok = isinstance(check_condition_K(mf, rays), Grading)
        g = random_invertible(rng, dim)
        assert isinstance(check_condition_K(mf.transform(g), rays), Grading) == ok
        shifted = mf.replace("a", mf["a"].shift(rng.randint(-3, 3)))
        assert isinstance(check_condition_K(shifted, rays), Grading) == ok


def test_transform_moves_levels():
    f = two_step()
    swap = [[0, 1], [1, 0]]
    from eqbundles.exact_linalg import RationalMatrix

    assert f.transform(RationalMatrix(swap)).level(1) == Subspace(2, [(1, 0)])
    assert f.shift(3).level(5) == f.level(2)


def test_tensor_example():
    a = Filtration(1, [(1, [(1,)])])
    b = Filtration(1, [(0, [(1,)])])
    t = tensor_filtration(two_step(), a)
    assert t.levels == (1, 3)
    assert tensor_filtration(a, b).levels == (1,)


def test_tensor_jump_dims_add():
    rng = random.Random(15)
    for _ in range(40):
        f = random_filtration(rng, rng.randint(1, 3))
        g = random_filtration(rng, rng.randint(1, 3))
        t = tensor_filtration(f, g)
        expected = {}
        for x, p in f.jump_dims().items():
            for y, q in g.jump_dims().items():
                expected[x + y] = expected.get(x + y, 0) + p * q
        assert t.jump_dims() == dict(sorted(expected.items()))
