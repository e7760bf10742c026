import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqbundles.exact_linalg import (
    IntegerMatrix,
    RationalMatrix,
    Subspace,
    cone_combination,
    elementary_divisors,
    smith_normal_form,
    solve_linear,
    subspace_intersect,
    subspace_sum,
    to_rational,
)


def vectors(n, max_count=4):
    return st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), max_size=max_count)


def _intersect_oracle(a: Subspace, b: Subspace) -> Subspace:
    # solve x.A = y.B directly and map back through A
    n, ka, kb = a.ambient_dim, a.dim, b.dim
    rows = [[a.basis[i][c] for i in range(ka)] + [-b.basis[j][c] for j in range(kb)] for c in range(n)]
    ker = solve_linear(RationalMatrix(rows, ncols=ka + kb))
    return Subspace(n, [[sum(x[i] * a.basis[i][c] for i in range(ka)) for c in range(n)] for x in ker.basis])


def test_to_rational_parses_strings():
    assert to_rational("-3/6") == Fraction(-1, 2)
    assert to_rational(4) == 4
    with pytest.raises(TypeError):
        to_rational(0.5)


def test_sum_example():
    s = Subspace(2, [(1, 1)]) + Subspace(2, [(1, -1)])
    assert s.is_full()


def test_intersection_example():
    a = Subspace(2, [(1, 0), (0, 1)])
    b = Subspace(2, [(1, 1)])
    assert subspace_intersect(a, b) == Subspace(2, [(2, 2)])


def test_kernel_example():
    ker = solve_linear(RationalMatrix([[1, -1]]))
    assert ker == Subspace(2, [(1, 1)])


def test_ambient_mismatch_is_rejected():
    with pytest.raises(ValueError):
        subspace_sum(Subspace(2), Subspace(3))
    with pytest.raises(ValueError):
        Subspace(2, [(1, 2, 3)])


def test_inverse_of_singular_matrix_raises():
    with pytest.raises(ZeroDivisionError):
        RationalMatrix([[1, 2], [2, 4]]).inverse()


def test_snf_example():
    u, d, v = smith_normal_form(IntegerMatrix([[2, 4], [6, 8]]))
    assert d == IntegerMatrix([[2, 0], [0, 4]])
    assert u @ d @ v == IntegerMatrix([[2, 4], [6, 8]])


def test_snf_zero_and_empty():
    assert elementary_divisors(IntegerMatrix([[0, 0], [0, 0]])) == []
    u, d, v = smith_normal_form(IntegerMatrix([[0, 0, 0]]))
    assert u @ d @ v == IntegerMatrix([[0, 0, 0]])


def _check_snf(a: IntegerMatrix):
    u, d, v = smith_normal_form(a)
    assert u @ d @ v == a
    assert abs(u.det()) == 1 and abs(v.det()) == 1
    m, n = a.shape
    diag = [d[i, i] for i in range(min(m, n))]
    for i in range(m):
        for j in range(n):
            if i != j:
                assert d[i, j] == 0
    assert all(x >= 0 for x in diag)
    nz = [x for x in diag if x]
    assert diag[: len(nz)] == nz  # zeros trail
    for p, q in zip(nz, nz[1:]):
        assert q % p == 0


def test_snf_random_matrices():
    rng = random.Random(7)
    for _ in range(250):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        _check_snf(IntegerMatrix([[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)], ncols=n))


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_snf_hypothesis(data):
    m = data.draw(st.integers(1, 4))
    n = data.draw(st.integers(1, 4))
    rows = data.draw(st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=m, max_size=m))
    _check_snf(IntegerMatrix(rows, ncols=n))


@settings(max_examples=100, deadline=None)
@given(vectors(3), vectors(3))
def test_dimension_formula(a, b):
    a, b = Subspace(3, a), Subspace(3, b)
    assert (a + b).dim + (a & b).dim == a.dim + b.dim


@settings(max_examples=100, deadline=None)
@given(vectors(3), vectors(3))
def test_intersection_matches_oracle(a, b):
    a, b = Subspace(3, a), Subspace(3, b)
    assert a & b == _intersect_oracle(a, b)


@settings(max_examples=100, deadline=None)
@given(vectors(3), vectors(3), vectors(3))
def test_modular_law(a, b, c):
    a, b, c = Subspace(3, a), Subspace(3, b), Subspace(3, c)
    b = a + b  # ensure a <= b
    assert (a + c) & b == a + (c & b)


@settings(max_examples=100, deadline=None)
@given(vectors(3), st.integers(-3, 3).filter(bool))
def test_canonical_form_ignores_presentation(vs, scale):
    s = Subspace(3, vs)
    shuffled = [tuple(scale * x for x in v) for v in reversed(vs)]
    summed = [tuple(x + y for x, y in zip(vs[0], vs[-1]))] + vs if vs else vs
    assert Subspace(3, shuffled) == s
    assert Subspace(3, summed) == s
    assert hash(Subspace(3, shuffled)) == hash(s)


@settings(max_examples=60, deadline=None)
@given(vectors(3))
def test_annihilator_is_perpendicular(vs):
    s = Subspace(3, vs)
    ann = s.annihilator()
    assert ann.dim + s.dim == 3
    assert all(sum(p * q for p, q in zip(u, w)) == 0 for u in s.basis for w in ann.basis)


def test_complement_basis_is_deterministic():
    full = Subspace.full(3)
    line = Subspace(3, [(1, 1, 1)])
    comp = full.complement_basis(line)
    assert len(comp) == 2
    assert Subspace(3, list(comp) + [(1, 1, 1)]).is_full()
    assert comp == full.complement_basis(line)
    with pytest.raises(ValueError):
        line.complement_basis(full)


def test_cone_combination():
    gens = [(1, 0), (1, 2)]
    assert cone_combination((2, 2), gens) == [1, 1]
    assert cone_combination((0, 1), gens) is None
    assert cone_combination((1, 0), [(1, 1), (1, -1)]) == [Fraction(1, 2), Fraction(1, 2)]


def test_kron_shape():
    a = RationalMatrix([[1, 2], [3, 4]])
    b = RationalMatrix([[0, 1]])
    k = a.kron(b)
    assert k.shape == (2, 4)
    assert k.rows[1] == (0, 3, 0, 4)


def test_snf_diagonal_matches_sympy():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    rng = random.Random(8)
    for _ in range(200):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        ref = sympy_snf(sympy.Matrix(rows), domain=sympy.ZZ)
        expected = [abs(int(ref[i, i])) for i in range(min(m, n)) if ref[i, i] != 0]
        assert elementary_divisors(IntegerMatrix(rows, ncols=n)) == expected
