"""Random instance generators shared by the test modules."""

import random
from itertools import product

from eqbundles.exact_linalg import RationalMatrix, Subspace
from eqbundles.filtration import Filtration, MultiFiltration


def random_invertible(rng: random.Random, n: int, lo: int = -2, hi: int = 2) -> RationalMatrix:
    while True:
        m = RationalMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)], ncols=n)
        if n == 0 or m.det() != 0:
            return m


def random_filtration(rng: random.Random, dim: int, lo: int = -3, hi: int = 3) -> Filtration:
    """Filtration built from a random basis with random per-vector levels."""
    if dim == 0:
        return Filtration(0)
    basis = random_invertible(rng, dim).rows
    levels = [rng.randint(lo, hi) for _ in range(dim)]
    steps = [(d, Subspace(dim, [v for v, l in zip(basis, levels) if l >= d])) for d in sorted(set(levels))]
    return Filtration(dim, steps)


def random_subspace(rng: random.Random, n: int, k: int | None = None) -> Subspace:
    k = rng.randint(0, n) if k is None else k
    return Subspace(n, [[rng.randint(-3, 3) for _ in range(n)] for _ in range(k)])


def random_multifiltration(rng: random.Random, dim: int, rays, lo: int = 0, hi: int = 2) -> MultiFiltration:
    return MultiFiltration(dim, {r: random_filtration(rng, dim, lo, hi) for r in rays})


def lines_filtration(vec, level: int = 1) -> Filtration:
    """Plane filtration: whole space up to ``level - 1``, the line at ``level``."""
    return Filtration(len(vec), [(level, [vec])])


def k_total_oracle(mf: MultiFiltration, rays) -> int:
    """Sum over every integer tuple of dim U_p - dim(sum_i U_(p + e_i)).

    Walks the full unit-step box, so it shares nothing with the jump-grid
    search beyond ``Filtration.level``.
    """
    n = mf.ambient_dim
    if not rays:
        return n
    boxes = [range(mf[r].levels[0] - 1, mf[r].levels[-1] + 2) for r in rays]

    def u(p):
        s = Subspace.full(n)
        for r, x in zip(rays, p):
            s = s & mf[r].level(x)
        return s

    total = 0
    for p in product(*boxes):
        above = Subspace.zero(n)
        for i in range(len(p)):
            above = above + u(p[:i] + (p[i] + 1,) + p[i + 1:])
        total += u(p).dim - above.dim
    return total


def random_unimodular(rng: random.Random, n: int, steps: int = 8):
    """Integer matrix with determinant +-1 built from elementary moves."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            m[i] = [-x for x in m[i]]
            continue
        c = rng.randint(-2, 2)
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return m


def lowers_everywhere(action: RationalMatrix, f: Filtration) -> bool:
    """Check the image condition at every integer in a padded window."""
    lo, hi = (f.levels[0], f.levels[-1]) if f.levels else (0, 0)
    return all(f.level(i).image(action) <= f.level(i - 1) for i in range(lo - 2, hi + 3))


def random_pgl2_instance(rng: random.Random, lowering_bias: bool):
    dim = rng.randint(1, 3)
    basis = random_invertible(rng, dim).rows
    levels = [rng.randint(-2, 2) for _ in range(dim)]
    f = Filtration.from_adapted_basis(basis, levels)
    # action in adapted coordinates, optionally restricted to lowering entries
    coords = [
        [rng.randint(-2, 2) if (not lowering_bias or levels[i] >= levels[j] - 1) else 0 for j in range(dim)]
        for i in range(dim)
    ]
    b = RationalMatrix(basis, ncols=dim).T  # columns are the adapted vectors
    action = b @ RationalMatrix(coords, ncols=dim) @ b.inverse()
    return dim, action, f
