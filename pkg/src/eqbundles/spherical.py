"""Filtered representations of a stabilizer Lie algebra.

Objects are a representation space ``W`` carrying one filtration per ray,
together with a Lie algebra acting on ``W`` whose underlying space is also
filtered per ray.  The transversality test asks that
``F^i(Lie) . F^j(W) <= F^(i+j)(W)``.  Weight-lattice neutralizability is
decided through the Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .exact_linalg import IntegerMatrix, RationalMatrix, smith_normal_form, solve_linear
from .filtration import Filtration, MultiFiltration, preservation_constraints

__all__ = [
    "LieFiltrationData",
    "FilteredRep",
    "LatticeInclusion",
    "ConditionCResult",
    "check_condition_C",
    "pgl2_preset",
    "lowers_by_one",
    "category_hom",
    "is_neutralizable",
    "PGL2_RAY",
]

PGL2_RAY = "alpha"


def _combine(coeffs: Sequence, mats: Sequence[RationalMatrix], n: int) -> RationalMatrix:
    rows = [[sum(c * m[i, j] for c, m in zip(coeffs, mats)) for j in range(n)] for i in range(n)]
    return RationalMatrix(rows, ncols=n)


@dataclass(frozen=True)
class LieFiltrationData:
    """Lie algebra basis acting through ``action[k]``, filtered per ray.

    ``brackets[a][b]`` lists the coordinates of ``[xi_a, xi_b]``; when
    given, the action is checked to be a Lie algebra map.
    """

    lie_dim: int
    action: tuple[RationalMatrix, ...]
    lie_levels: Mapping[str, Filtration]
    brackets: tuple | None = None

    def __post_init__(self):
        action = tuple(a if isinstance(a, RationalMatrix) else RationalMatrix(a) for a in self.action)
        object.__setattr__(self, "action", action)
        object.__setattr__(self, "lie_levels", dict(sorted((str(k), v) for k, v in self.lie_levels.items())))
        if len(action) != self.lie_dim:
            raise ValueError(f"{len(action)} action matrices for a Lie algebra of dimension {self.lie_dim}")
        if action:
            n = action[0].nrows
            for a in action:
                if a.shape != (n, n):
                    raise ValueError("action matrices must be square and of equal size")
        for ray, f in self.lie_levels.items():
            if f.ambient_dim != self.lie_dim:
                raise ValueError(f"Lie filtration for ray {ray!r} has the wrong dimension")
        if self.brackets is not None:
            self._check_brackets()

    @property
    def rep_dim(self) -> int | None:
        return self.action[0].nrows if self.action else None

    def element(self, coords: Sequence) -> RationalMatrix:
        n = self.rep_dim or 0
        return _combine(coords, self.action, n)

    def _check_brackets(self):
        m = self.lie_dim
        b = self.brackets
        if len(b) != m or any(len(row) != m for row in b):
            raise ValueError("structure constants must form a dim x dim table")
        for x in range(m):
            for y in range(m):
                ax, ay = self.action[x], self.action[y]
                comm = RationalMatrix(
                    [[p - q for p, q in zip(r1, r2)] for r1, r2 in zip((ax @ ay).rows, (ay @ ax).rows)],
                    ncols=ax.ncols,
                )
                if comm != self.element(b[x][y]):
                    raise ValueError(f"action does not respect the bracket [{x}, {y}]")


@dataclass(frozen=True)
class FilteredRep:
    w_dim: int
    lie: LieFiltrationData
    mf: MultiFiltration

    def __post_init__(self):
        if self.mf.ambient_dim != self.w_dim:
            raise ValueError("filtrations do not live on W")
        if self.lie.rep_dim not in (None, self.w_dim):
            raise ValueError("action matrices do not act on W")
        if set(self.lie.lie_levels) != set(self.mf.rays):
            raise ValueError("Lie filtrations and W filtrations use different ray sets")


@dataclass(frozen=True)
class ConditionCResult:
    ok: bool
    violations: tuple = ()  # (ray, i, j, lie element coords, witness vector in W)

    def __bool__(self):
        return self.ok


def check_condition_C(rep: FilteredRep) -> ConditionCResult:
    """Check ``F^i(Lie) x F^j(W) -> F^(i+j)(W)`` for every ray.

    Only jump levels on both sides need testing: ``F^i(Lie)`` is constant
    between its jumps while the target shrinks as ``i`` grows.
    """
    violations = []
    for ray in rep.mf.rays:
        lf, wf = rep.lie.lie_levels[ray], rep.mf[ray]
        for i in lf.levels:
            elems = lf.level(i).basis
            for j in wf.levels:
                target = wf.level(i + j)
                for xi in elems:
                    op = rep.lie.element(xi)
                    for w in wf.level(j).basis:
                        if op.apply(w) not in target:
                            violations.append((ray, i, j, xi, w))
    return ConditionCResult(not violations, tuple(violations))


def pgl2_preset(w_dim: int, action, filtration: Filtration) -> FilteredRep:
    """Single ray, one-dimensional Lie algebra filtered with its only jump at -1."""
    a = action if isinstance(action, RationalMatrix) else RationalMatrix(action, ncols=w_dim)
    lie = LieFiltrationData(1, (a,), {PGL2_RAY: Filtration.trivial(1, -1)})
    return FilteredRep(w_dim, lie, MultiFiltration(w_dim, {PGL2_RAY: filtration}))


def lowers_by_one(action: RationalMatrix, filtration: Filtration) -> bool:
    """Does the operator send ``F^i`` into ``F^(i-1)`` for all ``i``?"""
    return all(filtration.level(d).image(action) <= filtration.level(d - 1) for d in filtration.levels)


def category_hom(a: FilteredRep, b: FilteredRep) -> tuple[int, list[RationalMatrix]]:
    """Lie-equivariant maps ``W_a -> W_b`` preserving every ray filtration.

    Returns the dimension and a basis of ``b.w_dim x a.w_dim`` matrices.
    """
    if a.lie.lie_dim != b.lie.lie_dim or set(a.mf.rays) != set(b.mf.rays):
        raise ValueError("objects are filtered over different Lie data")
    if a.lie.lie_levels != b.lie.lie_levels:
        raise ValueError("objects use differently filtered Lie algebras")
    n, m = a.w_dim, b.w_dim
    if n == 0 or m == 0:
        return 0, []
    rows = []
    # phi A - B phi = 0, with phi flattened row-major (index r * n + c)
    for xa, xb in zip(a.lie.action, b.lie.action):
        for r in range(m):
            for c in range(n):
                row = [0] * (m * n)
                for k in range(n):
                    row[r * n + k] += xa[k, c]
                for k in range(m):
                    row[k * n + c] -= xb[r, k]
                rows.append(row)
    for ray in a.mf.rays:
        rows.extend(preservation_constraints(a.mf[ray], b.mf[ray]))
    ker = solve_linear(RationalMatrix(rows, ncols=m * n))
    basis = [RationalMatrix([v[r * n:(r + 1) * n] for r in range(m)], ncols=n) for v in ker.basis]
    return ker.dim, basis


@dataclass(frozen=True)
class LatticeInclusion:
    """Sublattice given by generator columns in a basis of the ambient lattice."""

    generators: IntegerMatrix

    def __post_init__(self):
        g = self.generators
        if not isinstance(g, IntegerMatrix):
            g = IntegerMatrix(g)
            object.__setattr__(self, "generators", g)
        if g.to_rational().rank() != g.ncols:
            raise ValueError("generator columns are linearly dependent")


def is_neutralizable(inc: LatticeInclusion) -> tuple[bool, list[int]]:
    """Direct-summand test: every elementary divisor must be 1."""
    _, d, _ = smith_normal_form(inc.generators)
    divisors = [d[i, i] for i in range(min(d.shape)) if d[i, i]]
    return all(x == 1 for x in divisors), divisors
