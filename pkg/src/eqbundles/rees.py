"""Rees construction: filtrations versus graded free modules over k[t].

A graded free module is recorded by the *levels* of its generators: a
generator of level ``d`` realises a jump of the filtration at ``d``.  The
``t``-degree sign convention never appears outside this bookkeeping.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .exact_linalg import RationalMatrix, Subspace, solve_linear
from .filtration import Filtration, preservation_constraints

__all__ = [
    "GradedFreeModule",
    "GradedModuleMap",
    "rees",
    "fiber_at_one",
    "fiber_at_zero",
    "graded_hom_dim",
    "filtered_hom_dim",
    "tensor_module",
]


@dataclass(frozen=True, eq=False)
class GradedFreeModule:
    """Free graded module; ``levels[k]`` is the level of generator ``k``.

    Equality is equality of level multisets.
    """

    levels: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(int(x) for x in self.levels))

    @property
    def rank(self) -> int:
        return len(self.levels)

    def multiset(self) -> Counter:
        return Counter(self.levels)

    def __eq__(self, other):
        if not isinstance(other, GradedFreeModule):
            return NotImplemented
        return sorted(self.levels) == sorted(other.levels)

    def __hash__(self):
        return hash(tuple(sorted(self.levels)))


@dataclass(frozen=True)
class GradedModuleMap:
    """Degree-zero map; ``coefficients[i, j]`` sends source generator ``j``
    to a multiple of target generator ``i`` and may be nonzero only when
    ``target.levels[i] >= source.levels[j]``."""

    source: GradedFreeModule
    target: GradedFreeModule
    coefficients: RationalMatrix

    def __post_init__(self):
        if self.coefficients.shape != (self.target.rank, self.source.rank):
            raise ValueError("coefficient matrix has the wrong shape")
        for i, lt in enumerate(self.target.levels):
            for j, ls in enumerate(self.source.levels):
                if lt < ls and self.coefficients[i, j] != 0:
                    raise ValueError(f"entry ({i}, {j}) would lower the level from {ls} to {lt}")

    def __matmul__(self, other: "GradedModuleMap") -> "GradedModuleMap":
        if other.target != self.source:
            raise ValueError("maps are not composable")
        return GradedModuleMap(other.source, self.target, self.coefficients @ other.coefficients)


def rees(v_dim: int, f: Filtration) -> tuple[GradedFreeModule, RationalMatrix]:
    """Presented Rees module of ``f``: generator levels plus an adapted basis.

    Rows of the basis are listed from the top jump downwards; row ``k`` has
    level ``levels[k]``.
    """
    if f.ambient_dim != v_dim:
        raise ValueError(f"filtration has dimension {f.ambient_dim}, expected {v_dim}")
    rows: list[tuple] = []
    levels: list[int] = []
    current = Subspace.zero(v_dim)
    for d, space in reversed(f.steps):
        new = space.complement_basis(current)
        rows.extend(new)
        levels.extend([d] * len(new))
        current = space
    return GradedFreeModule(tuple(levels)), RationalMatrix(rows, ncols=v_dim)


def fiber_at_one(m: GradedFreeModule, adapted_basis: RationalMatrix) -> Filtration:
    """Filtration whose level-``d`` step is spanned by basis rows of level ``>= d``."""
    if adapted_basis.nrows != m.rank:
        raise ValueError("one basis row per generator is required")
    if m.rank == 0:
        return Filtration(adapted_basis.ncols)
    if not adapted_basis.is_square() or adapted_basis.rank() != m.rank:
        raise ValueError("adapted basis is singular")
    return Filtration.from_adapted_basis(adapted_basis.rows, m.levels)


def fiber_at_zero(m: GradedFreeModule) -> dict[int, int]:
    """Dimensions of the associated graded pieces, ``{level: dim}``."""
    return dict(sorted(Counter(m.levels).items()))


def graded_hom_dim(a: GradedFreeModule, b: GradedFreeModule) -> int:
    return sum(1 for lb in b.levels for la in a.levels if lb >= la)


def filtered_hom_dim(f: Filtration, g: Filtration) -> int:
    """Dimension of the space of linear maps with ``phi(F^i) <= G^i``."""
    n, m = f.ambient_dim, g.ambient_dim
    if n == 0 or m == 0:
        return 0
    cons = preservation_constraints(f, g)
    return solve_linear(RationalMatrix(cons, ncols=n * m)).dim


def tensor_module(a: GradedFreeModule, b: GradedFreeModule) -> GradedFreeModule:
    """Generator ``(i, j)`` has level ``a_i + b_j``, ordered to match the
    Kronecker product of presenting bases."""
    return GradedFreeModule(tuple(x + y for x in a.levels for y in b.levels))


def presented_tensor(
    a: tuple[GradedFreeModule, RationalMatrix], b: tuple[GradedFreeModule, RationalMatrix]
) -> tuple[GradedFreeModule, RationalMatrix]:
    return tensor_module(a[0], b[0]), a[1].kron(b[1])


def graded_hom_basis(a: GradedFreeModule, b: GradedFreeModule) -> list[GradedModuleMap]:
    """Elementary maps, one per allowed (target, source) generator pair."""
    out = []
    for i, lb in enumerate(b.levels):
        for j, la in enumerate(a.levels):
            if lb >= la:
                c = [[int(r == i and s == j) for s in range(a.rank)] for r in range(b.rank)]
                out.append(GradedModuleMap(a, b, RationalMatrix(c, ncols=a.rank)))
    return out

