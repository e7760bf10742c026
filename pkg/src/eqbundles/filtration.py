"""Finite decreasing filtrations, multi-filtrations and Klyachko gradings.

A :class:`Filtration` is kept in *jump form*: the stored levels are exactly
the ``d`` with ``F^d != F^(d+1)``, and the first stored space is the whole
space.  ``F^i`` is the space stored at the smallest stored level ``>= i``,
and zero above the largest one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence

from .exact_linalg import RationalMatrix, Subspace, to_rational

__all__ = [
    "Filtration",
    "MultiFiltration",
    "Grading",
    "FailureReport",
    "filtration_level",
    "check_condition_K",
    "verify_grading",
    "tensor_filtration",
    "preservation_constraints",
]


def _as_subspace(dim: int, space) -> Subspace:
    if isinstance(space, Subspace):
        if space.ambient_dim != dim:
            raise ValueError(f"subspace lives in dimension {space.ambient_dim}, expected {dim}")
        return space
    return Subspace(dim, space)


class Filtration:
    """Decreasing finite filtration of ``Q^ambient_dim``.

    ``steps`` is a sequence of ``(level, space)`` pairs with strictly
    increasing levels and (weakly) decreasing spaces; a space may be a
    :class:`Subspace` or a list of spanning vectors.  Reading rule for the
    input: ``F^i`` is the whole space for ``i`` below the first listed
    level, the space listed at the first level ``>= i`` otherwise, and zero
    past the last listed level.  So ``[(1, L)]`` means ``F^0 = V``,
    ``F^1 = L``, ``F^2 = 0``.
    """

    __slots__ = ("ambient_dim", "steps")

    def __init__(self, ambient_dim: int, steps: Iterable[tuple[int, object]] = ()):
        raw = [(int(level), _as_subspace(ambient_dim, s)) for level, s in steps]
        for (l0, s0), (l1, s1) in zip(raw, raw[1:]):
            if l1 <= l0:
                raise ValueError("filtration levels must be strictly increasing")
            if not s1 <= s0:
                raise ValueError(f"filtration is not decreasing between levels {l0} and {l1}")
        if ambient_dim == 0:
            raw = []
        elif not raw:
            raise ValueError("a filtration of a nonzero space needs at least one step")
        else:
            full = Subspace.full(ambient_dim)
            if raw[0][1] != full:
                raw.insert(0, (raw[0][0] - 1, full))
        raw = [(l, s) for l, s in raw if not s.is_zero()]
        jumps = []
        for k, (level, space) in enumerate(raw):
            nxt = raw[k + 1][1] if k + 1 < len(raw) else None
            if space != nxt:
                jumps.append((level, space))
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "steps", tuple(jumps))

    def __setattr__(self, name, value):
        raise AttributeError("Filtration is immutable")

    @classmethod
    def trivial(cls, dim: int, level: int = 0) -> "Filtration":
        """Single jump: ``F^i = V`` for ``i <= level`` and zero above."""
        return cls(dim, [(level, Subspace.full(dim))] if dim else [])

    @classmethod
    def from_adapted_basis(cls, vectors: Sequence[Sequence], levels: Sequence[int]) -> "Filtration":
        """``F^d`` spanned by the vectors whose level is ``>= d``."""
        vectors = [tuple(to_rational(x) for x in v) for v in vectors]
        if len(vectors) != len(levels):
            raise ValueError("one level per basis vector is required")
        dim = len(vectors[0]) if vectors else 0
        if Subspace(dim, vectors).dim != len(vectors) or len(vectors) != dim:
            raise ValueError("adapted basis is singular")
        steps = []
        for d in sorted(set(levels)):
            steps.append((d, Subspace(dim, [v for v, l in zip(vectors, levels) if l >= d])))
        return cls(dim, steps)

    @property
    def levels(self) -> tuple[int, ...]:
        """Jump levels, increasing."""
        return tuple(l for l, _ in self.steps)

    def level(self, i: int) -> Subspace:
        for l, s in self.steps:
            if l >= i:
                return s
        return Subspace.zero(self.ambient_dim)

    __call__ = level

    def jump_dims(self) -> dict[int, int]:
        """``{d: dim F^d / F^(d+1)}`` over the jump levels."""
        out = {}
        for k, (l, s) in enumerate(self.steps):
            below = self.steps[k + 1][1].dim if k + 1 < len(self.steps) else 0
            out[l] = s.dim - below
        return out

    def transform(self, g: RationalMatrix) -> "Filtration":
        """Push forward along an invertible matrix acting on column vectors."""
        if g.shape != (self.ambient_dim, self.ambient_dim):
            raise ValueError("basis change must be a square matrix of the ambient size")
        return Filtration(self.ambient_dim, [(l, s.image(g)) for l, s in self.steps])

    def shift(self, k: int) -> "Filtration":
        """``G^i = F^(i-k)``: every jump moves up by ``k``."""
        return Filtration(self.ambient_dim, [(l + k, s) for l, s in self.steps])

    def __eq__(self, other):
        if not isinstance(other, Filtration):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.steps == other.steps

    def __hash__(self):
        return hash((self.ambient_dim, self.steps))

    def __repr__(self):
        inner = ", ".join(f"{l}: dim {s.dim}" for l, s in self.steps)
        return f"Filtration({self.ambient_dim}, {{{inner}}})"


def filtration_level(f: Filtration, i: int) -> Subspace:
    return f.level(i)


class MultiFiltration:
    """One filtration of a common space per ray identifier."""

    __slots__ = ("ambient_dim", "per_ray")

    def __init__(self, ambient_dim: int, per_ray: Mapping[str, Filtration]):
        per_ray = {str(k): v for k, v in per_ray.items()}
        for ray, f in per_ray.items():
            if f.ambient_dim != ambient_dim:
                raise ValueError(f"filtration for ray {ray!r} has dimension {f.ambient_dim}, expected {ambient_dim}")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "per_ray", dict(sorted(per_ray.items())))

    def __setattr__(self, name, value):
        raise AttributeError("MultiFiltration is immutable")

    @property
    def rays(self) -> tuple[str, ...]:
        return tuple(self.per_ray)

    def __getitem__(self, ray: str) -> Filtration:
        try:
            return self.per_ray[ray]
        except KeyError:
            raise KeyError(f"unknown ray identifier {ray!r}") from None

    def transform(self, g: RationalMatrix) -> "MultiFiltration":
        return MultiFiltration(self.ambient_dim, {r: f.transform(g) for r, f in self.per_ray.items()})

    def replace(self, ray: str, f: Filtration) -> "MultiFiltration":
        d = dict(self.per_ray)
        d[ray] = f
        return MultiFiltration(self.ambient_dim, d)

    def __eq__(self, other):
        if not isinstance(other, MultiFiltration):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.per_ray == other.per_ray

    def __hash__(self):
        return hash((self.ambient_dim, tuple(self.per_ray.items())))

    def __repr__(self):
        return f"MultiFiltration({self.ambient_dim}, {self.per_ray!r})"


@dataclass(frozen=True)
class Grading:
    """Direct-sum decomposition of ``Q^ambient_dim`` with one integer tuple
    per piece, indexed by ``rays``."""

    ambient_dim: int
    rays: tuple[str, ...]
    pieces: tuple[tuple[tuple[int, ...], Subspace], ...]

    def __post_init__(self):
        tuples = [t for t, _ in self.pieces]
        if len(set(tuples)) != len(tuples):
            raise ValueError("grading tuples must be distinct")
        for t, s in self.pieces:
            if len(t) != len(self.rays):
                raise ValueError("tuple length must match the number of rays")
            if s.ambient_dim != self.ambient_dim:
                raise ValueError("piece lives in the wrong ambient space")

    def is_direct_sum(self) -> bool:
        total = Subspace(self.ambient_dim, [v for _, s in self.pieces for v in s.basis])
        return total.is_full() and sum(s.dim for _, s in self.pieces) == self.ambient_dim

    def adapted_basis(self) -> tuple[list[tuple], list[tuple[int, ...]]]:
        """Basis vectors grouped by piece, with each vector's tuple."""
        vecs, tags = [], []
        for t, s in self.pieces:
            for v in s.basis:
                vecs.append(v)
                tags.append(t)
        return vecs, tags


@dataclass(frozen=True)
class FailureReport:
    """Why a cone has no compatible grading.

    ``piece_dims`` maps each grid tuple to its canonical piece dimension;
    ``total`` is their sum, which differs from ``ambient_dim`` on failure.
    ``indeterminate`` is set only if the count succeeded but the built
    grading failed re-verification.
    """

    cone_rays: tuple[str, ...]
    ambient_dim: int
    total: int
    piece_dims: dict = field(default_factory=dict, hash=False)
    indeterminate: bool = False
    cone: object = None

    def __bool__(self):
        return False

    def summary(self) -> str:
        if self.indeterminate:
            return f"indeterminate: dimension count {self.total} = {self.ambient_dim} but re-verification failed"
        rel = ">" if self.total > self.ambient_dim else "<"
        return f"sum of piece dimensions {self.total} {rel} dim {self.ambient_dim}"


def _grid_axes(mf: MultiFiltration, cone_rays: Sequence[str]) -> list[list[int]]:
    # stored jump levels plus one sentinel above the top, where F = 0
    axes = []
    for r in cone_rays:
        lv = list(mf[r].levels)
        axes.append(lv + [lv[-1] + 1])
    return axes


def check_condition_K(mf: MultiFiltration, cone_rays: Sequence[str]) -> Grading | FailureReport:
    """Find a grading of V inducing every listed ray's filtration.

    Works on the grid of jump-level tuples.  With ``U_p`` the intersection
    of ``F_a^(p_a)``, the piece at ``p`` is a complement of
    ``sum_i U_(p + delta_i)`` in ``U_p``.  These dimensions do not depend
    on the complements chosen, and a grading exists iff they add up to
    ``dim V``.  A returned grading has always been re-verified.
    """
    cone_rays = tuple(str(r) for r in cone_rays)
    for r in cone_rays:
        mf[r]  # raises on unknown ray
    n = mf.ambient_dim
    if n == 0:
        return Grading(0, cone_rays, ())
    if not cone_rays:
        g = Grading(n, (), (((), Subspace.full(n)),))
        return g
    axes = _grid_axes(mf, cone_rays)
    filts = [mf[r] for r in cone_rays]
    cache: dict[tuple[int, ...], Subspace] = {}

    def U(idx: tuple[int, ...]) -> Subspace:
        if idx not in cache:
            s = Subspace.full(n)
            for f, ax, k in zip(filts, axes, idx):
                s = s & f.level(ax[k])
                if s.is_zero():
                    break
            cache[idx] = s
        return cache[idx]

    pieces = []
    dims = {}
    for idx in product(*(range(len(ax) - 1) for ax in axes)):
        top = U(idx)
        if top.is_zero():
            continue
        above = Subspace.zero(n)
        for i in range(len(idx)):
            nxt = idx[:i] + (idx[i] + 1,) + idx[i + 1:]
            above = above + U(nxt)
        comp = top.complement_basis(above)
        tup = tuple(ax[k] for ax, k in zip(axes, idx))
        if comp:
            dims[tup] = len(comp)
            pieces.append((tup, Subspace(n, comp)))
    total = sum(dims.values())
    if total != n:
        return FailureReport(cone_rays, n, total, dims)
    grading = Grading(n, cone_rays, tuple(pieces))
    if not verify_grading(mf, cone_rays, grading):
        return FailureReport(cone_rays, n, total, dims, indeterminate=True)
    return grading


def verify_grading(mf: MultiFiltration, cone_rays: Sequence[str], g: Grading) -> bool:
    """Check ``g`` against the definition, independently of how it was built."""
    cone_rays = tuple(str(r) for r in cone_rays)
    n = mf.ambient_dim
    if g.ambient_dim != n:
        return False
    if not g.is_direct_sum():
        return False
    if set(cone_rays) - set(g.rays):
        return False
    for ray in cone_rays:
        f = mf[ray]
        k = g.rays.index(ray)
        coords = [t[k] for t, _ in g.pieces]
        probe = set(f.levels) | set(coords)
        probe |= {p + 1 for p in probe} | {p - 1 for p in probe}
        for p in sorted(probe):
            induced = Subspace(n, [v for t, s in g.pieces if t[k] >= p for v in s.basis])
            if induced != f.level(p):
                return False
    return True


def tensor_filtration(a: Filtration, b: Filtration) -> Filtration:
    """``F^k(V (x) W) = sum_(i+j=k) F^i(V) (x) F^j(W)`` in the Kronecker basis.

    Basis vector ``e_i (x) f_j`` has index ``i * dim W + j``.
    """
    n, m = a.ambient_dim, b.ambient_dim
    if n == 0 or m == 0:
        return Filtration(n * m)
    sums = sorted({x + y for x in a.levels for y in b.levels})
    steps = []
    for k in sums:
        vecs = []
        for x in a.levels:
            sb = b.level(k - x)
            for u in a.level(x).basis:
                for w in sb.basis:
                    vecs.append(tuple(p * q for p in u for q in w))
        steps.append((k, Subspace(n * m, vecs)))
    return Filtration(n * m, steps)


def preservation_constraints(src: Filtration, tgt: Filtration) -> list[list]:
    """Linear constraints on a map ``phi: src -> tgt`` saying
    ``phi(F^i) <= G^i`` for all ``i``.

    ``phi`` is a ``tgt_dim x src_dim`` matrix flattened row-major.  Only the
    jump levels of ``src`` bind: between jumps ``F^i`` is constant while
    ``G^i`` shrinks as ``i`` grows.
    """
    n, m = src.ambient_dim, tgt.ambient_dim
    rows = []
    for d in src.levels:
        ann = tgt.level(d).annihilator().basis
        for v in src.level(d).basis:
            for a in ann:
                rows.append([a[r] * v[c] for r in range(m) for c in range(n)])
    return rows
