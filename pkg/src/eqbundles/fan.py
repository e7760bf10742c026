"""Lattices, rays, cones and fans with exact integral data."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Sequence

from .exact_linalg import (
    IntegerMatrix,
    RationalMatrix,
    cone_combination,
    rref,
    smith_normal_form,
    solve_linear,
)

__all__ = [
    "Lattice",
    "Ray",
    "Cone",
    "Fan",
    "primitive_generator",
    "is_smooth_cone",
    "dual_cone_contains",
    "character_lift",
    "pairing",
]


def pairing(chi: Sequence[int], n: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(chi, n))


def primitive_generator(v: Sequence[int]) -> tuple[int, ...]:
    """First lattice point on the ray through ``v``."""
    v = tuple(int(x) for x in v)
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("the zero vector spans no ray")
    return tuple(x // g for x in v)


@dataclass(frozen=True)
class Lattice:
    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("lattice rank must be non-negative")


@dataclass(frozen=True)
class Ray:
    id: str
    generator: tuple[int, ...]

    def __post_init__(self):
        gen = tuple(int(x) for x in self.generator)
        object.__setattr__(self, "generator", gen)
        object.__setattr__(self, "id", str(self.id))
        if primitive_generator(gen) != gen:
            raise ValueError(f"ray {self.id!r}: generator {gen} is not primitive")


@dataclass(frozen=True)
class Cone:
    ray_ids: tuple[str, ...]

    def __post_init__(self):
        ids = tuple(str(r) for r in self.ray_ids)
        if len(set(ids)) != len(ids):
            raise ValueError("a cone lists each ray at most once")
        object.__setattr__(self, "ray_ids", ids)

    def __str__(self):
        return "<" + ",".join(self.ray_ids) + ">"


def _linearly_independent(vectors) -> bool:
    if not vectors:
        return True
    return len(rref(vectors, len(vectors[0]))[0]) == len(vectors)


class Fan:
    """A fan given by its rays and maximal cones.

    Validation: generators primitive and distinct, every cone strongly
    convex with its listed rays extremal, every ray used by some cone, and
    any two maximal cones meeting exactly in the cone on their shared rays.
    The last check is exact for simplicial cones.
    """

    __slots__ = ("lattice", "rays", "maximal_cones", "_gen")

    def __init__(self, lattice: Lattice | int, rays: Sequence[Ray], maximal_cones: Sequence[Cone | Sequence[str]]):
        if isinstance(lattice, int):
            lattice = Lattice(lattice)
        rays = tuple(rays)
        cones = tuple(c if isinstance(c, Cone) else Cone(tuple(c)) for c in maximal_cones)
        gen = {}
        for r in rays:
            if len(r.generator) != lattice.rank:
                raise ValueError(f"ray {r.id!r} has length {len(r.generator)}, lattice rank is {lattice.rank}")
            if r.id in gen:
                raise ValueError(f"duplicate ray identifier {r.id!r}")
            gen[r.id] = r.generator
        if len(set(gen.values())) != len(gen):
            raise ValueError("two rays share a generator")
        used = set()
        for c in cones:
            for rid in c.ray_ids:
                if rid not in gen:
                    raise ValueError(f"cone {c} uses unknown ray {rid!r}")
            used.update(c.ray_ids)
            _check_cone_shape(c, [gen[r] for r in c.ray_ids])
        if set(gen) - used:
            raise ValueError(f"rays {sorted(set(gen) - used)} lie in no maximal cone")
        for a, b in combinations(cones, 2):
            _check_meets_in_face(a, b, gen)
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "maximal_cones", cones)
        object.__setattr__(self, "_gen", gen)

    def __setattr__(self, name, value):
        raise AttributeError("Fan is immutable")

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @property
    def ray_ids(self) -> tuple[str, ...]:
        return tuple(r.id for r in self.rays)

    def generator(self, ray_id: str) -> tuple[int, ...]:
        return self._gen[ray_id]

    def generators(self, cone: Cone) -> list[tuple[int, ...]]:
        self._require(cone)
        return [self._gen[r] for r in cone.ray_ids]

    def overlap(self, a: Cone, b: Cone) -> Cone:
        """Cone on the shared rays, i.e. the intersection of two maximal cones."""
        return Cone(tuple(r for r in a.ray_ids if r in set(b.ray_ids)))

    def _require(self, cone: Cone) -> None:
        for r in cone.ray_ids:
            if r not in self._gen:
                raise ValueError(f"cone {cone} does not belong to this fan")

    def __repr__(self):
        cones = ", ".join(str(c) for c in self.maximal_cones)
        return f"Fan(rank={self.rank}, rays={len(self.rays)}, cones=[{cones}])"


def _check_cone_shape(cone: Cone, gens: list[tuple[int, ...]]) -> None:
    if _linearly_independent(gens):
        return
    for i, g in enumerate(gens):
        if cone_combination([-x for x in g], gens) is not None:
            raise ValueError(f"cone {cone} contains a line")
        others = gens[:i] + gens[i + 1:]
        if cone_combination(g, others) is not None:
            raise ValueError(f"ray {cone.ray_ids[i]!r} is not extremal in cone {cone}")


def _check_meets_in_face(a: Cone, b: Cone, gen: dict) -> None:
    # (x, y) >= 0 with sum x_i g_i = sum y_j h_j parametrises the intersection;
    # that cone is generated by its non-negative circuits.
    shared = set(a.ray_ids) & set(b.ray_ids)
    cols = [(r, gen[r], 1) for r in a.ray_ids] + [(r, gen[r], -1) for r in b.ray_ids]
    if not cols or not cols[0][1]:
        return
    dim = len(cols[0][1])
    shared_gens = [gen[r] for r in a.ray_ids if r in shared]
    for k in range(2, min(len(cols), dim + 1) + 1):
        for subset in combinations(range(len(cols)), k):
            mat = RationalMatrix(
                [[cols[c][1][row] * cols[c][2] for c in subset] for row in range(dim)], ncols=k
            )
            ker = solve_linear(mat)
            if ker.dim != 1:
                continue
            vec = ker.basis[0]
            if any(x == 0 for x in vec):
                continue
            if all(x < 0 for x in vec):
                vec = tuple(-x for x in vec)
            if not all(x > 0 for x in vec):
                continue
            if all(cols[c][0] in shared for c in subset):
                continue
            point = [sum(vec[i] * cols[c][1][row] for i, c in enumerate(subset) if cols[c][2] > 0) for row in range(dim)]
            if any(point) and cone_combination(point, shared_gens) is None:
                raise ValueError(f"cones {a} and {b} do not meet in a common face")


def _generator_matrix(fan: Fan, cone: Cone) -> IntegerMatrix:
    return IntegerMatrix(fan.generators(cone), ncols=fan.rank)


def is_smooth_cone(fan: Fan, cone: Cone) -> bool:
    """Ray generators extend to a lattice basis (all elementary divisors 1)."""
    gens = fan.generators(cone)
    if not gens:
        return True
    _, d, _ = smith_normal_form(_generator_matrix(fan, cone))
    return all(d[i, i] == 1 for i in range(len(gens)))


def dual_cone_contains(fan: Fan, cone: Cone, chi: Sequence[int]) -> bool:
    if len(chi) != fan.rank:
        raise ValueError("character length does not match lattice rank")
    return all(pairing(chi, g) >= 0 for g in fan.generators(cone))


def character_lift(fan: Fan, cone: Cone, values: Sequence[int]) -> tuple[int, ...]:
    """A character ``chi`` with ``<chi, n_a> = values[a]`` for each ray of ``cone``.

    Solves through the Smith form ``N = U D V`` of the generator matrix;
    coordinates of ``V chi`` beyond the cone's rays are set to zero.
    """
    gens = fan.generators(cone)
    if len(values) != len(gens):
        raise ValueError("one value per ray of the cone is required")
    r = fan.rank
    if not gens:
        return (0,) * r
    if not is_smooth_cone(fan, cone):
        raise ValueError(f"cone {cone} is not smooth")
    u, d, v = smith_normal_form(_generator_matrix(fan, cone))
    k = len(gens)
    y_head = u.to_rational().inverse().apply(values)
    y = list(y_head) + [Fraction(0)] * (r - k)
    chi = v.to_rational().inverse().apply(y)
    if any(x.denominator != 1 for x in chi):
        raise ValueError("inconsistent system: no integral character")
    chi = tuple(int(x) for x in chi)
    if [pairing(chi, g) for g in gens] != [int(x) for x in values]:
        raise ValueError("inconsistent system")
    return chi
