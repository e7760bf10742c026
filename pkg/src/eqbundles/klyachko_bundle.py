"""Chart and transition data for toric equivariant bundles given by
multi-filtrations.

Each maximal cone gets a chart: a grading of ``V`` from
:func:`~eqbundles.filtration.check_condition_K` with every piece's tuple
lifted to a character.  On the chart of ``sigma`` the local frame is
``s_j = x^(-chi_j) b_j`` for the adapted basis ``b``.  Going from chart
``sigma`` to chart ``tau``::

    s^sigma_j = sum_i T_ij x^(chi^tau_i - chi^sigma_j) s^tau_i

so the entry ``(i, j)`` carries the character ``chi_target(i) - chi_source(j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import floor
from typing import Sequence

from .exact_linalg import RationalMatrix, cone_combination
from .fan import Cone, Fan, character_lift, dual_cone_contains, is_smooth_cone, pairing
from .filtration import FailureReport, Grading, MultiFiltration, check_condition_K

__all__ = [
    "ChartData",
    "TransitionData",
    "RegularityResult",
    "UnboundedSectionsError",
    "build_charts",
    "build_transitions",
    "check_regularity",
    "check_cocycle",
    "global_sections",
    "bundle_report",
]

MAX_RANK = 3


@dataclass(frozen=True)
class ChartData:
    cone: Cone
    grading: Grading
    characters: tuple[tuple[int, ...], ...]  # one per grading piece
    adapted_basis: RationalMatrix  # rows grouped by piece

    @property
    def row_characters(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for (_, space), chi in zip(self.grading.pieces, self.characters):
            out.extend([chi] * space.dim)
        return tuple(out)


@dataclass(frozen=True)
class TransitionData:
    source_cone: Cone
    target_cone: Cone
    coefficients: RationalMatrix
    characters: tuple[tuple[tuple[int, ...], ...], ...]  # characters[i][j]

    def entry(self, i: int, j: int):
        return self.coefficients[i, j], self.characters[i][j]


@dataclass(frozen=True)
class RegularityResult:
    ok: bool
    violations: tuple = ()  # ((source, target), (i, j), character)

    def __bool__(self):
        return self.ok


class UnboundedSectionsError(ValueError):
    """The character region for sections is not bounded."""


def build_charts(fan: Fan, mf: MultiFiltration) -> list[ChartData] | FailureReport:
    """One chart per maximal cone, or the first cone's failure report."""
    if fan.rank > MAX_RANK:
        raise ValueError(f"bundle construction is limited to rank <= {MAX_RANK}")
    missing = set(fan.ray_ids) - set(mf.rays)
    if missing:
        raise ValueError(f"no filtration given for rays {sorted(missing)}")
    for cone in fan.maximal_cones:
        if not is_smooth_cone(fan, cone):
            raise ValueError(f"cone {cone} is not smooth")
    if mf.ambient_dim == 0:
        return []
    charts = []
    for cone in fan.maximal_cones:
        g = check_condition_K(mf, cone.ray_ids)
        if isinstance(g, FailureReport):
            return FailureReport(g.cone_rays, g.ambient_dim, g.total, g.piece_dims, g.indeterminate, cone)
        chars = tuple(character_lift(fan, cone, t) for t, _ in g.pieces)
        vecs, _ = g.adapted_basis()
        charts.append(ChartData(cone, g, chars, RationalMatrix(vecs, ncols=mf.ambient_dim)))
    return charts


def build_transitions(charts: Sequence[ChartData]) -> list[TransitionData]:
    """Change-of-basis data for every ordered pair of distinct charts."""
    out = []
    inverses = {}
    for c in charts:
        try:
            inverses[c.cone] = c.adapted_basis.T.inverse()
        except ZeroDivisionError:
            raise ValueError(f"adapted basis of chart {c.cone} is singular") from None
    for src, tgt in permutations(charts, 2):
        # columns of B^T are basis vectors: B_src^T = B_tgt^T T
        coeff = inverses[tgt.cone] @ src.adapted_basis.T
        ts, tt = src.row_characters, tgt.row_characters
        chars = tuple(
            tuple(tuple(a - b for a, b in zip(tt[i], ts[j])) for j in range(len(ts)))
            for i in range(len(tt))
        )
        out.append(TransitionData(src.cone, tgt.cone, coeff, chars))
    return out


def check_regularity(fan: Fan, transitions: Sequence[TransitionData]) -> RegularityResult:
    """Every nonzero entry's character must be regular on the overlap chart."""
    violations = []
    for t in transitions:
        overlap = fan.overlap(t.source_cone, t.target_cone)
        for i in range(t.coefficients.nrows):
            for j in range(t.coefficients.ncols):
                coef, chi = t.entry(i, j)
                if coef != 0 and not dual_cone_contains(fan, overlap, chi):
                    violations.append(((t.source_cone, t.target_cone), (i, j), chi))
    return RegularityResult(not violations, tuple(violations))


def check_cocycle(transitions: Sequence[TransitionData]) -> bool:
    """``T(s->u) = T(t->u) T(s->t)`` on coefficients and characters, for
    all ordered triples of distinct cones."""
    table = {(t.source_cone, t.target_cone): t for t in transitions}
    cones = sorted({c for pair in table for c in pair}, key=lambda c: c.ray_ids)
    for s, t, u in permutations(cones, 3):
        try:
            st, tu, su = table[s, t], table[t, u], table[s, u]
        except KeyError:
            continue
        if tu.coefficients @ st.coefficients != su.coefficients:
            return False
        for i in range(su.coefficients.nrows):
            for j in range(su.coefficients.ncols):
                for k in range(st.coefficients.nrows):
                    if tu.coefficients[i, k] and st.coefficients[k, j]:
                        composed = tuple(a + b for a, b in zip(tu.characters[i][k], st.characters[k][j]))
                        if composed != su.characters[i][j]:
                            return False
    return True


def _character_box(fan: Fan, caps: dict[str, int]) -> list[range]:
    # bound +-chi_k by writing +-e_k as a non-negative combination of rays
    ids = fan.ray_ids
    gens = [fan.generator(r) for r in ids]
    bounds = []
    for k in range(fan.rank):
        lim = []
        for sign in (1, -1):
            e = [sign * int(i == k) for i in range(fan.rank)]
            comb = cone_combination(e, gens)
            if comb is None:
                raise UnboundedSectionsError(
                    "rays do not positively span the lattice; the section space is not finite"
                )
            v = sum(c * caps[r] for c, r in zip(comb, ids))
            lim.append(v)
        hi = floor(lim[0])
        lo = -floor(lim[1])
        bounds.append(range(lo, hi + 1))
    return bounds


def global_sections(fan: Fan, mf: MultiFiltration) -> tuple[int, list[tuple[tuple[int, ...], int]]]:
    """``sum_chi dim of the intersection of F_a^<chi, n_a>`` over all rays.

    Returns the total and the characters contributing, with dimensions.
    """
    n = mf.ambient_dim
    if n == 0:
        return 0, []
    caps = {r: mf[r].levels[-1] for r in fan.ray_ids}
    box = _character_box(fan, caps)
    total = 0
    found = []
    for chi in product(*box):
        if any(pairing(chi, fan.generator(r)) > caps[r] for r in fan.ray_ids):
            continue
        space = None
        for r in fan.ray_ids:
            lvl = mf[r].level(pairing(chi, fan.generator(r)))
            space = lvl if space is None else space & lvl
            if space.is_zero():
                break
        if space.dim:
            total += space.dim
            found.append((tuple(chi), space.dim))
    return total, found


def bundle_report(fan: Fan, mf: MultiFiltration) -> dict:
    """Charts, transitions, cocycle and regularity verdicts, and h0."""
    charts = build_charts(fan, mf)
    if isinstance(charts, FailureReport):
        return {"charts": charts, "transitions": [], "cocycle": False, "regular": False, "h0": None}
    transitions = build_transitions(charts)
    try:
        h0 = global_sections(fan, mf)[0]
    except UnboundedSectionsError:
        h0 = None
    return {
        "charts": charts,
        "transitions": transitions,
        "cocycle": check_cocycle(transitions),
        "regular": bool(check_regularity(fan, transitions)),
        "h0": h0,
    }
