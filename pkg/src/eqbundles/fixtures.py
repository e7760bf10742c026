"""Built-in problem files.

The neutralizability fixtures are standard homogeneous spherical
varieties, each given by its weight lattice as generator columns in a
basis of the Borel character lattice.  ``EXPECTED_VERDICTS`` records the
expected outcome of each.
"""

from __future__ import annotations

import copy
import json
from pathlib import Path


def _neutral(gens, description):
    return {"kind": "neutralizable", "description": description, "payload": {"generators": gens}}


def _line(vec):
    return [[str(x) for x in vec]]


def _pgl_v(n: int) -> dict:
    # chi_0 - chi_n = sum of the simple differences chi_i - chi_(i+1)
    return _neutral(
        [[1] for _ in range(n)],
        f"PGL(V) on P(V) x P(V*), dim V = {n + 1}: lattice spanned by chi_0 - chi_{n}",
    )


def _group_embedding(rank: int) -> dict:
    # characters of T x T trivial on the diagonal torus: (chi, -chi)
    cols = [[int(i == k) for k in range(rank)] + [-int(i == k) for k in range(rank)] for i in range(rank)]
    rows = [list(r) for r in zip(*cols)]
    return _neutral(rows, f"H x H acting on H, H of rank {rank}: anti-diagonal characters")


def _p1() -> dict:
    return {"rank": 1, "rays": [{"id": "+", "gen": [1]}, {"id": "-", "gen": [-1]}], "maximal_cones": [["+"], ["-"]]}


def _p1xp1() -> dict:
    return {
        "rank": 2,
        "rays": [
            {"id": "x+", "gen": [1, 0]},
            {"id": "x-", "gen": [-1, 0]},
            {"id": "y+", "gen": [0, 1]},
            {"id": "y-", "gen": [0, -1]},
        ],
        "maximal_cones": [["x+", "y+"], ["x-", "y+"], ["x-", "y-"], ["x+", "y-"]],
    }


def _jump(dim: int, level: int) -> dict:
    full = [[str(int(i == j)) for j in range(dim)] for i in range(dim)]
    return {"dim": dim, "steps": [{"level": level, "basis": full}]}


def _two_step(dim2_line, level_line: int, level_full: int) -> dict:
    return {
        "dim": 2,
        "steps": [
            {"level": level_full, "basis": [["1", "0"], ["0", "1"]]},
            {"level": level_line, "basis": _line(dim2_line)},
        ],
    }


FIXTURES: dict[str, dict] = {
    "gm-square": _neutral([[2]], "G_m acting on itself through t -> t^2: index 2"),
    "pgl2-mod-normalizer": _neutral([[2]], "PGL_2 / N(T): weight lattice of index 2"),
    "g-mod-u": _neutral([[1, 0], [0, 1]], "G / U, G of rank 2: the full character lattice of B"),
    "group-embedding": _group_embedding(2),
    **{f"pgl-v-n{n}": _pgl_v(n) for n in range(1, 5)},
    "three-lines": {
        "kind": "condition-k",
        "description": "three distinct lines in a plane, one per ray of a single cone",
        "payload": {
            "dim": 2,
            "filtrations": {
                "a": _two_step((1, 0), 1, 0),
                "b": _two_step((0, 1), 1, 0),
                "c": _two_step((1, 1), 1, 0),
            },
            "cones": [["a", "b", "c"]],
        },
    },
    "two-lines": {
        "kind": "condition-k",
        "description": "two distinct lines: always split",
        "payload": {
            "dim": 2,
            "filtrations": {"a": _two_step((1, 0), 1, 0), "b": _two_step((0, 1), 1, 0)},
            "cones": [["a", "b"]],
        },
    },
    "empty": {
        "kind": "condition-k",
        "description": "zero-dimensional space",
        "payload": {"dim": 0, "filtrations": {"a": {"dim": 0, "steps": []}}, "cones": [["a"]]},
    },
    "pgl2-raising": {
        "kind": "condition-c",
        "description": "PGL_2 on P1 x P1: xi e1 = e2, e1 at level 1, e2 at level 0",
        "payload": {
            "preset": "pgl2",
            "w_dim": 2,
            "action": [["0", "0"], ["1", "0"]],
            "filtration": _two_step((1, 0), 1, 0),
        },
    },
    "pgl2-lowering": {
        "kind": "condition-c",
        "description": "PGL_2 on P1 x P1: xi e2 = e1 with e2 at level 2, e1 at level 0",
        "payload": {
            "preset": "pgl2",
            "w_dim": 2,
            "action": [["0", "1"], ["0", "0"]],
            "filtration": _two_step((0, 1), 2, 0),
        },
    },
    "rees-two-jumps": {
        "kind": "rees",
        "description": "jumps at 0 and 2",
        "payload": {"filtration": _two_step((0, 1), 2, 0)},
    },
    "hom-level-shift": {
        "kind": "hom",
        "description": "line at level 0 into line at level 1",
        "payload": {"source": _jump(1, 0), "target": _jump(1, 1)},
    },
    "p1-line-bundle": {
        "kind": "sections",
        "description": "O(3) on P1",
        "payload": {"fan": _p1(), "dim": 1, "filtrations": {"+": _jump(1, 3), "-": _jump(1, 0)}},
    },
    "p1xp1-rank1": {
        "kind": "bundle",
        "description": "O(2, 1) on P1 x P1",
        "payload": {
            "fan": _p1xp1(),
            "dim": 1,
            "filtrations": {"x+": _jump(1, 2), "x-": _jump(1, 0), "y+": _jump(1, 1), "y-": _jump(1, 0)},
        },
    },
    "p1xp1-rank2": {
        "kind": "bundle",
        "description": "rank 2 on P1 x P1 with three distinct special lines",
        "payload": {
            "fan": _p1xp1(),
            "dim": 2,
            "filtrations": {
                "x+": _two_step((1, 0), 1, 0),
                "x-": _two_step((0, 1), 1, 0),
                "y+": _two_step((1, 1), 2, 0),
                "y-": _jump(2, 0),
            },
        },
    },
}

# expected verdicts for the examples and non-examples of neutralizability
EXPECTED_VERDICTS: dict[str, str] = {
    "gm-square": "fail",
    "pgl2-mod-normalizer": "fail",
    "g-mod-u": "pass",
    "group-embedding": "pass",
    **{f"pgl-v-n{n}": "pass" for n in range(1, 5)},
}


def get_fixture(name: str) -> dict:
    try:
        return copy.deepcopy(FIXTURES[name])
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}") from None


def write_fixtures(directory, names=None) -> list[Path]:
    """Dump fixtures as ``<name>.json`` problem files."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for name in names or sorted(FIXTURES):
        p = out / f"{name}.json"
        p.write_text(json.dumps(get_fixture(name), indent=2) + "\n")
        paths.append(p)
    return paths
