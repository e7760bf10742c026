"""JSON encodings of the library's values.

Rationals travel as strings ``"p/q"`` (``"p"`` for integers); matrices as
row-major lists of such strings.  Every ``*_from_json`` raises
:class:`SchemaError` naming the offending field.
"""

from __future__ import annotations

from fractions import Fraction

from .exact_linalg import IntegerMatrix, RationalMatrix, Subspace, format_rational, to_rational
from .fan import Cone, Fan, Ray
from .filtration import FailureReport, Filtration, Grading, MultiFiltration
from .rees import GradedFreeModule
from .spherical import FilteredRep, LatticeInclusion, LieFiltrationData


class SchemaError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _get(obj, key, path):
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    if key not in obj:
        raise SchemaError(f"{path}.{key}", "missing field")
    return obj[key]


def _int(x, path) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(path, f"expected an integer, got {x!r}")
    return x


def _rational(x, path) -> Fraction:
    if isinstance(x, (bool, float)):
        raise SchemaError(path, f"expected an exact rational (int or 'p/q' string), got {x!r}")
    try:
        return to_rational(x)
    except (TypeError, ValueError, ZeroDivisionError):
        raise SchemaError(path, f"not an exact rational: {x!r}") from None


def _list(x, path) -> list:
    if not isinstance(x, list):
        raise SchemaError(path, "expected a list")
    return x


# values -> JSON

def rational_to_json(q) -> str:
    return format_rational(q)


def vector_to_json(v) -> list[str]:
    return [format_rational(x) for x in v]


def matrix_to_json(m) -> list[list[str]]:
    return [vector_to_json(r) for r in m.rows]


def subspace_to_json(s: Subspace) -> list[list[str]]:
    return [vector_to_json(v) for v in s.basis]


def filtration_to_json(f: Filtration) -> dict:
    return {
        "dim": f.ambient_dim,
        "steps": [{"level": l, "basis": subspace_to_json(s)} for l, s in f.steps],
    }


def multifiltration_to_json(mf: MultiFiltration) -> dict:
    return {"dim": mf.ambient_dim, "filtrations": {r: filtration_to_json(f) for r, f in mf.per_ray.items()}}


def grading_to_json(g: Grading) -> dict:
    return {
        "rays": list(g.rays),
        "pieces": [{"tuple": list(t), "basis": subspace_to_json(s)} for t, s in g.pieces],
    }


def failure_to_json(r: FailureReport) -> dict:
    out = {
        "cone": list(r.cone_rays),
        "dim": r.ambient_dim,
        "total_piece_dim": r.total,
        "piece_dims": [{"tuple": list(t), "dim": d} for t, d in sorted(r.piece_dims.items())],
        "summary": r.summary(),
    }
    if r.indeterminate:
        out["indeterminate"] = True
    return out


def fan_to_json(fan: Fan) -> dict:
    return {
        "rank": fan.rank,
        "rays": [{"id": r.id, "gen": list(r.generator)} for r in fan.rays],
        "maximal_cones": [list(c.ray_ids) for c in fan.maximal_cones],
    }


def module_to_json(m: GradedFreeModule, basis: RationalMatrix) -> dict:
    return {"levels": list(m.levels), "basis": matrix_to_json(basis)}


# JSON -> values

def vector_from_json(obj, path="vector") -> tuple[Fraction, ...]:
    return tuple(_rational(x, f"{path}[{i}]") for i, x in enumerate(_list(obj, path)))


def matrix_from_json(obj, path="matrix", ncols: int | None = None) -> RationalMatrix:
    rows = [vector_from_json(r, f"{path}[{i}]") for i, r in enumerate(_list(obj, path))]
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    for i, r in enumerate(rows):
        if len(r) != width:
            raise SchemaError(f"{path}[{i}]", f"expected {width} entries, got {len(r)}")
    return RationalMatrix(rows, ncols=width)


def integer_matrix_from_json(obj, path="matrix") -> IntegerMatrix:
    rows = []
    for i, r in enumerate(_list(obj, path)):
        rows.append([_int(x, f"{path}[{i}][{j}]") for j, x in enumerate(_list(r, f"{path}[{i}]"))])
    width = len(rows[0]) if rows else 0
    for i, r in enumerate(rows):
        if len(r) != width:
            raise SchemaError(f"{path}[{i}]", f"expected {width} entries, got {len(r)}")
    return IntegerMatrix(rows, ncols=width)


def filtration_from_json(obj, path="filtration", dim: int | None = None) -> Filtration:
    n = _int(_get(obj, "dim", path), f"{path}.dim")
    if n < 0:
        raise SchemaError(f"{path}.dim", "dimension must be non-negative")
    if dim is not None and n != dim:
        raise SchemaError(f"{path}.dim", f"expected dimension {dim}, got {n}")
    steps = []
    for i, st in enumerate(_list(obj.get("steps", []), f"{path}.steps")):
        p = f"{path}.steps[{i}]"
        level = _int(_get(st, "level", p), f"{p}.level")
        basis = matrix_from_json(_get(st, "basis", p), f"{p}.basis", ncols=n)
        steps.append((level, Subspace(n, basis.rows)))
    try:
        return Filtration(n, steps)
    except ValueError as e:
        raise SchemaError(path, str(e)) from None


def filtrations_from_json(obj, dim: int, path="filtrations") -> MultiFiltration:
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object keyed by ray identifier")
    return MultiFiltration(
        dim, {str(k): filtration_from_json(v, f"{path}.{k}", dim) for k, v in obj.items()}
    )


def fan_from_json(obj, path="fan") -> Fan:
    rank = _int(_get(obj, "rank", path), f"{path}.rank")
    rays = []
    for i, r in enumerate(_list(_get(obj, "rays", path), f"{path}.rays")):
        p = f"{path}.rays[{i}]"
        gen = [_int(x, f"{p}.gen[{j}]") for j, x in enumerate(_list(_get(r, "gen", p), f"{p}.gen"))]
        try:
            rays.append(Ray(str(_get(r, "id", p)), tuple(gen)))
        except ValueError as e:
            raise SchemaError(p, str(e)) from None
    cones = []
    for i, c in enumerate(_list(_get(obj, "maximal_cones", path), f"{path}.maximal_cones")):
        cones.append(Cone(tuple(str(x) for x in _list(c, f"{path}.maximal_cones[{i}]"))))
    try:
        return Fan(rank, rays, cones)
    except ValueError as e:
        raise SchemaError(path, str(e)) from None


def module_from_json(obj, path="module") -> tuple[GradedFreeModule, RationalMatrix]:
    levels = [_int(x, f"{path}.levels[{i}]") for i, x in enumerate(_list(_get(obj, "levels", path), f"{path}.levels"))]
    basis = matrix_from_json(_get(obj, "basis", path), f"{path}.basis")
    if basis.nrows and basis.ncols != basis.nrows:
        raise SchemaError(f"{path}.basis", "adapted basis must be square")
    return GradedFreeModule(tuple(levels)), basis


def rep_from_json(obj, path="rep") -> FilteredRep:
    w_dim = _int(_get(obj, "w_dim", path), f"{path}.w_dim")
    lie = _get(obj, "lie", path)
    lp = f"{path}.lie"
    m = _int(_get(lie, "dim", lp), f"{lp}.dim")
    action = tuple(
        matrix_from_json(a, f"{lp}.action[{k}]", ncols=w_dim)
        for k, a in enumerate(_list(_get(lie, "action", lp), f"{lp}.action"))
    )
    levels_obj = _get(lie, "levels", lp)
    if not isinstance(levels_obj, dict):
        raise SchemaError(f"{lp}.levels", "expected an object keyed by ray identifier")
    levels = {str(k): filtration_from_json(v, f"{lp}.levels.{k}", m) for k, v in levels_obj.items()}
    brackets = None
    if "brackets" in lie:
        brackets = tuple(
            tuple(vector_from_json(c, f"{lp}.brackets[{a}][{b}]") for b, c in enumerate(_list(row, f"{lp}.brackets[{a}]")))
            for a, row in enumerate(_list(lie["brackets"], f"{lp}.brackets"))
        )
    mf = filtrations_from_json(_get(obj, "filtrations", path), w_dim, f"{path}.filtrations")
    try:
        return FilteredRep(w_dim, LieFiltrationData(m, action, levels, brackets), mf)
    except ValueError as e:
        raise SchemaError(path, str(e)) from None


def inclusion_from_json(obj, path="generators") -> LatticeInclusion:
    gens = integer_matrix_from_json(obj, path)
    try:
        return LatticeInclusion(gens)
    except ValueError as e:
        raise SchemaError(path, str(e)) from None
