"""Problem-file dispatch: one JSON problem in, one :class:`Report` out."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import serialize as ser
from .filtration import FailureReport, check_condition_K
from .klyachko_bundle import (
    UnboundedSectionsError,
    build_charts,
    build_transitions,
    check_cocycle,
    check_regularity,
    global_sections,
)
from .rees import fiber_at_one, fiber_at_zero, filtered_hom_dim, graded_hom_dim, rees
from .spherical import (
    category_hom,
    check_condition_C,
    is_neutralizable,
    lowers_by_one,
    pgl2_preset,
)

KINDS = ("condition-k", "condition-c", "rees", "hom", "neutralizable", "bundle", "sections")

EXIT_CODES = {"pass": 0, "fail": 1, "invalid": 2, "indeterminate": 3}


@dataclass
class Report:
    verdict: str
    kind: str | None = None
    witnesses: dict = field(default_factory=dict)
    timing_ms: int = 0
    source: str = ""
    error: str | None = None

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]

    def to_json(self) -> dict:
        out = {"source": self.source, "kind": self.kind, "verdict": self.verdict, "witnesses": self.witnesses,
               "timing_ms": self.timing_ms}
        if self.error:
            out["error"] = self.error
        return out


def _verdict(ok: bool) -> str:
    return "pass" if ok else "fail"


def _condition_k(p):
    dim = ser._int(ser._get(p, "dim", "payload"), "payload.dim")
    mf = ser.filtrations_from_json(ser._get(p, "filtrations", "payload"), dim, "payload.filtrations")
    if "fan" in p:
        cones = [list(c.ray_ids) for c in ser.fan_from_json(p["fan"], "payload.fan").maximal_cones]
    else:
        cones = [[str(r) for r in ser._list(c, f"payload.cones[{i}]")]
                 for i, c in enumerate(ser._list(ser._get(p, "cones", "payload"), "payload.cones"))]
    results, verdict = [], "pass"
    for i, cone in enumerate(cones):
        for r in cone:
            if r not in mf.per_ray:
                raise ser.SchemaError(f"payload.cones[{i}]", f"unknown ray identifier {r!r}")
        g = check_condition_K(mf, cone)
        if isinstance(g, FailureReport):
            state = "indeterminate" if g.indeterminate else "fail"
            results.append({"cone": cone, "verdict": state, "failure": ser.failure_to_json(g)})
            verdict = max(verdict, state, key=EXIT_CODES.get)
        else:
            results.append({"cone": cone, "verdict": "pass", "grading": ser.grading_to_json(g)})
    return verdict, {"cones": results}


def _condition_c(p):
    if p.get("preset") == "pgl2":
        w_dim = ser._int(ser._get(p, "w_dim", "payload"), "payload.w_dim")
        action = ser.matrix_from_json(ser._get(p, "action", "payload"), "payload.action", ncols=w_dim)
        if action.nrows != w_dim:
            raise ser.SchemaError("payload.action", f"expected a {w_dim}x{w_dim} matrix")
        filt = ser.filtration_from_json(ser._get(p, "filtration", "payload"), "payload.filtration", w_dim)
        rep = pgl2_preset(w_dim, action, filt)
        direct = lowers_by_one(action, filt)
    elif "preset" in p:
        raise ser.SchemaError("payload.preset", f"unknown preset {p['preset']!r}")
    else:
        rep = ser.rep_from_json(p, "payload")
        direct = None
    res = check_condition_C(rep)
    wit = {
        "violations": [
            {"ray": r, "lie_level": i, "w_level": j, "lie_element": ser.vector_to_json(x), "witness": ser.vector_to_json(w)}
            for r, i, j, x, w in res.violations
        ],
        "rays_checked": list(rep.mf.rays),
    }
    if direct is not None:
        wit["lowers_by_one"] = direct
    return _verdict(res.ok), wit


def _rees(p):
    if "filtration" in p:
        f = ser.filtration_from_json(p["filtration"], "payload.filtration")
        m, basis = rees(f.ambient_dim, f)
        back = fiber_at_one(m, basis)
        return _verdict(back == f), {
            "module": ser.module_to_json(m, basis),
            "associated_graded": {str(k): v for k, v in fiber_at_zero(m).items()},
            "round_trip": back == f,
        }
    m, basis = ser.module_from_json(ser._get(p, "module", "payload"), "payload.module")
    if basis.nrows != m.rank:
        raise ser.SchemaError("payload.module.basis", "one basis row per generator is required")
    try:
        f = fiber_at_one(m, basis)
    except ValueError as e:
        raise ser.SchemaError("payload.module.basis", str(e)) from None
    return "pass", {"filtration": ser.filtration_to_json(f)}


def _hom(p):
    src, tgt = ser._get(p, "source", "payload"), ser._get(p, "target", "payload")
    if isinstance(src, dict) and "w_dim" in src:
        a, b = ser.rep_from_json(src, "payload.source"), ser.rep_from_json(tgt, "payload.target")
        try:
            dim, basis = category_hom(a, b)
        except ValueError as e:
            raise ser.SchemaError("payload", str(e)) from None
        return "pass", {"dim": dim, "basis": [ser.matrix_to_json(m) for m in basis]}
    f = ser.filtration_from_json(src, "payload.source")
    g = ser.filtration_from_json(tgt, "payload.target")
    fd = filtered_hom_dim(f, g)
    gd = graded_hom_dim(rees(f.ambient_dim, f)[0], rees(g.ambient_dim, g)[0])
    return _verdict(fd == gd), {"filtered_hom_dim": fd, "graded_hom_dim": gd}


def _neutralizable(p):
    inc = ser.inclusion_from_json(ser._get(p, "generators", "payload"), "payload.generators")
    ok, divisors = is_neutralizable(inc)
    return _verdict(ok), {"neutralizable": ok, "divisors": divisors}


def _bundle_inputs(p):
    fan = ser.fan_from_json(ser._get(p, "fan", "payload"), "payload.fan")
    dim = ser._int(ser._get(p, "dim", "payload"), "payload.dim")
    mf = ser.filtrations_from_json(ser._get(p, "filtrations", "payload"), dim, "payload.filtrations")
    missing = set(fan.ray_ids) - set(mf.rays)
    if missing:
        raise ser.SchemaError("payload.filtrations", f"no filtration for rays {sorted(missing)}")
    return fan, mf


def _bundle(p):
    fan, mf = _bundle_inputs(p)
    try:
        charts = build_charts(fan, mf)
    except ValueError as e:
        raise ser.SchemaError("payload.fan", str(e)) from None
    if isinstance(charts, FailureReport):
        state = "indeterminate" if charts.indeterminate else "fail"
        return state, {"charts": None, "failure": ser.failure_to_json(charts), "transitions": [],
                       "cocycle": False, "regular": False, "h0": None}
    transitions = build_transitions(charts)
    cocycle = check_cocycle(transitions)
    reg = check_regularity(fan, transitions)
    try:
        h0 = global_sections(fan, mf)[0]
    except UnboundedSectionsError:
        h0 = None
    wit = {
        "charts": [
            {"cone": list(c.cone.ray_ids), "characters": [list(x) for x in c.characters],
             "grading": ser.grading_to_json(c.grading)}
            for c in charts
        ],
        "transitions": [
            {"source": list(t.source_cone.ray_ids), "target": list(t.target_cone.ray_ids),
             "coefficients": ser.matrix_to_json(t.coefficients),
             "characters": [[list(c) for c in row] for row in t.characters]}
            for t in transitions
        ],
        "cocycle": cocycle,
        "regular": reg.ok,
        "regularity_violations": [
            {"source": list(s.ray_ids), "target": list(t.ray_ids), "entry": list(e), "character": list(c)}
            for (s, t), e, c in reg.violations
        ],
        "h0": h0,
    }
    return _verdict(cocycle and reg.ok), wit


def _sections(p):
    fan, mf = _bundle_inputs(p)
    try:
        h0, chars = global_sections(fan, mf)
    except UnboundedSectionsError as e:
        return "fail", {"error": str(e), "h0": None}
    return "pass", {"h0": h0, "characters": [{"character": list(c), "dim": d} for c, d in chars]}


_HANDLERS = {
    "condition-k": _condition_k,
    "condition-c": _condition_c,
    "rees": _rees,
    "hom": _hom,
    "neutralizable": _neutralizable,
    "bundle": _bundle,
    "sections": _sections,
}


def solve(problem: dict, source: str = "") -> Report:
    """Dispatch a parsed problem; schema errors become ``invalid`` reports."""
    start = time.perf_counter_ns()
    kind = problem.get("kind") if isinstance(problem, dict) else None
    try:
        if not isinstance(problem, dict):
            raise ser.SchemaError("$", "problem must be a JSON object")
        if kind not in _HANDLERS:
            raise ser.SchemaError("kind", f"expected one of {', '.join(KINDS)}, got {kind!r}")
        payload = ser._get(problem, "payload", "$")
        if not isinstance(payload, dict):
            raise ser.SchemaError("payload", "expected an object")
        verdict, wit = _HANDLERS[kind](payload)
        report = Report(verdict, kind, wit, source=source)
    except ser.SchemaError as e:
        report = Report("invalid", kind, {}, source=source, error=str(e))
    except ValueError as e:
        report = Report("invalid", kind, {}, source=source, error=f"payload: {e}")
    report.timing_ms = (time.perf_counter_ns() - start) // 1_000_000
    return report


def run_file(path) -> Report:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        return Report("invalid", None, {}, source=str(path), error=f"cannot read file: {e.strerror}")
    try:
        problem = json.loads(text)
    except json.JSONDecodeError as e:
        return Report("invalid", None, {}, source=str(path),
                      error=f"malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}")
    return solve(problem, source=str(path))
