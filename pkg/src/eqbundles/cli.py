"""Batch checker for JSON problem files.

Exit status: 0 pass, 1 fail, 2 invalid input, 3 indeterminate.  For a
directory the status is the maximum over its files.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .fixtures import FIXTURES, get_fixture, write_fixtures
from .problems import EXIT_CODES, Report, run_file, solve


def run(file_path) -> tuple[Report, int]:
    report = run_file(file_path)
    return report, report.exit_code


def run_suite(directory, parallel: bool = False) -> tuple[list[Report], int]:
    d = Path(directory)
    if not d.is_dir():
        raise NotADirectoryError(f"cannot read directory {directory}")
    files = sorted(d.glob("*.json"))
    if parallel and len(files) > 1:
        with ThreadPoolExecutor() as pool:
            reports = list(pool.map(run_file, files))
    else:
        reports = [run_file(f) for f in files]
    code = max((r.exit_code for r in reports), default=0)
    return reports, code


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def format_report(r: Report) -> str:
    rows = [("source", r.source or "-"), ("kind", r.kind or "-"), ("verdict", r.verdict)]
    if r.error:
        rows.append(("error", r.error))
    rows += [(k, _scalar(v)) for k, v in r.witnesses.items()]
    rows.append(("timing_ms", str(r.timing_ms)))
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def format_table(reports: list[Report], code: int) -> str:
    if not reports:
        return "0 cases, verdict pass"
    w_src = max(len(r.source) for r in reports)
    w_kind = max(len(r.kind or "-") for r in reports)
    lines = [f"{'file'.ljust(w_src)}  {'kind'.ljust(w_kind)}  verdict"]
    for r in reports:
        lines.append(f"{r.source.ljust(w_src)}  {(r.kind or '-').ljust(w_kind)}  {r.verdict}")
    verdict = next(k for k, v in EXIT_CODES.items() if v == code)
    lines.append(f"{len(reports)} cases, verdict {verdict}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eqbundles", description=__doc__.splitlines()[0])
    p.add_argument("path", nargs="?", help="problem file or directory of problem files")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.add_argument("--parallel", action="store_true", help="process suite files concurrently")
    p.add_argument("--fixture", metavar="NAME", help="run a built-in fixture")
    p.add_argument("--list-fixtures", action="store_true", help="list built-in fixture names")
    p.add_argument("--write-fixtures", metavar="DIR", help="write all built-in fixtures to DIR")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    if args.list_fixtures:
        for name in sorted(FIXTURES):
            print(f"{name:22s} {FIXTURES[name].get('description', '')}", file=out)
        return 0
    if args.write_fixtures:
        for path in write_fixtures(args.write_fixtures):
            print(path, file=out)
        return 0
    if args.fixture:
        try:
            problem = get_fixture(args.fixture)
        except KeyError as e:
            print(e.args[0], file=sys.stderr)
            return 2
        report = solve(problem, source=f"fixture:{args.fixture}")
        print(json.dumps(report.to_json(), indent=2) if args.json else format_report(report), file=out)
        return report.exit_code
    if not args.path:
        build_parser().print_usage(sys.stderr)
        return 2
    path = Path(args.path)
    if path.is_dir():
        try:
            reports, code = run_suite(path, parallel=args.parallel)
        except OSError as e:
            print(f"cannot read directory {path}: {e}", file=sys.stderr)
            return 2
        if args.json:
            verdict = next(k for k, v in EXIT_CODES.items() if v == code)
            print(json.dumps({"verdict": verdict, "cases": len(reports),
                              "reports": [r.to_json() for r in reports]}, indent=2), file=out)
        else:
            print(format_table(reports, code), file=out)
        return code
    report, code = run(path)
    print(json.dumps(report.to_json(), indent=2) if args.json else format_report(report), file=out)
    return code


if __name__ == "__main__":
    sys.exit(main())
