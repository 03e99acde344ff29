"""Command line front end.

    flagflow run scenario.json [--format json|text] [--out PATH]
    flagflow describe --type A --rank 2 --parabolic ""
    flagflow selftest
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import __version__
from ._rational import as_rational
from .errors import FlagflowError
from .flag_manifold import build_flag
from .root_system import build_root_system
from .runner import describe_flag, flatten_text, render_json, render_text, run
from .scenario import ScenarioError, parse_scenario

EXIT_PARSE, EXIT_SEMANTIC = 2, 3

GOLDEN_FILES = (
    "c1_flag_fixture.json",
    "c2_tflat.json",
    "c3_flow_ode.json",
    "c4_balanced.json",
    "c5_holonomy.json",
)


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_run(args) -> int:
    try:
        document = Path(args.scenario).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {args.scenario}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        scenario = parse_scenario(document)
    except ScenarioError as exc:
        for e in exc.errors:
            print(f"{exc.kind} error: {e}", file=sys.stderr)
        return exc.exit_code
    report = run(scenario)
    _emit(render_text(report) if args.format == "text" else render_json(report), args.out)
    return report.exit_code


def _parse_indices(text: str) -> list[int]:
    return [int(tok) for tok in text.replace(",", " ").split()]


def cmd_describe(args) -> int:
    try:
        rs = build_root_system(args.type, args.rank)
        X = build_flag(rs, _parse_indices(args.parabolic))
        lam = as_rational(args.lam) if args.lam is not None else None
        value, problems = describe_flag(X, lam)
    except (FlagflowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    if args.format == "text":
        lines: list[str] = []
        flatten_text("", value, lines)
        lines += [f"  ERROR: {p}" for p in problems]
        _emit("\n".join(lines) + "\n", None)
    else:
        _emit(json.dumps({"describe": value, "errors": problems}, indent=2, ensure_ascii=False) + "\n", None)
    return 4 if problems else 0


def load_golden(name: str) -> list[dict]:
    text = resources.files("flagflow").joinpath("data", "golden", name).read_text(encoding="utf-8")
    return json.loads(text)


def selftest(stream=None) -> bool:
    """Re-run every golden scenario and compare reports field by field."""
    stream = stream or sys.stdout
    ok = True
    for name in GOLDEN_FILES:
        for case in load_golden(name):
            scenario = parse_scenario(json.dumps(case["scenario"]))
            got = json.loads(render_json(run(scenario)))
            passed = got == case["expected"]
            ok &= passed
            print(f"{'PASS' if passed else 'FAIL'}  {name}:{case['name']}", file=stream)
    print("selftest " + ("passed" if ok else "FAILED"), file=stream)
    return ok


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="flagflow", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"flagflow {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="run a JSON scenario")
    r.add_argument("scenario")
    r.add_argument("--format", choices=("json", "text"), default="json")
    r.add_argument("--out")
    r.set_defaults(func=cmd_run)

    d = sub.add_parser("describe", help="describe a flag manifold")
    d.add_argument("--type", required=True, help="family letter A..G")
    d.add_argument("--rank", required=True, type=int)
    d.add_argument("--parabolic", default="", help='simple-root indices, e.g. "2" or "1,3"')
    d.add_argument("--lambda", dest="lam", help="Einstein constant as p/q")
    d.add_argument("--format", choices=("json", "text"), default="json")
    d.set_defaults(func=cmd_describe)

    s = sub.add_parser("selftest", help="run the golden suite")
    s.set_defaults(func=lambda args: 0 if selftest() else 1)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
