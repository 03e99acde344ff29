"""JSON scenario documents: parsing, validation and canonical serialization.

A scenario names a flag manifold, optionally a Kähler-Einstein constant and a
torus-bundle shape, and a list of queries::

    {"root_type": {"family": "A", "rank": 2}, "parabolic": [], "lambda": "1",
     "shape": "theorem_a", "k": 2, "fibers": [[-1, 1]],
     "queries": [{"kind": "tflat", "s": "0"}]}

Rationals are JSON strings ``"p/q"`` (JSON integers are also accepted);
floats are rejected.  Fiber weights are indexed by the complement simple
roots in ascending order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ._rational import as_rational, format_rational
from .bundle_flow import THEOREM_A, THEOREM_B, TorusBundleConfig, build_theorem_a, build_theorem_b
from .errors import FlagflowError
from .flag_manifold import FlagManifold, build_flag
from .invariant_geometry import ke_metric
from .picard import degree_functional
from .root_system import SimpleType, build_root_system

__all__ = [
    "QUERY_PARAMS",
    "Query",
    "Scenario",
    "ScenarioError",
    "parse_scenario",
    "scenario_to_dict",
    "serialize_scenario",
    "scenario_flag",
    "scenario_config",
]

# kind -> (required rational params, optional rational params, takes samples)
QUERY_PARAMS: dict[str, tuple[tuple[str, ...], tuple[str, ...], bool]] = {
    "describe": ((), (), False),
    "pic0": ((), (), False),
    "flow": (("s",), ("t",), False),
    "tflat": (("s",), (), False),
    "flat_time": (("t",), (), False),
    "balanced": (("s",), (), False),
    "ode_check": (("t", "s", "h"), (), False),
    "holonomy": ((), (), False),
    "gh_limit": ((), (), False),
    "cy_check": ((), (), False),
    "pluriclosed_report": ((), (), True),
}

TOP_KEYS = ("root_type", "parabolic", "lambda", "shape", "k", "fibers", "queries")
SYNTAX, SEMANTIC = "syntax", "semantic"


class ScenarioError(FlagflowError):
    """Every problem found in a scenario document, not just the first."""

    def __init__(self, kind: str, errors: list[str]):
        self.kind = kind
        self.errors = list(errors)
        super().__init__(f"{kind} error: " + "; ".join(self.errors))

    @property
    def exit_code(self) -> int:
        return 2 if self.kind == SYNTAX else 3


@dataclass(frozen=True)
class Query:
    kind: str
    s: Fraction | None = None
    t: Fraction | None = None
    h: Fraction | None = None
    samples: tuple[Fraction, ...] | None = None


@dataclass(frozen=True)
class Scenario:
    family: str
    rank: int
    parabolic: tuple[int, ...] = ()
    lam: Fraction | None = None
    shape: str | None = None
    k: int | None = None
    fibers: tuple[tuple[int, ...], ...] = ()
    queries: tuple[Query, ...] = field(default_factory=tuple)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _rational_field(value, path: str, errors: list[str]) -> Fraction | None:
    if isinstance(value, float):
        errors.append(f"{path}: floats are not exact; write a rational string like \"3/4\"")
        return None
    try:
        return as_rational(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        errors.append(f"{path}: not an exact rational ({exc})")
        return None


def _parse_query(raw, i: int, errors: list[str]) -> Query | None:
    path = f"queries[{i}]"
    if not isinstance(raw, dict):
        errors.append(f"{path}: expected an object")
        return None
    kind = raw.get("kind")
    if kind not in QUERY_PARAMS:
        errors.append(f"{path}.kind: unknown query kind {kind!r}")
        return None
    required, optional, takes_samples = QUERY_PARAMS[kind]
    allowed = {"kind", *required, *optional} | ({"samples"} if takes_samples else set())
    for key in sorted(set(raw) - allowed):
        errors.append(f"{path}.{key}: unknown key for query kind {kind!r}")
    values: dict[str, Any] = {}
    for name in required + optional:
        if name not in raw:
            if name in required:
                errors.append(f"{path}.{name}: missing required parameter")
            continue
        values[name] = _rational_field(raw[name], f"{path}.{name}", errors)
    if takes_samples:
        samples = raw.get("samples", [])
        if not isinstance(samples, list):
            errors.append(f"{path}.samples: expected a list")
            samples = []
        values["samples"] = tuple(
            _rational_field(x, f"{path}.samples[{j}]", errors) for j, x in enumerate(samples)
        )
    return Query(kind=kind, **values)


def parse_scenario(document: str) -> Scenario:
    """Parse and validate a scenario; raise :class:`ScenarioError` listing all problems."""
    if not document.strip():
        raise ScenarioError(SYNTAX, ["line 1 column 1: empty document"])
    try:
        raw = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ScenarioError(SYNTAX, [f"line {exc.lineno} column {exc.colno}: {exc.msg}"]) from None
    if not isinstance(raw, dict):
        raise ScenarioError(SYNTAX, ["top level: expected a JSON object"])

    errors: list[str] = []
    for key in sorted(set(raw) - set(TOP_KEYS)):
        errors.append(f"{key}: unknown key")

    rt = raw.get("root_type")
    family = rank = None
    if not isinstance(rt, dict) or set(rt) != {"family", "rank"}:
        errors.append('root_type: expected {"family": <letter>, "rank": <integer>}')
    else:
        family, rank = rt["family"], rt["rank"]
        try:
            SimpleType(family, rank)
        except FlagflowError as exc:
            errors.append(f"root_type: {exc}")
            family = rank = None

    parabolic = raw.get("parabolic", [])
    if not isinstance(parabolic, list) or not all(_is_int(i) for i in parabolic):
        errors.append("parabolic: expected a list of simple-root indices")
        parabolic = []
    elif len(set(parabolic)) != len(parabolic):
        errors.append("parabolic: repeated index")
    elif rank is not None:
        for j, i in enumerate(parabolic):
            if not 1 <= i <= rank:
                errors.append(f"parabolic[{j}]: index {i} out of range 1..{rank}")

    lam = None
    if "lambda" in raw:
        lam = _rational_field(raw["lambda"], "lambda", errors)
        if lam is not None and lam <= 0:
            errors.append(f"lambda: Einstein constant must be positive, got {format_rational(lam)}")

    shape = raw.get("shape")
    if shape not in (None, THEOREM_A, THEOREM_B):
        errors.append(f"shape: expected \"{THEOREM_A}\" or \"{THEOREM_B}\", got {shape!r}")
        shape = None
    if shape is not None and "lambda" not in raw:
        errors.append("lambda: required when a shape is given")

    k = raw.get("k")
    if k is not None and not _is_int(k):
        errors.append("k: expected an integer")
        k = None
    if shape == THEOREM_A and k is None and "k" not in raw:
        errors.append("k: required for theorem_a")
    if shape != THEOREM_A and "k" in raw:
        errors.append("k: only allowed with shape theorem_a")

    fibers = raw.get("fibers", [])
    if not isinstance(fibers, list) or not all(
        isinstance(f, list) and all(_is_int(x) for x in f) for f in fibers
    ):
        errors.append("fibers: expected a list of integer weight vectors")
        fibers = []
    if shape is None and fibers:
        errors.append("fibers: only allowed together with a shape")

    queries_raw = raw.get("queries", [])
    queries = []
    if not isinstance(queries_raw, list):
        errors.append("queries: expected a list")
    else:
        for i, q in enumerate(queries_raw):
            parsed = _parse_query(q, i, errors)
            if parsed is not None:
                queries.append(parsed)

    if errors:
        raise ScenarioError(SEMANTIC, errors)

    scenario = Scenario(
        family=family,
        rank=rank,
        parabolic=tuple(parabolic),
        lam=lam,
        shape=shape,
        k=k,
        fibers=tuple(tuple(f) for f in fibers),
        queries=tuple(queries),
    )
    if shape is not None:
        geometric = _geometric_errors(scenario)
        if geometric:
            raise ScenarioError(SEMANTIC, geometric)
    return scenario


def _geometric_errors(sc: Scenario) -> list[str]:
    X = scenario_flag(sc)
    errors = []
    if X.picard_rank <= 1:
        return [f"parabolic: Picard number hypothesis violated: rho(X) = {X.picard_rank} <= 1"]
    if sc.shape == THEOREM_A:
        if sc.k == 0:
            errors.append("k: must be a nonzero integer")
        if len(sc.fibers) % 2 == 0:
            errors.append(f"fibers: theorem_a needs an odd number of fibers, got {len(sc.fibers)}")
    elif not sc.fibers or len(sc.fibers) % 2:
        errors.append(f"fibers: theorem_b needs a positive even number of fibers, got {len(sc.fibers)}")
    deg = degree_functional(X, ke_metric(X, sc.lam).metric)
    for j, f in enumerate(sc.fibers):
        if len(f) != X.picard_rank:
            errors.append(
                f"fibers[{j}]: expected {X.picard_rank} coordinates over simple roots "
                f"{list(X.complement)}, got {len(f)}"
            )
        elif deg(f) != 0:
            errors.append(f"fibers[{j}]: fiber not in Pic0 (degree {format_rational(deg(f))})")
    if not errors:
        scenario_config(sc)
    return errors


def scenario_flag(sc: Scenario) -> FlagManifold:
    return build_flag(build_root_system(sc.family, sc.rank), sc.parabolic)


def scenario_config(sc: Scenario) -> TorusBundleConfig | None:
    if sc.shape is None:
        return None
    X = scenario_flag(sc)
    if sc.shape == THEOREM_A:
        return build_theorem_a(X, sc.lam, sc.k, sc.fibers)
    return build_theorem_b(X, sc.lam, sc.fibers)


def scenario_to_dict(sc: Scenario) -> dict:
    out: dict[str, Any] = {
        "root_type": {"family": sc.family, "rank": sc.rank},
        "parabolic": list(sc.parabolic),
    }
    if sc.lam is not None:
        out["lambda"] = format_rational(sc.lam)
    if sc.shape is not None:
        out["shape"] = sc.shape
    if sc.k is not None:
        out["k"] = sc.k
    if sc.fibers:
        out["fibers"] = [list(f) for f in sc.fibers]
    queries = []
    for q in sc.queries:
        d: dict[str, Any] = {"kind": q.kind}
        for name in ("s", "t", "h"):
            v = getattr(q, name)
            if v is not None:
                d[name] = format_rational(v)
        if q.samples is not None:
            d["samples"] = [format_rational(x) for x in q.samples]
        queries.append(d)
    out["queries"] = queries
    return out


def serialize_scenario(sc: Scenario) -> str:
    return json.dumps(scenario_to_dict(sc), indent=2) + "\n"
