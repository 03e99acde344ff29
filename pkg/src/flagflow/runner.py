"""Execute scenario queries and render deterministic reports."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from ._rational import format_rational
from .bundle_flow import (
    TorusBundleConfig,
    calabi_yau_integrality,
    flat_time,
    flow_state,
    gauduchon_ricci,
    is_balanced,
    pluriclosed_flow_report,
    t_flat_parameter,
    verify_flow_ode,
)
from .errors import DomainError, FlagflowError
from .flag_manifold import FlagManifold, fano_index
from .holonomy import gh_limit, holonomy_matrix, holonomy_rank
from .invariant_geometry import InvariantMetric, ke_metric
from .picard import degree_functional, pic0_basis
from .root_system import fundamental_weight, pairing
from .scenario import Scenario, scenario_config, scenario_flag, scenario_to_dict

__all__ = ["Report", "run", "describe_flag", "render_json", "render_text"]

EXIT_OK, EXIT_QUERY_FAILED = 0, 4


def _q(x) -> str:
    return format_rational(x)


def _vec(v) -> list[str]:
    return [_q(x) for x in v]


def _mat(m) -> list[list[str]]:
    return [_vec(r) for r in m]


@dataclass
class Report:
    document: dict

    @property
    def exit_code(self) -> int:
        return EXIT_QUERY_FAILED if self.document["errors"] else EXIT_OK


def describe_flag(X: FlagManifold, lam: Fraction | None = None) -> tuple[dict, list[str]]:
    """Root data, Picard data and (optionally) the KE metric of ``X``.

    Returns the description and a list of per-field errors (the Fano index of
    a point, for instance) so a caller can report them without losing the
    rest.
    """
    rs = X.rs
    errors = []
    out: dict[str, Any] = {
        "root_type": str(rs.simple_type),
        "cartan": _mat(rs.cartan),
        "symmetrizers": _vec(rs.symmetrizers),
        "positive_roots": _mat(r.coords for r in rs.positive_roots),
        "fundamental_pairings": _mat(
            [pairing(rs, fundamental_weight(rs, i), r) for r in rs.positive_roots]
            for i in range(1, rs.rank + 1)
        ),
        "parabolic": sorted(X.parabolic),
        "complement": list(X.complement),
        "complement_positive_roots": _mat(r.coords for r in X.complement_positive_roots),
        "dim_complex": _q(X.dim_complex),
        "picard_rank": _q(X.picard_rank),
        "delta_p": _vec(X.delta_p.coords),
    }
    try:
        out["fano_index"] = _q(fano_index(X))
    except FlagflowError as exc:
        out["fano_index"] = None
        errors.append(str(exc))
    if lam is not None and X.picard_rank > 0:
        ke = ke_metric(X, lam)
        out["ke_weight"] = _vec(ke.metric.weight)
        out["degree_functional"] = _vec(degree_functional(X, ke.metric).coeffs)
    return out, errors


def _need_config(cfg):
    if cfg is None:
        raise DomainError("query needs a torus-bundle configuration (no shape given)")
    return cfg


def _pic0(sc, X, cfg, q):
    if X.picard_rank == 0:
        return [], "picard.pic0_basis"
    metric = ke_metric(X, sc.lam).metric if sc.lam is not None else InvariantMetric.from_weight(X, X.delta_p)
    return _mat(b.weight for b in pic0_basis(X, metric)), "picard.pic0_basis"


def _flow(sc, X, cfg, q):
    state = flow_state(_need_config(cfg), q.s)
    value: dict[str, Any] = {
        "s": _q(state.s),
        "base_weight": _vec(state.base_metric.weight),
        "fiber_part": state.fiber_part,
    }
    if q.t is not None:
        g = gauduchon_ricci(cfg, q.s, q.t)
        value["t"] = _q(q.t)
        value["ricci_coefficient"] = _q(g.coefficient)
        value["ricci_weight"] = _vec(g.form.weight)
    return value, "bundle_flow.flow_state, bundle_flow.gauduchon_ricci"


def _tflat(sc, X, cfg, q):
    return _q(t_flat_parameter(_need_config(cfg), q.s)), "bundle_flow.t_flat_parameter"


def _flat_time(sc, X, cfg, q):
    return _q(flat_time(_need_config(cfg), q.t)), "bundle_flow.flat_time"


def _balanced(sc, X, cfg, q):
    cert = is_balanced(_need_config(cfg), q.s)
    return {"balanced": cert.balanced, "traces": _vec(cert.traces)}, "bundle_flow.is_balanced"


def _ode(sc, X, cfg, q):
    res = verify_flow_ode(_need_config(cfg), q.t, q.s, q.h)
    return {"residual": _vec(res), "zero": not any(res)}, "bundle_flow.verify_flow_ode"


def _holonomy(sc, X, cfg, q):
    cfg = _need_config(cfg)
    return {
        "matrix": _mat(holonomy_matrix(cfg)),
        "rank": _q(holonomy_rank(cfg)),
    }, "holonomy.holonomy_matrix, holonomy.holonomy_rank"


def _gh(sc, X, cfg, q):
    rep = gh_limit(_need_config(cfg))
    return {
        "rank": _q(rep.rank),
        "closed": rep.closed,
        "fiber_torus_dim": _q(rep.fiber_torus_dim),
        "gh_limit_dim": _q(rep.gh_limit_dim),
        "limit": rep.limit,
        "metric": rep.metric,
    }, "holonomy.gh_limit"


def _cy(sc, X, cfg, q):
    rep = calabi_yau_integrality(_need_config(cfg))
    return {
        "real_class_vanishes": rep.real_class_vanishes,
        "integral": rep.integral,
        "fano_index_times_lambda": _q(rep.fano_index_times_lambda),
        "non_kahler": rep.non_kahler,
    }, "bundle_flow.calabi_yau_integrality"


def _pluriclosed(sc, X, cfg, q):
    rep = pluriclosed_flow_report(_need_config(cfg), q.samples or ())
    return {
        "fiber_torus_dim": _q(rep.fiber_torus_dim),
        "bismut_ricci_weight": _vec(rep.bismut_ricci.weight),
        "chern_ricci_weight": _vec(rep.chern_ricci.weight),
        "samples": [
            {"s": _q(c.s), "balanced": c.balanced, "traces": _vec(c.traces), "ode_residual": _vec(r)}
            for c, r in zip(rep.certificates, rep.ode_residuals)
        ],
        "non_kahler": rep.non_kahler,
        "non_pluriclosed": rep.non_pluriclosed,
        "flags_cited": True,
    }, "bundle_flow.pluriclosed_flow_report"


HANDLERS: dict[str, Callable] = {
    "pic0": _pic0,
    "flow": _flow,
    "tflat": _tflat,
    "flat_time": _flat_time,
    "balanced": _balanced,
    "ode_check": _ode,
    "holonomy": _holonomy,
    "gh_limit": _gh,
    "cy_check": _cy,
    "pluriclosed_report": _pluriclosed,
}


def run(scenario: Scenario) -> Report:
    """Run every query in order; a failing query is recorded and skipped."""
    X = scenario_flag(scenario)
    cfg: TorusBundleConfig | None = scenario_config(scenario)
    results, errors = [], []
    for i, q in enumerate(scenario.queries):
        if q.kind == "describe":
            value, problems = describe_flag(X, scenario.lam)
            results.append({"query": i, "kind": q.kind, "value": value, "source": "flag_manifold.build_flag"})
            errors.extend({"query": i, "kind": q.kind, "error": p} for p in problems)
            continue
        try:
            value, source = HANDLERS[q.kind](scenario, X, cfg, q)
        except FlagflowError as exc:
            errors.append({"query": i, "kind": q.kind, "error": str(exc)})
            continue
        results.append({"query": i, "kind": q.kind, "value": value, "source": source})
    doc = {
        "scenario": scenario_to_dict(scenario),
        "index_map": list(X.complement),
        "results": results,
        "errors": errors,
    }
    return Report(doc)


def render_json(report: Report) -> str:
    return json.dumps(report.document, indent=2, ensure_ascii=False) + "\n"


def flatten_text(prefix: str, value, lines: list[str]):
    if isinstance(value, dict):
        for k, v in value.items():
            flatten_text(f"{prefix}.{k}" if prefix else k, v, lines)
    elif isinstance(value, list) and value and isinstance(value[0], dict):
        for j, v in enumerate(value):
            flatten_text(f"{prefix}[{j}]", v, lines)
    else:
        lines.append(f"  {prefix:<28} {_text(value)}")


def _text(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_text(x) for x in v) + "]"
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def render_text(report: Report) -> str:
    doc = report.document
    sc = doc["scenario"]
    rt = sc["root_type"]
    lines = [
        f"flag manifold {rt['family']}{rt['rank']}, parabolic {sc['parabolic']}, "
        f"weights indexed by simple roots {doc['index_map']}"
    ]
    if "shape" in sc:
        lines.append(f"bundle {sc['shape']}  lambda={sc.get('lambda')}  k={sc.get('k', '-')}  fibers={sc.get('fibers', [])}")
    for r in doc["results"]:
        lines.append(f"[{r['query']}] {r['kind']}  ({r['source']})")
        if isinstance(r["value"], dict):
            flatten_text("", r["value"], lines)
        else:
            lines.append(f"  {_text(r['value'])}")
    for e in doc["errors"]:
        lines.append(f"[{e['query']}] {e['kind']}  ERROR: {e['error']}")
    return "\n".join(lines) + "\n"
