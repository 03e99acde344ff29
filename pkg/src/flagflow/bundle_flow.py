"""Principal torus bundles over flag manifolds and their explicit flows.

A configuration is the unitary frame bundle ``U(E)`` of a split bundle
``E`` over a flag manifold ``X`` with Kähler-Einstein metric
``omega_0 = lam * delta_P``.  Two shapes are supported:

* ``theorem_a``: ``E = O_X(k) + F_1 + ... + F_{2n-1}`` with every ``F_j`` of
  degree zero.  The family ``Omega_s`` solves the Chern-Ricci flow and is
  t-Gauduchon Ricci-flat for exactly one ``t``.
* ``theorem_b``: ``E = F_1 + ... + F_{2n}``, all of degree zero.  The family
  solves the t-Gauduchon Ricci flow for every ``t`` and stays balanced.

Along the flow only the base part changes:
``Omega_s = pi^*((lam - s) delta_P) + (1/2) tr(Theta ^ J Theta)``.  The
fiber part never needs to be evaluated and is carried as a label.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ._rational import as_integer, as_rational
from .errors import (
    DomainError,
    FiberDegreeError,
    FlowIntervalError,
    PicardHypothesisError,
    ShapeError,
)
from .flag_manifold import FlagManifold, fano_index
from .intlinalg import rank
from .invariant_geometry import (
    InvariantForm,
    InvariantMetric,
    KEData,
    ke_metric,
    lambda_trace,
    ricci_weight,
)
from .picard import LineBundle, anticanonical_root, degree_functional

__all__ = [
    "THEOREM_A",
    "THEOREM_B",
    "FIBER_PART",
    "TorusBundleConfig",
    "FlowState",
    "GauduchonRicciWeight",
    "BalancedCertificate",
    "CalabiYauReport",
    "PluriclosedReport",
    "build_theorem_a",
    "build_theorem_b",
    "flow_state",
    "gauduchon_ricci",
    "t_flat_parameter",
    "flat_time",
    "is_balanced",
    "calabi_yau_integrality",
    "verify_flow_ode",
    "pluriclosed_flow_report",
]

THEOREM_A = "theorem_a"
THEOREM_B = "theorem_b"
FIBER_PART = "(1/2) tr(Theta ^ J Theta)"


@dataclass(frozen=True)
class TorusBundleConfig:
    base: FlagManifold
    ke: KEData
    shape: str
    fibers: tuple[LineBundle, ...]
    curvature_weights: tuple[InvariantForm, ...]
    k: int | None = None

    @property
    def lam(self) -> Fraction:
        return self.ke.lam

    @property
    def fiber_torus_dim(self) -> int:
        return len(self.curvature_weights)

    @property
    def summands(self) -> tuple[LineBundle, ...]:
        """The line bundles of ``E`` in torus-coordinate order."""
        if self.shape == THEOREM_A:
            return (anticanonical_root(self.base, self.k),) + self.fibers
        return self.fibers


def _check_base(X: FlagManifold):
    if X.picard_rank <= 1:
        raise PicardHypothesisError(
            f"Picard number hypothesis violated: rho(X) = {X.picard_rank} <= 1"
        )


def _coerce_fibers(X: FlagManifold, fibers: Iterable) -> tuple[LineBundle, ...]:
    out = []
    for f in fibers:
        if isinstance(f, LineBundle):
            if f.base != X:
                raise DomainError("fiber lives over a different flag manifold")
            out.append(f)
        else:
            out.append(LineBundle(X, tuple(f)))
    return tuple(out)


def _check_degree_zero(X: FlagManifold, ke: KEData, fibers: Sequence[LineBundle]):
    deg = degree_functional(X, ke.metric)
    for j, F in enumerate(fibers, start=1):
        d = deg(F)
        if d != 0:
            raise FiberDegreeError(
                f"fiber not in Pic0: F_{j} with weight {list(F.weight)} has degree {d}"
            )


def build_theorem_a(X: FlagManifold, lam, k: int, fibers: Iterable) -> TorusBundleConfig:
    """``E = O_X(k) + F_1 + ... + F_{2n-1}`` with every ``F_j`` of degree zero."""
    _check_base(X)
    k = as_integer(k)
    if k == 0:
        raise ShapeError("k must be a nonzero integer")
    fibers = _coerce_fibers(X, fibers)
    if len(fibers) % 2 == 0:
        raise ShapeError(f"theorem_a needs an odd number of fibers (2n - 1), got {len(fibers)}")
    ke = ke_metric(X, lam)
    _check_degree_zero(X, ke, fibers)
    psi1 = ricci_weight(X) * Fraction(k, fano_index(X))
    weights = (psi1,) + tuple(F.curvature() for F in fibers)
    cfg = TorusBundleConfig(X, ke, THEOREM_A, fibers, weights, k)
    assert all(lambda_trace(X, ke.metric, psi) == 0 for psi in weights[1:])
    return cfg


def build_theorem_b(X: FlagManifold, lam, fibers: Iterable) -> TorusBundleConfig:
    """``E = F_1 + ... + F_{2n}`` with every ``F_j`` of degree zero."""
    _check_base(X)
    fibers = _coerce_fibers(X, fibers)
    if not fibers or len(fibers) % 2:
        raise ShapeError(f"theorem_b needs a positive even number of fibers, got {len(fibers)}")
    ke = ke_metric(X, lam)
    _check_degree_zero(X, ke, fibers)
    weights = tuple(F.curvature() for F in fibers)
    return TorusBundleConfig(X, ke, THEOREM_B, fibers, weights)


def _check_time(cfg: TorusBundleConfig, s) -> Fraction:
    s = as_rational(s)
    if s >= cfg.lam:
        raise FlowIntervalError(
            f"flow exited maximal interval (-inf, {cfg.lam}): s = {s}"
        )
    return s


@dataclass(frozen=True)
class FlowState:
    s: Fraction
    base_metric: InvariantMetric
    fiber_part: str = FIBER_PART


def flow_state(cfg: TorusBundleConfig, s) -> FlowState:
    s = _check_time(cfg, s)
    w = ricci_weight(cfg.base) * (cfg.lam - s)
    return FlowState(s, InvariantMetric(cfg.base, w.weight))


@dataclass(frozen=True)
class GauduchonRicciWeight:
    """``p(Omega_s, t) = pi^*(coefficient * delta_P)``."""

    coefficient: Fraction
    form: InvariantForm


def gauduchon_ricci(cfg: TorusBundleConfig, s, t) -> GauduchonRicciWeight:
    """Ricci form of the canonical connection ``nabla^t`` along the flow.

    ``p(Omega, t) = pi^*(p(omega_s, 1) + (t-1)/2 sum_j Lambda_{omega_s}(psi_j) psi_j)``
    evaluated term by term with the trace of the current base metric.
    """
    state = flow_state(cfg, s)
    t = as_rational(t)
    X = cfg.base
    total = ricci_weight(X)
    for psi in cfg.curvature_weights:
        total = total + psi * ((t - 1) / 2 * lambda_trace(X, state.base_metric, psi))
    delta = ricci_weight(X)
    # every curvature weight with nonzero trace is a multiple of delta_P
    coefficient = _proportionality(total, delta)
    return GauduchonRicciWeight(coefficient, total)


def _proportionality(form: InvariantForm, delta: InvariantForm) -> Fraction:
    i = next(i for i, c in enumerate(delta.weight) if c != 0)
    c = form.weight[i] / delta.weight[i]
    assert form == delta * c, "Ricci weight is not a multiple of delta_P"
    return c


def _require_a(cfg: TorusBundleConfig, what: str):
    if cfg.shape != THEOREM_A:
        raise ShapeError(f"{what} undefined: Ricci weight is t-independent and nonzero")


def t_flat_parameter(cfg: TorusBundleConfig, s) -> Fraction:
    """The unique ``t`` with ``p(Omega_s, t) = 0``: ``1 - 2(lam-s) I^2 / (k^2 dim)``."""
    _require_a(cfg, "flatness parameter")
    s = _check_time(cfg, s)
    index = fano_index(cfg.base)
    return 1 - Fraction(2 * index**2, cfg.k**2 * cfg.base.dim_complex) * (cfg.lam - s)


def flat_time(cfg: TorusBundleConfig, t) -> Fraction:
    """The time ``s < lam`` at which ``Omega_s`` is t-Gauduchon Ricci-flat."""
    _require_a(cfg, "flat time")
    t = as_rational(t)
    if t >= 1:
        raise FlowIntervalError(f"no flat time in the maximal interval for t = {t} >= 1")
    index = fano_index(cfg.base)
    return cfg.lam - (1 - t) * Fraction(cfg.k**2 * cfg.base.dim_complex, 2 * index**2)


@dataclass(frozen=True)
class BalancedCertificate:
    """``Lambda_{omega_s}(psi_j)`` for every torus coordinate; balanced iff all vanish."""

    s: Fraction
    traces: tuple[Fraction, ...]

    @property
    def balanced(self) -> bool:
        return not any(self.traces)

    def __bool__(self):
        return self.balanced


def is_balanced(cfg: TorusBundleConfig, s) -> BalancedCertificate:
    state = flow_state(cfg, s)
    traces = tuple(lambda_trace(cfg.base, state.base_metric, psi) for psi in cfg.curvature_weights)
    scale = cfg.lam / (cfg.lam - state.s)
    assert traces == tuple(scale * lambda_trace(cfg.base, cfg.ke.metric, psi) for psi in cfg.curvature_weights)
    return BalancedCertificate(state.s, traces)


@dataclass(frozen=True)
class CalabiYauReport:
    """First Chern class of ``U(E)``.

    ``real_class_vanishes`` is computed: ``delta_P`` lies in the rational span
    of the curvature weights.  ``integral`` is the divisibility test
    ``I(X) lam in kZ`` (``None`` for theorem_b, where ``k`` is absent).
    """

    real_class_vanishes: bool
    integral: bool | None
    fano_index_times_lambda: Fraction
    k: int | None
    non_kahler: bool = True

    def __bool__(self):
        return bool(self.integral)


def calabi_yau_integrality(cfg: TorusBundleConfig) -> CalabiYauReport:
    X = cfg.base
    index = fano_index(X)
    rows = [psi.weight for psi in cfg.curvature_weights]
    delta = ricci_weight(X).weight
    real = rank(rows + [delta]) == rank(rows)
    il = index * cfg.lam
    if cfg.shape == THEOREM_A:
        integral = (il / cfg.k).denominator == 1
        return CalabiYauReport(real, integral, il, cfg.k)
    return CalabiYauReport(real, None, il, None)


def verify_flow_ode(cfg: TorusBundleConfig, t, s, h) -> tuple[Fraction, ...]:
    """Exact residual of ``d/ds Omega_s = -p(Omega_s, t)`` as a base weight.

    ``(w(s+h) - w(s))/h + p(Omega_s, t)`` where ``w`` is the closed-form base
    weight; the fiber part is constant and drops out.  Zero exactly when the
    family is a solution of the t-flow.
    """
    h = as_rational(h)
    if h == 0:
        raise DomainError("step h must be nonzero")
    s = as_rational(s)
    w0 = flow_state(cfg, s).base_metric
    w1 = flow_state(cfg, s + h).base_metric
    ricci = gauduchon_ricci(cfg, s, t).form
    return tuple((b - a) / h + r for a, b, r in zip(w0.weight, w1.weight, ricci.weight))


@dataclass(frozen=True)
class PluriclosedReport:
    lam: Fraction
    fiber_torus_dim: int
    bismut_ricci: InvariantForm
    chern_ricci: InvariantForm
    certificates: tuple[BalancedCertificate, ...]
    ode_residuals: tuple[tuple[Fraction, ...], ...]
    # cited, not computed
    non_kahler: bool = True
    non_pluriclosed: bool = True

    @property
    def balanced_everywhere(self) -> bool:
        return all(c.balanced for c in self.certificates)


def pluriclosed_flow_report(cfg: TorusBundleConfig, s_samples: Iterable = ()) -> PluriclosedReport:
    """Balanced solution of the pluriclosed flow (theorem_b configurations only).

    At each sample the (1,1)-part of the Bismut-Ricci form (``t = -1``) is
    compared with the Chern-Ricci form, the balanced certificate is recorded
    and the flow residual at ``t = -1`` is checked to vanish.
    """
    if cfg.shape != THEOREM_B:
        raise ShapeError("pluriclosed-flow report is only defined for theorem_b configurations")
    samples = [_check_time(cfg, s) for s in s_samples]
    certs = []
    residuals = []
    bismut = gauduchon_ricci(cfg, 0, -1).form
    chern = gauduchon_ricci(cfg, 0, 1).form
    for s in samples:
        b = gauduchon_ricci(cfg, s, -1).form
        assert b == bismut == chern == ricci_weight(cfg.base)
        certs.append(is_balanced(cfg, s))
        h = (cfg.lam - s) / 2
        residuals.append(verify_flow_ode(cfg, -1, s, h))
    return PluriclosedReport(
        cfg.lam, cfg.fiber_torus_dim, bismut, chern, tuple(certs), tuple(residuals)
    )
