"""Invariant (1,1)-forms and Kähler metrics on a flag manifold.

An invariant real (1,1)-form is determined by a weight supported on the
complement simple roots: it acts on the root space of a complement root
``alpha`` through ``<weight, alpha^vee>``.  Both forms and metrics are stored
by their reduced weight vector (indexed by ``X.complement``).  Curvature
weights are Chern-class weights; the 2*pi is dropped throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._rational import as_integer, as_rational
from .errors import DomainError
from .flag_manifold import FlagManifold, fano_index
from .root_system import Weight, pairing

__all__ = [
    "InvariantForm",
    "InvariantMetric",
    "KEData",
    "ke_metric",
    "ricci_weight",
    "lambda_trace",
    "lambda_of_anticanonical_curvature",
    "root_pairings",
]


def root_pairings(X: FlagManifold, w: Weight) -> tuple[Fraction, ...]:
    """``<w, alpha^vee>`` for every ``alpha`` in ``X.complement_positive_roots``."""
    return tuple(pairing(X.rs, w, a) for a in X.complement_positive_roots)


@dataclass(frozen=True)
class InvariantForm:
    base: FlagManifold
    weight: tuple[Fraction, ...]

    def __post_init__(self):
        w = tuple(as_rational(c) for c in self.weight)
        if len(w) != self.base.picard_rank:
            raise DomainError(
                f"form weight needs {self.base.picard_rank} coordinates, got {len(w)}"
            )
        object.__setattr__(self, "weight", w)

    @classmethod
    def from_weight(cls, X: FlagManifold, w: Weight) -> "InvariantForm":
        return cls(X, X.restrict(w))

    def to_weight(self) -> Weight:
        return self.base.embed(self.weight)

    def _check(self, other):
        if self.base != other.base:
            raise DomainError("forms live on different flag manifolds")

    def __add__(self, other: "InvariantForm") -> "InvariantForm":
        self._check(other)
        return InvariantForm(self.base, tuple(a + b for a, b in zip(self.weight, other.weight)))

    def __sub__(self, other: "InvariantForm") -> "InvariantForm":
        self._check(other)
        return InvariantForm(self.base, tuple(a - b for a, b in zip(self.weight, other.weight)))

    def __mul__(self, c) -> "InvariantForm":
        c = as_rational(c)
        return InvariantForm(self.base, tuple(c * a for a in self.weight))

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def is_zero(self) -> bool:
        return not any(self.weight)


@dataclass(frozen=True)
class InvariantMetric(InvariantForm):
    """An invariant Kähler metric: positive on every complement root."""

    def __post_init__(self):
        super().__post_init__()
        bad = [
            a.coords
            for a, p in zip(self.base.complement_positive_roots, root_pairings(self.base, self.to_weight()))
            if p <= 0
        ]
        if bad:
            raise DomainError(f"weight {self.weight} is not a positive metric (fails on roots {bad})")

    @classmethod
    def coerce(cls, form: InvariantForm) -> "InvariantMetric":
        if isinstance(form, InvariantMetric):
            return form
        return cls(form.base, form.weight)

    def __mul__(self, c):
        return InvariantForm.__mul__(self, c)

    __rmul__ = __mul__


@dataclass(frozen=True)
class KEData:
    lam: Fraction
    metric: InvariantMetric

    def __post_init__(self):
        lam = as_rational(self.lam)
        object.__setattr__(self, "lam", lam)
        X = self.metric.base
        if self.metric.to_weight() != X.delta_p * lam:
            raise DomainError("Kähler-Einstein weight must equal lambda * delta_P")


def ke_metric(X: FlagManifold, lam) -> KEData:
    """The invariant Kähler-Einstein metric ``omega_0 = lam * p_{omega_0}``."""
    lam = as_rational(lam)
    if lam <= 0:
        raise DomainError(f"Einstein constant must be positive, got {lam}")
    if X.picard_rank == 0:
        raise DomainError("a point carries no Kähler-Einstein metric")
    return KEData(lam, InvariantMetric.from_weight(X, X.delta_p * lam))


def ricci_weight(X: FlagManifold) -> InvariantForm:
    """Weight of the Ricci form of any invariant Kähler metric: ``delta_P``."""
    return InvariantForm.from_weight(X, X.delta_p)


def lambda_trace(X: FlagManifold, omega: InvariantForm, psi: InvariantForm) -> Fraction:
    """Contraction ``Lambda_omega(psi)`` of an invariant (1,1)-form.

    Sum over complement positive roots of the ratio of coroot pairings
    ``<psi, alpha^vee> / <omega, alpha^vee>``.  ``omega`` must be positive.
    """
    omega = InvariantMetric.coerce(omega)
    if omega.base != X or psi.base != X:
        raise DomainError("metric and form must live on the given flag manifold")
    num = root_pairings(X, psi.to_weight())
    den = root_pairings(X, omega.to_weight())
    return sum((a / b for a, b in zip(num, den)), Fraction(0))


def lambda_of_anticanonical_curvature(X: FlagManifold, ke: KEData, k) -> Fraction:
    """``Lambda_{omega_0}(psi_1) = k dim(X) / (lam I(X))`` for ``psi_1`` in ``c_1(O_X(k))``.

    The closed form is asserted against the direct trace of
    ``(k / I(X)) delta_P`` before it is returned.
    """
    k = as_integer(k)
    index = fano_index(X)
    closed = Fraction(k * X.dim_complex) / (ke.lam * index)
    psi1 = ricci_weight(X) * Fraction(k, index)
    assert lambda_trace(X, ke.metric, psi1) == closed
    return closed
