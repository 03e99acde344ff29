"""The Picard lattice of a flag manifold and its degree-zero sublattice."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._rational import as_integer, as_rational
from .errors import DomainError
from .flag_manifold import FlagManifold, fano_index
from .intlinalg import clear_denominators, integer_kernel
from .invariant_geometry import InvariantForm, InvariantMetric, lambda_trace

__all__ = [
    "LineBundle",
    "DegreeFunctional",
    "line_bundle",
    "tensor",
    "dual",
    "anticanonical_root",
    "degree_functional",
    "pic0_basis",
]


@dataclass(frozen=True)
class LineBundle:
    """A homogeneous line bundle, recorded by its weight over ``base.complement``."""

    base: FlagManifold
    weight: tuple[int, ...]

    def __post_init__(self):
        w = tuple(as_integer(c) for c in self.weight)
        if len(w) != self.base.picard_rank:
            raise DomainError(
                f"line bundle weight needs {self.base.picard_rank} coordinates, got {len(w)}"
            )
        object.__setattr__(self, "weight", w)

    def __matmul__(self, other):
        return tensor(self, other)

    def curvature(self) -> InvariantForm:
        """The invariant representative of ``c_1`` (as a weight)."""
        return InvariantForm(self.base, self.weight)

    def is_trivial(self) -> bool:
        return not any(self.weight)


def line_bundle(X: FlagManifold, weight: Sequence[int]) -> LineBundle:
    return LineBundle(X, tuple(weight))


def tensor(a: LineBundle, b: LineBundle) -> LineBundle:
    if a.base != b.base:
        raise DomainError("cannot tensor line bundles over different flag manifolds")
    return LineBundle(a.base, tuple(x + y for x, y in zip(a.weight, b.weight)))


def dual(a: LineBundle) -> LineBundle:
    return LineBundle(a.base, tuple(-x for x in a.weight))


def anticanonical_root(X: FlagManifold, k: int = 1) -> LineBundle:
    """``O_X(k)``, the k-th power of the primitive root of ``K_X^{-1}``."""
    k = as_integer(k)
    index = fano_index(X)
    w = [c * k / Fraction(index) for c in X.restrict(X.delta_p)]
    assert all(c.denominator == 1 for c in w)
    return LineBundle(X, tuple(int(c) for c in w))


@dataclass(frozen=True)
class DegreeFunctional:
    """Row vector with ``deg(E) = const * sum coeffs_a s_a`` for a positive constant."""

    coeffs: tuple[Fraction, ...]

    def __call__(self, E: LineBundle | Sequence[int]) -> Fraction:
        w = E.weight if isinstance(E, LineBundle) else tuple(E)
        if len(w) != len(self.coeffs):
            raise DomainError("degree functional and bundle have different Picard rank")
        return sum((c * as_rational(x) for c, x in zip(self.coeffs, w)), Fraction(0))

    def is_degree_zero(self, E) -> bool:
        return self(E) == 0


def degree_functional(X: FlagManifold, omega: InvariantForm) -> DegreeFunctional:
    """Coefficients ``Lambda_omega(Omega_a)`` over the complement simple roots."""
    omega = InvariantMetric.coerce(omega)
    n = X.picard_rank
    coeffs = []
    for i in range(n):
        unit = InvariantForm(X, tuple(1 if j == i else 0 for j in range(n)))
        coeffs.append(lambda_trace(X, omega, unit))
    return DegreeFunctional(tuple(coeffs))


def pic0_basis(X: FlagManifold, omega: InvariantForm) -> list[LineBundle]:
    """Basis of ``Pic^0_omega(X)``, the full integer kernel of the degree.

    Rows come from the Hermite normal form of the kernel, each signed so its
    last nonzero entry is positive (so ``F_l = O_1(-l) O_2(l)`` appears as
    ``(-1, 1)``), then sorted lexicographically.
    """
    f = degree_functional(X, omega)
    if not f.coeffs:
        return []
    row = clear_denominators(f.coeffs)
    basis = integer_kernel([row], len(row))
    signed = [b if next(x for x in reversed(b) if x) > 0 else [-x for x in b] for b in basis]
    return [LineBundle(X, tuple(b)) for b in sorted(signed)]
