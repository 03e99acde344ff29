"""Flag manifolds G/P described by a subset of simple roots."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable

from .errors import DomainError
from .root_system import (
    Root,
    RootSystem,
    Weight,
    build_root_system,
    pairing,
    root_as_weight,
)

__all__ = ["FlagManifold", "build_flag", "delta_p", "fano_index"]


@dataclass(frozen=True, eq=False)
class FlagManifold:
    """``G/P`` with ``P`` generated by the simple roots in ``parabolic``.

    Indices are 1-based.  ``complement`` lists the simple roots not in
    ``parabolic`` in ascending order; every reduced weight vector (line
    bundles, invariant forms and metrics) is indexed by it.
    """

    rs: RootSystem
    parabolic: frozenset[int]
    complement: tuple[int, ...]
    complement_positive_roots: tuple[Root, ...]
    delta_p: Weight
    dim_complex: int
    picard_rank: int

    def __eq__(self, other):
        return (
            isinstance(other, FlagManifold)
            and self.rs == other.rs
            and self.parabolic == other.parabolic
        )

    def __hash__(self):
        return hash((self.rs, self.parabolic))

    def __repr__(self):
        return f"FlagManifold({self.rs.simple_type}, parabolic={sorted(self.parabolic)})"

    def embed(self, reduced) -> Weight:
        """Full weight from coordinates indexed by ``complement``."""
        reduced = tuple(reduced)
        if len(reduced) != len(self.complement):
            raise DomainError(
                f"expected {len(self.complement)} coordinates over {list(self.complement)}, "
                f"got {len(reduced)}"
            )
        full = [0] * self.rs.rank
        for i, c in zip(self.complement, reduced):
            full[i - 1] = c
        return Weight(tuple(full))

    def restrict(self, w: Weight) -> tuple:
        """Coordinates of ``w`` over ``complement``; the rest must vanish."""
        if any(w.coords[i - 1] != 0 for i in self.parabolic):
            raise DomainError("weight has nonzero coordinates on the parabolic roots")
        return tuple(w.coords[i - 1] for i in self.complement)


def build_flag(rs: RootSystem | str, parabolic: Iterable[int] = (), rank: int | None = None) -> FlagManifold:
    """Build the flag manifold of ``rs`` for the parabolic subset ``parabolic``.

    ``build_flag("A", [], rank=2)`` is accepted as a shorthand for the full
    flag of A2.  Degenerate choices (a point, Picard rank one) are allowed.
    """
    if not isinstance(rs, RootSystem):
        rs = build_root_system(rs, rank)
    par = frozenset(int(i) for i in parabolic)
    bad = sorted(i for i in par if not 1 <= i <= rs.rank)
    if bad:
        raise DomainError(f"parabolic indices {bad} out of range 1..{rs.rank}")
    complement = tuple(i for i in range(1, rs.rank + 1) if i not in par)
    # alpha lies in R_P iff its simple-root support is inside the parabolic set
    roots = tuple(
        r for r in rs.positive_roots
        if any(c != 0 and (i + 1) not in par for i, c in enumerate(r.coords))
    )
    delta = Weight.zero(rs.rank)
    for r in roots:
        delta = delta + root_as_weight(rs, r)
    return FlagManifold(
        rs=rs,
        parabolic=par,
        complement=complement,
        complement_positive_roots=roots,
        delta_p=delta,
        dim_complex=len(roots),
        picard_rank=len(complement),
    )


def delta_p(X: FlagManifold) -> Weight:
    return X.delta_p


def fano_index(X: FlagManifold) -> int:
    """gcd of ``<delta_P, alpha^vee>`` over the complement simple roots."""
    if X.picard_rank == 0:
        raise DomainError("Fano index undefined for a point")
    values = []
    for i in X.complement:
        unit = tuple(1 if k == i - 1 else 0 for k in range(X.rs.rank))
        p = pairing(X.rs, X.delta_p, unit)
        assert p.denominator == 1 and p > 0
        values.append(int(p))
    return reduce(gcd, values)
