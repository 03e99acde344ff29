"""Holonomy of the principal connection and the collapsed flow limit.

Each invariant (1,1)-form of weight ``w`` takes the value ``<w, alpha^vee>``
(up to a common normalisation) on the horizontal 2-plane over the root space
of a complement root ``alpha``, and these planes exhaust the horizontal
directions.  The holonomy algebra is therefore the column space of the
matrix of pairings; its dimension is the rank of that matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bundle_flow import TorusBundleConfig
from .errors import DomainError
from .intlinalg import rank
from .invariant_geometry import root_pairings

__all__ = ["HolonomyReport", "holonomy_matrix", "holonomy_rank", "gh_limit", "limit_label"]


def holonomy_matrix(cfg: TorusBundleConfig) -> tuple[tuple[Fraction, ...], ...]:
    """Rows: torus coordinates ``psi_j``; columns: ``X.complement_positive_roots``."""
    X = cfg.base
    return tuple(root_pairings(X, psi.to_weight()) for psi in cfg.curvature_weights)


def holonomy_rank(cfg: TorusBundleConfig) -> int:
    return rank(holonomy_matrix(cfg))


def limit_label(dim: int) -> str:
    if dim == 0:
        return "point"
    if dim == 1:
        return "S^1"
    return f"T^{dim}"


@dataclass(frozen=True)
class HolonomyReport:
    matrix: tuple[tuple[Fraction, ...], ...]
    rank: int
    closed: bool
    fiber_torus_dim: int
    gh_limit_dim: int
    limit: str
    metric: str = "normal metric"


def gh_limit(cfg: TorusBundleConfig) -> HolonomyReport:
    """Gromov-Hausdorff limit of ``(U(E), Omega_s)`` as ``s -> lam``.

    The base collapses and the limit is ``T^{2n} / Hol``, a torus of
    dimension ``2n - l`` with ``l`` the holonomy rank.  Closedness of the
    holonomy group is checked (integral curvature weights), not assumed.
    """
    matrix = holonomy_matrix(cfg)
    closed = all(c.denominator == 1 for psi in cfg.curvature_weights for c in psi.weight)
    if not closed:
        raise DomainError("holonomy group is not known to be closed (non-integral curvature)")
    l = rank(matrix)
    dim = cfg.fiber_torus_dim - l
    return HolonomyReport(matrix, l, closed, cfg.fiber_torus_dim, dim, limit_label(dim))
