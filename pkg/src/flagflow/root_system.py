"""Finite simple root systems with exact arithmetic.

Roots are stored in the simple-root basis (integer coordinates), weights in
the fundamental-weight basis (rational coordinates).  All pairings are
computed from the Cartan matrix and its symmetrizer, so no floating point
ever enters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

from . import cartan_tables
from ._rational import as_rational
from .errors import DomainError, InvalidTypeError

__all__ = [
    "SimpleType",
    "Root",
    "Weight",
    "RootSystem",
    "build_root_system",
    "cartan_matrix",
    "simple_root_as_weight",
    "fundamental_weight",
    "pairing",
]


@dataclass(frozen=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        ok = cartan_tables.VALID_RANKS.get(self.family)
        if ok is None or isinstance(self.rank, bool) or not isinstance(self.rank, int) or not ok(self.rank):
            raise InvalidTypeError(f"invalid simple type {self.family}{self.rank}")

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    """A root ``sum m_i alpha_i`` in the simple-root basis."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if not any(self.coords):
            raise DomainError("a root cannot be the zero vector")

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __neg__(self):
        return Root(tuple(-c for c in self.coords))


@dataclass(frozen=True)
class Weight:
    """A weight ``sum c_i varpi_i`` in the fundamental-weight basis."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_rational(c) for c in self.coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((Fraction(0),) * rank)

    def __add__(self, other: "Weight") -> "Weight":
        _same_rank(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        _same_rank(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, c) -> "Weight":
        c = as_rational(c)
        return Weight(tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]


def _same_rank(a: Weight, b: Weight):
    if len(a.coords) != len(b.coords):
        raise DomainError("weights of different rank")


@dataclass(frozen=True, eq=False)
class RootSystem:
    simple_type: SimpleType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]
    positive_roots: tuple[Root, ...]

    @property
    def rank(self) -> int:
        return self.simple_type.rank

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.simple_type == other.simple_type

    def __hash__(self):
        return hash(self.simple_type)

    def __repr__(self):
        return f"RootSystem({self.simple_type})"

    def gram(self, i: int, j: int) -> int:
        """``(alpha_i, alpha_j)`` normalised so that ``(alpha_i, alpha_i) = 2 d_i``."""
        return self.symmetrizers[j] * self.cartan[i][j]

    def is_root(self, coords: Sequence[int]) -> bool:
        key = tuple(coords)
        return key in self._root_set or tuple(-c for c in key) in self._root_set

    @property
    def _root_set(self) -> frozenset:
        cached = self.__dict__.get("_roots_cache")
        if cached is None:
            cached = frozenset(r.coords for r in self.positive_roots)
            object.__setattr__(self, "_roots_cache", cached)
        return cached


def _symmetrizers(c: list[list[int]]) -> tuple[int, ...]:
    # d_j C_ij = d_i C_ji, propagated along the (connected) Dynkin diagram
    n = len(c)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and c[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(c[j][i], c[i][j])
                stack.append(j)
    den = reduce(lcm, (x.denominator for x in d), 1)
    ints = [int(x * den) for x in d]
    g = reduce(gcd, ints)
    return tuple(x // g for x in ints)


def _reflection_closure(c: list[list[int]]) -> list[tuple[int, ...]]:
    n = len(c)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                # <beta, alpha_i^vee> = sum_j m_j C_ji
                p = sum(beta[j] * c[j][i] for j in range(n))
                if p == 0:
                    continue
                image = tuple(beta[k] - (p if k == i else 0) for k in range(n))
                if all(x >= 0 for x in image) and any(image) and image not in found:
                    found.add(image)
                    nxt.append(image)
        frontier = nxt
    return sorted(found, key=lambda m: (sum(m), tuple(-x for x in m)))


def build_root_system(t: SimpleType | str, rank: int | None = None) -> RootSystem:
    """Cartan data and positive roots of a simple type.

    Accepts either a :class:`SimpleType` or a family letter plus rank,
    e.g. ``build_root_system("A", 2)``.  Positive roots are enumerated by
    closing the simple roots under the simple reflections and are ordered by
    height, then by reverse-lexicographic coordinates.
    """
    if not isinstance(t, SimpleType):
        t = SimpleType(t, rank)
    c = cartan_tables.cartan_table(t.family, t.rank)
    d = _symmetrizers(c)
    roots = _reflection_closure(c)
    expected = cartan_tables.POSITIVE_ROOT_COUNT[t.family](t.rank)
    assert len(roots) == expected, (t, len(roots), expected)
    return RootSystem(
        simple_type=t,
        cartan=tuple(tuple(row) for row in c),
        symmetrizers=d,
        positive_roots=tuple(Root(r) for r in roots),
    )


def cartan_matrix(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    return rs.cartan


def _check_index(rs: RootSystem, i: int):
    if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= rs.rank:
        raise DomainError(f"simple root index {i!r} out of range 1..{rs.rank}")


def simple_root_as_weight(rs: RootSystem, i: int) -> Weight:
    """``alpha_i`` in the fundamental-weight basis (row ``i`` of C, 1-based)."""
    _check_index(rs, i)
    return Weight(rs.cartan[i - 1])


def fundamental_weight(rs: RootSystem, i: int) -> Weight:
    _check_index(rs, i)
    return Weight(tuple(1 if k == i - 1 else 0 for k in range(rs.rank)))


def root_as_weight(rs: RootSystem, alpha: Root | Sequence[int]) -> Weight:
    m = alpha.coords if isinstance(alpha, Root) else tuple(alpha)
    return Weight(
        tuple(sum(m[i] * rs.cartan[i][j] for i in range(rs.rank)) for j in range(rs.rank))
    )


def pairing(rs: RootSystem, lam: Weight, alpha: Root | Sequence[int]) -> Fraction:
    """The coroot pairing ``<lam, alpha^vee> = 2 (lam, alpha) / (alpha, alpha)``."""
    m = alpha.coords if isinstance(alpha, Root) else tuple(int(x) for x in alpha)
    n = rs.rank
    if len(m) != n or len(lam.coords) != n:
        raise DomainError("rank mismatch between weight, root and root system")
    if not rs.is_root(m):
        raise DomainError(f"{m} is not a root of {rs.simple_type}")
    d = rs.symmetrizers
    num = sum(lam.coords[i] * m[i] * d[i] for i in range(n))
    den = sum(m[i] * m[j] * rs.gram(i, j) for i in range(n) for j in range(n))
    assert den > 0
    return 2 * Fraction(num) / den
