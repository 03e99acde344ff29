"""Independent oracles built from explicit Euclidean root data.

Nothing here goes through the library's Cartan tables or symmetrizers:
simple roots are written down as vectors in R^N (Bourbaki models), the root
system is generated by Euclidean reflections, and pairings are computed as
``2 (lam, alpha) / (alpha, alpha)`` from sympy-solved fundamental weights.
"""

from fractions import Fraction
from functools import lru_cache

import sympy as sp

H = Fraction(1, 2)


def _e(n, i):
    v = [0] * n
    v[i] = 1
    return v


def _sub(a, b):
    return [x - y for x, y in zip(a, b)]


def _add(a, b):
    return [x + y for x, y in zip(a, b)]


def euclidean_simple_roots(family: str, n: int):
    if family == "A":
        N = n + 1
        return [_sub(_e(N, i), _e(N, i + 1)) for i in range(n)]
    if family in "BCD":
        chain = [_sub(_e(n, i), _e(n, i + 1)) for i in range(n - 1)]
        if family == "B":
            return chain + [_e(n, n - 1)]
        if family == "C":
            return chain + [[2 * x for x in _e(n, n - 1)]]
        return chain + [_add(_e(n, n - 2), _e(n, n - 1))]
    if family == "G":
        return [[1, -1, 0], [-2, 1, 1]]
    if family == "F":
        return [[0, 1, -1, 0], [0, 0, 1, -1], [0, 0, 0, 1], [H, -H, -H, -H]]
    if family == "E":
        e8 = [
            [H, -H, -H, -H, -H, -H, -H, H],
            _add(_e(8, 0), _e(8, 1)),
        ] + [_sub(_e(8, i), _e(8, i - 1)) for i in range(1, 7)]
        return e8[:n]
    raise ValueError(family)


def _dot(a, b):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _reflect(v, a):
    c = 2 * _dot(v, a) / _dot(a, a)
    return tuple(x - c * y for x, y in zip(v, a))


def _to_sympy(rows):
    return sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in r] for r in rows])


def _from_sympy(m):
    return [[Fraction(int(sp.fraction(x)[0]), int(sp.fraction(x)[1])) for x in m.row(i)] for i in range(m.rows)]


@lru_cache(maxsize=None)
def oracle(family: str, n: int):
    """``(cartan, positive_roots, pair)`` for the type, all from Euclidean data."""
    simple = [tuple(Fraction(x) for x in a) for a in euclidean_simple_roots(family, n)]
    cartan = [[int(2 * _dot(ai, aj) / _dot(aj, aj)) for aj in simple] for ai in simple]

    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for a in simple:
                w = _reflect(v, a)
                if w not in roots:
                    roots.add(w)
                    nxt.append(w)
        frontier = nxt

    B = _to_sympy(simple).T  # columns are simple roots
    pinv = _from_sympy((B.T * B).inv() * B.T)
    positive = []
    for v in roots:
        coords = [_dot(row, v) for row in pinv]
        assert all(c.denominator == 1 for c in coords)
        if all(c >= 0 for c in coords):
            positive.append(tuple(int(c) for c in coords))

    # fundamental weights in span(simple): 2 (w_i, a_j) / (a_j, a_j) = delta_ij
    G = _to_sympy([[2 * _dot(ai, aj) / _dot(aj, aj) for aj in simple] for ai in simple])
    X = _from_sympy(G.inv())
    dim = len(simple[0])
    fund = [tuple(sum((X[i][k] * simple[k][c] for k in range(n)), Fraction(0)) for c in range(dim))
            for i in range(n)]

    def pair(lam, alpha):
        vec = [sum((Fraction(l) * fund[i][c] for i, l in enumerate(lam)), Fraction(0)) for c in range(dim)]
        a = [sum((m * simple[i][c] for i, m in enumerate(alpha)), Fraction(0)) for c in range(dim)]
        return 2 * _dot(vec, a) / _dot(a, a)

    return cartan, sorted(positive), pair


def projective_space_delta(n: int):
    """``delta_P`` of ``P^n`` (A_n, parabolic {2..n}) by hand enumeration.

    The complement roots are ``alpha_1 + ... + alpha_j`` for ``j = 1..n``, so
    the coefficient of ``alpha_i`` in their sum is ``n + 1 - i``.  Converting
    with the tridiagonal A_n Cartan rows gives the weight coordinates.
    """
    coeff = [n + 1 - i for i in range(1, n + 1)]
    cartan = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]
    return [sum(coeff[i] * cartan[i][j] for i in range(n)) for j in range(n)]


POSITIVE_ROOT_COUNTS = {
    **{("A", n): n * (n + 1) // 2 for n in range(1, 9)},
    **{("B", n): n * n for n in range(2, 9)},
    **{("C", n): n * n for n in range(3, 9)},
    **{("D", n): n * (n - 1) for n in range(4, 9)},
    ("G", 2): 6,
    ("F", 4): 24,
    ("E", 6): 36,
    ("E", 7): 63,
    ("E", 8): 120,
}
