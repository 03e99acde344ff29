import itertools
from fractions import Fraction

import pytest

from flagflow import (
    DomainError,
    InvariantMetric,
    anticanonical_root,
    build_flag,
    degree_functional,
    dual,
    ke_metric,
    line_bundle,
    pic0_basis,
    tensor,
)


def test_tensor_and_dual(A2):
    a, b = line_bundle(A2, (-1, 1)), line_bundle(A2, (1, 1))
    assert tensor(a, b).weight == (0, 2)
    assert (a @ b) == tensor(b, a)
    l = 4
    F = line_bundle(A2, (-l, 0)) @ line_bundle(A2, (0, l))
    assert F.weight == (-l, l)
    assert (a @ dual(a)).is_trivial()
    assert dual(dual(a)) == a
    c = line_bundle(A2, (3, -2))
    assert (a @ b) @ c == a @ (b @ c)


def test_tensor_over_different_bases(A2, P2):
    with pytest.raises(DomainError):
        tensor(line_bundle(A2, (1, 0)), line_bundle(P2, (1,)))


def test_line_bundle_needs_integers(A2):
    with pytest.raises(TypeError):
        line_bundle(A2, (Fraction(1, 2), 0))
    with pytest.raises(DomainError):
        line_bundle(A2, (1,))


def test_anticanonical_root(A2, P2):
    assert anticanonical_root(A2, 1).weight == (1, 1)
    assert anticanonical_root(A2, 5).weight == (5, 5)
    assert anticanonical_root(P2, 1).weight == (1,)
    with pytest.raises(DomainError, match="point"):
        anticanonical_root(build_flag("A", (1, 2), rank=2), 1)


def test_degree_functional(A2):
    omega = ke_metric(A2, 1).metric
    f = degree_functional(A2, omega)
    assert f.coeffs == (Fraction(3, 4), Fraction(3, 4))
    for c in (Fraction(1, 3), 2, Fraction(7, 5)):
        assert degree_functional(A2, omega * c).coeffs == (3 / (4 * Fraction(c)),) * 2
    assert f((0, 0)) == 0
    assert f((1, 1)) == Fraction(3, 2)


def test_degree_functional_rejects_non_metric(A2):
    with pytest.raises(DomainError):
        degree_functional(A2, InvariantMetric.coerce(ke_metric(A2, 1).metric * -1))


def test_pic0_examples(A2):
    omega = ke_metric(A2, 1).metric
    assert [b.weight for b in pic0_basis(A2, omega)] == [(-1, 1)]
    A3 = build_flag("A", (), rank=3)
    basis = pic0_basis(A3, ke_metric(A3, 1).metric)
    assert [b.weight for b in basis] == [(-1, 0, 1), (0, -11, 14)]


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3), ("A", 4)])
def test_pic0_degree_zero_and_scale_invariant(family, rank):
    X = build_flag(family, (), rank=rank)
    omega = ke_metric(X, 1).metric
    basis = pic0_basis(X, omega)
    assert len(basis) == X.picard_rank - 1
    f = degree_functional(X, omega)
    assert all(f(b) == 0 for b in basis)
    for c in (Fraction(1, 7), 3):
        assert pic0_basis(X, omega * c) == basis


def test_pic0_saturated_bruteforce_b3():
    X = build_flag("B", (), rank=3)
    omega = ke_metric(X, 1).metric
    basis = [b.weight for b in pic0_basis(X, omega)]
    f = degree_functional(X, omega)
    spanned = {
        tuple(sum(c * b[i] for c, b in zip(cs, basis)) for i in range(3))
        for cs in itertools.product(range(-30, 31), repeat=len(basis))
    }
    for v in itertools.product(range(-4, 5), repeat=3):
        if f(v) == 0:
            assert v in spanned


def test_pic0_of_picard_rank_one(P2):
    assert pic0_basis(P2, ke_metric(P2, 1).metric) == []
