"""Degree-zero line bundles.

A line bundle on a flag manifold is an integer weight over the simple roots
outside the parabolic set.  Its degree with respect to an invariant metric is
a linear functional, and Pic0 is the saturated integer kernel of it.
"""

from fractions import Fraction

from flagflow import (
    anticanonical_root,
    build_flag,
    degree_functional,
    ke_metric,
    line_bundle,
    pic0_basis,
)


def fmt(v):
    """Nested tuples of Fractions as plain strings."""
    if isinstance(v, (tuple, list)):
        return "(" + ", ".join(fmt(x) for x in v) + ")"
    return str(v)


X = build_flag("A", (), rank=2)
ke = ke_metric(X, 1)
f = degree_functional(X, ke.metric)
print("Kähler-Einstein weight (lambda = 1):", fmt(ke.metric.weight))
print("degree functional:", fmt(f.coeffs))
print("Pic0 basis:", [b.weight for b in pic0_basis(X, ke.metric)])
print("O(1) =", anticanonical_root(X, 1).weight)

F3 = line_bundle(X, (-3, 0)) @ line_bundle(X, (0, 3))
print("F_3 =", F3.weight, " degree", f(F3))

# scaling the metric rescales the functional but not its kernel
print("functional of 5 * omega_0:", fmt(degree_functional(X, ke.metric * 5).coeffs))

# the A3 full flag has a rank two Pic0 and a less obvious basis
Y = build_flag("A", (), rank=3)
omega = ke_metric(Y, Fraction(1, 2)).metric
print("A3 functional:", fmt(degree_functional(Y, omega).coeffs))
print("A3 Pic0 basis:", [b.weight for b in pic0_basis(Y, omega)])
