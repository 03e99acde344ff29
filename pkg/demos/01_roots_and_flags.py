"""Root data and flag manifolds, starting from A2.

The full flag of SL3 is the threefold P(T_P2).  We build its root system,
check the pairing rule <a w1 + b w2, (a1 + a2)^vee> = a + b, and compare the
full flag with P2 and with the projective spaces P^n.
"""

from fractions import Fraction

from flagflow import Weight, build_flag, build_root_system, fano_index, pairing


def fmt(v):
    """Nested tuples of Fractions as plain strings."""
    if isinstance(v, (tuple, list)):
        return "(" + ", ".join(fmt(x) for x in v) + ")"
    return str(v)


rs = build_root_system("A", 2)
print("A2 Cartan matrix:", rs.cartan)
print("positive roots (simple-root coordinates):", [r.coords for r in rs.positive_roots])

a, b = Fraction(3, 2), Fraction(-5)
print(f"<{a} w1 + {b} w2, (a1+a2)^vee> =", pairing(rs, Weight((a, b)), (1, 1)))

full = build_flag(rs, ())
p2 = build_flag(rs, (2,))
for name, X in (("full flag", full), ("P2", p2)):
    print(f"{name:10s} dim={X.dim_complex}  rho={X.picard_rank}  delta_P={fmt(X.delta_p.coords)}  "
          f"Fano index={fano_index(X)}")

# P^n is the flag of A_n with every simple root but the first in the parabolic
for n in range(1, 6):
    X = build_flag(build_root_system("A", n), range(2, n + 1))
    print(f"P^{n}: Fano index {fano_index(X)}")

# the same code handles every simple type
for family, rank in (("B", 3), ("G", 2), ("E", 8)):
    R = build_root_system(family, rank)
    print(f"{family}{rank}: {len(R.positive_roots)} positive roots, symmetrizers {R.symmetrizers}")
