"""Balanced pluriclosed flow on U(F_a + F_b) and its collapsed limit.

With only degree-zero summands every t-Gauduchon flow has the same solution,
the metrics stay balanced, and as s -> lambda the base shrinks away.  The
limit is the fiber torus divided by the holonomy, whose dimension is the rank
of the pairing matrix below.
"""

from fractions import Fraction

from flagflow import build_flag, build_theorem_a, build_theorem_b, gh_limit, pluriclosed_flow_report


def fmt(v):
    """Nested tuples of Fractions as plain strings."""
    if isinstance(v, (tuple, list)):
        return "(" + ", ".join(fmt(x) for x in v) + ")"
    return str(v)


X = build_flag("A", (), rank=2)
cfg = build_theorem_b(X, 1, [(-1, 1), (-2, 2)])
rep = pluriclosed_flow_report(cfg, [Fraction(-3), 0, Fraction(1, 2)])
print("Bismut Ricci weight:", fmt(rep.bismut_ricci.weight), " Chern Ricci weight:", fmt(rep.chern_ricci.weight))
for cert, res in zip(rep.certificates, rep.ode_residuals):
    print(f"s={cert.s}: balanced={cert.balanced}, residual at t=-1 {fmt(res)}")

for name, c in (("E_{1,2}", cfg),
                ("E_{2,1} = O(2) + F_1", build_theorem_a(X, 1, 2, [(-1, 1)])),
                ("trivial T^2", build_theorem_b(X, 1, [(0, 0), (0, 0)]))):
    h = gh_limit(c)
    print(f"{name}: holonomy matrix {fmt(h.matrix)}, rank {h.rank}, limit {h.limit}")
