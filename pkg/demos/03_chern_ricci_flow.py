"""Chern-Ricci flow on U(O(k) + F_l) over P(T_P2).

The family Omega_s = (lambda - s) delta_P + (fiber part) solves the
Chern-Ricci flow on (-inf, lambda).  Along it the t-Gauduchon Ricci form is a
multiple c(s, t) of delta_P, and for each s exactly one t makes it vanish.
"""

from fractions import Fraction

from flagflow import (
    build_flag,
    build_theorem_a,
    calabi_yau_integrality,
    flat_time,
    gauduchon_ricci,
    is_balanced,
    t_flat_parameter,
    verify_flow_ode,
)


def fmt(v):
    """Nested tuples of Fractions as plain strings."""
    if isinstance(v, (tuple, list)):
        return "(" + ", ".join(fmt(x) for x in v) + ")"
    return str(v)


X = build_flag("A", (), rank=2)
lam, k, l = Fraction(1), 2, 1
cfg = build_theorem_a(X, lam, k, [(-l, l)])
print("summands of E:", [L.weight for L in cfg.summands])

for s in (Fraction(-2), Fraction(0), Fraction(1, 2), Fraction(9, 10)):
    t = t_flat_parameter(cfg, s)
    print(f"s={str(s):>5}  c(s,1)={gauduchon_ricci(cfg, s, 1).coefficient}  "
          f"c(s,-1)={str(gauduchon_ricci(cfg, s, -1).coefficient):>6}  t_flat={t}")

print("Bismut Ricci-flat at s =", flat_time(cfg, -1))
print("Lichnerowicz Ricci-flat at s =", flat_time(cfg, 0))

print("ODE residual, Chern (t=1):", fmt(verify_flow_ode(cfg, 1, Fraction(0), Fraction(1, 3))))
print("ODE residual, Bismut (t=-1):", fmt(verify_flow_ode(cfg, -1, Fraction(0), Fraction(1, 3))))

cert = is_balanced(cfg, 0)
print("balanced:", cert.balanced, " traces:", fmt(cert.traces))
for lam in (Fraction(3), Fraction(1, 3)):
    rep = calabi_yau_integrality(build_theorem_a(X, lam, k, [(-l, l)]))
    print(f"lambda={lam}: I*lambda={rep.fano_index_times_lambda}, c1 = 0 integrally: {rep.integral}")
