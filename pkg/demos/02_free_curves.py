"""
Free and nearly free members of a family
========================================

The family ``(xz - y^2)^3 - x^2 (t (xz - y^2) - xy)^2`` is nearly free for
``t != 0`` and becomes free at ``t = 0``.  The curve
``(xz - y^2)^3 - x^2 y^4`` with an E6 and an E14 point is free as well.
"""

from planecurves import CurveEquation, classify_freeness, nf_dims, parse_poly, total_tjurina
from planecurves.invariants import minimal_syzygy_degree

family = "(x*z - y^2)^3 - x^2*({t}*(x*z - y^2) - x*y)^2"

for t in (0, 1, 2, -1):
    c = CurveEquation(parse_poly(family.format(t=t)))
    tau = total_tjurina(c)
    cls = classify_freeness(c.d, tau, mdr=minimal_syzygy_degree(c))
    print(f"t={t:>2}  tau={tau}  {cls}")

###############################################################################
# A free curve has N(f) = 0: its Jacobian ideal is already saturated.
c = CurveEquation(parse_poly("(x*z - y^2)^3 - x^2*y^4"))
print("E6 + E14:", classify_freeness(6, total_tjurina(c), mdr=minimal_syzygy_degree(c)))
print("N(f) dims:", nf_dims(c))
print("J_f saturated:", c.jacobian == c.saturated)
