"""
A rational sextic with two cusps
================================

The sextic ``(y^2 z - x^3)^2 - x^3 y^3`` has an ordinary cusp and a
two-pair cusp.  We compute its Jacobian invariants and the local data that
bound its Alexander polynomial.
"""

from planecurves import CurveEquation, classify_freeness, nf_dims, parse_poly, total_tjurina
from planecurves.alexander import expand, global_bound, zariski_filter
from planecurves.invariants import minimal_syzygy_degree
from planecurves.local import SingularityRecord, genus

f = parse_poly("(y^2*z - x^3)^2 - x^3*y^3")
print("f =", f)
c = CurveEquation(f)

# The total Tjurina number is the degree of the scheme cut out by the
# saturated Jacobian ideal.
tau = total_tjurina(c)
print("tau =", tau)

# The smallest syzygy degree separates the two solutions of the nearly free
# equation, (2, 4) and (3, 3).
mdr = minimal_syzygy_degree(c)
print("minimal syzygy degree =", mdr)
print("class =", classify_freeness(c.d, tau, mdr=mdr))

# N(f) = I_f / J_f is one dimensional in a single degree.
print("dim N(f)_k, k = 0..12:", nf_dims(c))

###############################################################################
# Local data.  The A2 cusp has Newton pair (2, 3); the second cusp has pairs
# (2, 3), (2, 3) and Milnor number 18.
sings = [SingularityRecord.unibranch([(2, 3)]), SingularityRecord.unibranch([(2, 3), (2, 3)])]
for s in sings:
    print(f"{s.label():<18} mu={s.mu:<3} Delta={s.alexander()}  ({expand(s.alexander())})")
print("genus =", genus(6, sings))

# Multiply the local polynomials, keep roots of order dividing 6 and drop the
# prime-power factors that cannot occur for an irreducible curve.
bound = zariski_filter(global_bound([s.alexander() for s in sings], 6), irreducible=True)
print("Delta_1 divides", bound, "=", expand(bound))
