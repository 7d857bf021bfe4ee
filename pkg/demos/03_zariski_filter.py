"""
Cyclotomic bookkeeping for the Alexander polynomial
===================================================

Local Alexander polynomials of cusps are products of cyclotomic
polynomials.  For an irreducible curve the global polynomial takes the
value +/-1 at ``t = 1``, so prime-power cyclotomic factors cannot occur.
"""

from planecurves.alexander import (
    CyclotomicProduct,
    cyclotomic_poly,
    expand,
    global_bound,
    is_prime_power,
    zariski_filter,
)
from planecurves.local import local_alexander
from planecurves.poly import univ_eval

# Phi_n(1) is p when n is a power of the prime p and 1 otherwise.
for n in range(1, 13):
    tag = "prime power" if is_prime_power(n) else ""
    print(f"Phi_{n:<2}(1) = {univ_eval(cyclotomic_poly(n), 1):>2}   {tag}")

###############################################################################
# Six ordinary cusps on a sextic: the bound is Phi6^6, far from sharp.
cusps = [local_alexander([(2, 3)])] * 6
print("six cusps:", zariski_filter(global_bound(cusps, 6), irreducible=True))

# Keeping every root, not only those of order dividing the degree:
two_pair = local_alexander([(2, 3), (2, 3)])
print("unrestricted:", global_bound([two_pair], 6, restrict_to_divisors=False))
print("restricted:  ", global_bound([two_pair], 6))

# A reducible arrangement keeps its prime-power factors.
c = CyclotomicProduct({3: 1, 6: 1})
print("reducible:", zariski_filter(c, irreducible=False), " irreducible:", zariski_filter(c, irreducible=True))
print("expanded:", expand(zariski_filter(c, irreducible=False)))
