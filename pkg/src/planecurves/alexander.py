"""Cyclotomic products and global Alexander-polynomial bookkeeping.

Every Alexander-type polynomial handled by the package is a product of
cyclotomic polynomials, so it is stored as a multiset of cyclotomic indices
(:class:`CyclotomicProduct`) and only expanded on demand.  Eigenvalues of
the monodromy are carried symbolically by their order; no floating-point
root of unity appears anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import InconsistentTopology, InexactDivision, NegativeMultiplicity
from .poly import UniPolyZ, univ_exact_div


def divisors(n):
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_prime_power(n):
    """True for ``p**a`` with ``p`` prime and ``a >= 1``."""
    return n > 1 and len(prime_factors(n)) == 1


def totient(n):
    out = n
    for p in prime_factors(n):
        out = out // p * (p - 1)
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """The ``n``-th cyclotomic polynomial.

    Obtained from ``t**n - 1`` by exact division by every ``Phi_d`` with
    ``d`` a proper divisor of ``n``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    p = UniPolyZ.t_power_minus_one(n)
    for d in divisors(n)[:-1]:
        p = univ_exact_div(p, cyclotomic_poly(d))
    return p


class CyclotomicProduct:
    """Finite product ``prod Phi_n ** e_n`` stored as ``{n: e_n}``.

    Negative exponents are allowed for intermediate quotients; such a
    product is not polynomial-valued and cannot be expanded.
    """

    __slots__ = ("factors",)

    def __init__(self, factors=None):
        items = factors.items() if hasattr(factors, "items") else (factors or ())
        acc = {}
        for n, e in items:
            n, e = int(n), int(e)
            if n < 1:
                raise ValueError(f"cyclotomic index must be positive, got {n}")
            acc[n] = acc.get(n, 0) + e
        self.factors = {n: e for n, e in sorted(acc.items()) if e}

    def __repr__(self):
        return f"CyclotomicProduct({self.factors})"

    def __str__(self):
        if not self.factors:
            return "1"
        parts = []
        for n, e in self.factors.items():
            parts.append(f"Phi{n}" if e == 1 else f"Phi{n}^{e}")
        return "*".join(parts)

    def __eq__(self, other):
        if isinstance(other, CyclotomicProduct):
            return self.factors == other.factors
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.factors.items()))

    def __mul__(self, other):
        acc = dict(self.factors)
        for n, e in other.factors.items():
            acc[n] = acc.get(n, 0) + e
        return CyclotomicProduct(acc)

    def __truediv__(self, other):
        return self * CyclotomicProduct({n: -e for n, e in other.factors.items()})

    def __pow__(self, k):
        return CyclotomicProduct({n: e * k for n, e in self.factors.items()})

    def multiplicity(self, n):
        return self.factors.get(n, 0)

    def indices(self):
        return list(self.factors)

    def is_polynomial(self):
        return all(e >= 0 for e in self.factors.values())

    def degree(self):
        return sum(e * totient(n) for n, e in self.factors.items())

    def divides(self, other):
        return all(other.multiplicity(n) >= e for n, e in self.factors.items() if e > 0)

    def substitute_power(self, m):
        """Cyclotomic form of ``P(t**m)``."""
        out = CyclotomicProduct()
        for n, e in self.factors.items():
            out = out * (phi_of_power(n, m) ** e)
        return out

    def expand(self):
        return expand(self)

    def to_json(self):
        return {str(n): e for n, e in self.factors.items()}


def tn_minus_1(n):
    """``t**n - 1`` as ``{k: 1 for k | n}``."""
    return CyclotomicProduct({k: 1 for k in divisors(n)})


def phi_of_power(n, m):
    """Cyclotomic form of ``Phi_n(t**m)``.

    Uses ``Phi_n = prod_{k | n} (t**k - 1)**mobius(n/k)``.
    """
    out = CyclotomicProduct()
    for k in divisors(n):
        mu = _mobius(n // k)
        if mu:
            out = out * (tn_minus_1(k * m) ** mu)
    return out


def _mobius(n):
    ps = prime_factors(n)
    prod = 1
    for p in ps:
        prod *= p
    if prod != n:
        return 0
    return -1 if len(ps) % 2 else 1


def expand(c):
    """Expanded integer polynomial of a polynomial-valued product."""
    if not c.is_polynomial():
        raise NegativeMultiplicity(f"{c} has negative multiplicities")
    out = UniPolyZ([1])
    for n, e in c.factors.items():
        out = out * (cyclotomic_poly(n) ** e)
    return out


def cyclotomic_content(p, max_index=None):
    """Write ``p`` as (+/-) a product of cyclotomic polynomials.

    Divides out ``Phi_n`` for ``n = 1, 2, ...`` while it divides exactly.
    Raises :class:`InexactDivision` if something other than a unit remains.
    Returns ``(sign, product)``.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no cyclotomic factorisation")
    if max_index is None:
        # phi(n) >= sqrt(n/2), so indices beyond 2*deg^2 cannot occur
        max_index = max(2, 2 * p.degree() ** 2)
    factors = {}
    rest = p
    n = 1
    while rest.degree() > 0 and n <= max_index:
        phi = cyclotomic_poly(n)
        if phi.degree() <= rest.degree():
            while True:
                q, r = rest.divmod(phi)
                if not r.is_zero():
                    break
                factors[n] = factors.get(n, 0) + 1
                rest = q
        n += 1
    if rest.degree() != 0 or abs(rest.coeffs[0]) != 1:
        raise InexactDivision(f"{p} is not a product of cyclotomic polynomials")
    return rest.coeffs[0], CyclotomicProduct(factors)


def global_bound(locals_, d, restrict_to_divisors=True):
    """Divisibility bound for the global Alexander polynomial.

    The product of the local Alexander polynomials, keeping only indices
    dividing the degree ``d`` (monodromy eigenvalues are ``d``-th roots of
    unity).  ``restrict_to_divisors=False`` returns the bare product.
    """
    out = CyclotomicProduct()
    for loc in locals_:
        if not loc.is_polynomial():
            raise NegativeMultiplicity(f"local polynomial {loc} is not polynomial-valued")
        out = out * loc
    if restrict_to_divisors:
        out = CyclotomicProduct({n: e for n, e in out.factors.items() if d % n == 0})
    return out


def zariski_filter(bound, irreducible):
    """Drop the prime-power orders (and order 1) for an irreducible curve.

    For irreducible curves ``Delta_1(1) = +/-1``, which excludes both
    ``Phi_{p^a}`` (value ``p`` at 1) and ``Phi_1`` (value 0).  Reducible
    curves are returned unchanged.
    """
    if not irreducible:
        return CyclotomicProduct(bound.factors)
    return CyclotomicProduct(
        {n: e for n, e in bound.factors.items() if n != 1 and not is_prime_power(n)}
    )


def abelian_alexander(r):
    """``Delta_1 = (t - 1)**(r - 1)`` for a curve with abelian fundamental group."""
    if r < 1:
        raise ValueError("number of components must be positive")
    return CyclotomicProduct({1: r - 1})


@dataclass(frozen=True)
class EigenvalueIndex:
    """The eigenvalue ``exp(2 pi i (d + 1 - j) / d)``, kept symbolically."""

    d: int
    j: int

    def __post_init__(self):
        if not 1 <= self.j <= self.d:
            raise ValueError(f"index j={self.j} outside 1..{self.d}")

    @property
    def numerator(self):
        """``(d + 1 - j) mod d``: the eigenvalue is ``exp(2 pi i numerator / d)``."""
        return (self.d + 1 - self.j) % self.d

    @property
    def order(self):
        return self.d // gcd(self.d, self.d + 1 - self.j)


@dataclass(frozen=True)
class BettiSummary:
    chi_U: int
    chi_F: int
    b1_F: int
    b2_F: int

    def as_dict(self):
        return {"chi_U": self.chi_U, "chi_F": self.chi_F, "b1_F": self.b1_F, "b2_F": self.b2_F}


def curve_euler_characteristic(d, sings):
    """``chi(C) = 3d - d^2 + sum mu_p`` for a reduced plane curve of degree ``d``."""
    return 3 * d - d * d + sum(s.mu for s in sings)


def milnor_fiber_betti(d, genus, sings, delta1_degree, chi_C=None):
    """Euler characteristics and Betti numbers of the Milnor fiber.

    For an irreducible curve ``chi(C) = 2 - 2*genus - sum(branches - 1)``.
    For several components pass ``chi_C`` explicitly (for instance from
    :func:`curve_euler_characteristic`).  Then ``chi(U) = 3 - chi(C)``,
    ``chi(F) = d * chi(U)``, ``b1 = delta1_degree`` and
    ``b2 = chi(F) - 1 + b1``.
    """
    if chi_C is None:
        chi_C = 2 - 2 * genus - sum(s.branches - 1 for s in sings)
    chi_U = 3 - chi_C
    chi_F = d * chi_U
    b1 = delta1_degree
    b2 = chi_F - 1 + b1
    if b1 < 0 or b2 < 0:
        raise InconsistentTopology(f"negative Betti number (b1={b1}, b2={b2})")
    return BettiSummary(chi_U=chi_U, chi_F=chi_F, b1_F=b1, b2_F=b2)
