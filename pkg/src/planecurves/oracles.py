"""Independent cross-checks that avoid the Groebner engine.

* :func:`span_dim` -- dimension of the degree-``k`` piece of a homogeneous
  ideal by exact Gaussian elimination on coefficient vectors.
* Monomial-ideal membership by brute-force divisibility, for checking
  intersection, colon and saturation.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .poly import MultiPoly, homogeneous_degree, mono_mul


def monomials_of_degree(k):
    if k < 0:
        return []
    out = []
    for a in range(k, -1, -1):
        for b in range(k - a, -1, -1):
            out.append((a, b, k - a - b, 0))
    return out


def rank(rows):
    """Exact rank of a list of sparse rows (``dict`` column -> number)."""
    pivots = {}
    r = 0
    for row in rows:
        row = {c: Fraction(v) for c, v in row.items() if v}
        while row:
            col = min(row)
            if col not in pivots:
                lead = row[col]
                pivots[col] = {c: v / lead for c, v in row.items()}
                r += 1
                break
            piv = pivots[col]
            f = row[col]
            for c, v in piv.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return r


def span_dim(generators, k):
    """``dim (g_1, ..., g_s)_k`` for homogeneous generators, by linear algebra."""
    index = {m: i for i, m in enumerate(monomials_of_degree(k))}
    rows = []
    for g in generators:
        if g.is_zero():
            continue
        e = k - homogeneous_degree(g)
        for m in monomials_of_degree(e):
            rows.append({index[mono_mul(m, mg)]: c for mg, c in g.as_dict().items()})
    return rank(rows)


# -- monomial ideals ----------------------------------------------------------


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def in_monomial_ideal(m, gens):
    return any(divides(g, m) for g in gens)


def all_monomials(max_degree):
    for k in range(max_degree + 1):
        yield from (m[:3] for m in monomials_of_degree(k))


def brute_intersection(m, gens_i, gens_j):
    return in_monomial_ideal(m, gens_i) and in_monomial_ideal(m, gens_j)


def brute_colon(m, gens_i, gens_j):
    return all(in_monomial_ideal(tuple(a + b for a, b in zip(m, g)), gens_i) for g in gens_j)


def brute_saturation(m, gens_i, gens_j, power=12):
    """``m`` in ``I : J^power`` for monomial ``J`` (all products of ``power`` generators)."""
    prods = {(0, 0, 0)}
    for _ in range(power):
        prods = {tuple(a + b for a, b in zip(p, g)) for p in prods for g in gens_j}
    return all(in_monomial_ideal(tuple(a + b for a, b in zip(m, p)), gens_i) for p in prods)


def monomial_poly(exps):
    return MultiPoly({tuple(exps): 1})


def random_monomial_ideal(rng, max_gens=4, max_degree=4):
    n = rng.randint(1, max_gens)
    gens = set()
    while len(gens) < n:
        k = rng.randint(1, max_degree)
        a = rng.randint(0, k)
        b = rng.randint(0, k - a)
        gens.add((a, b, k - a - b))
    return sorted(gens)


def random_poly(rng, max_terms=6, max_degree=5, coeff_range=9, rational=False):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        m = tuple(rng.randint(0, max_degree) for _ in range(3))
        if sum(m) > max_degree:
            continue
        c = rng.randint(-coeff_range, coeff_range)
        if rational:
            c = Fraction(c, rng.randint(1, 5))
        terms[m] = terms.get(m, 0) + c
    return MultiPoly(terms)


def random_unimodular(rng, entries=(-1, 0, 1, 2)):
    """Random 3x3 integer matrix with determinant +/-1."""
    while True:
        m = [[rng.choice(entries) for _ in range(3)] for _ in range(3)]
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        if det in (1, -1):
            return m


def seeded(seed):
    return random.Random(seed)

