"""Buchberger's algorithm and the ideal operations built on it.

The engine works on fraction-free integer polynomials (``dict`` from
monomial to ``int``), which is considerably faster than carrying
:class:`~fractions.Fraction` coefficients through every reduction step.
Results are handed back as monic :class:`~planecurves.poly.MultiPoly`
values over the rationals.
"""
from __future__ import annotations

import heapq
from fractions import Fraction
from math import comb, gcd

from .errors import InexactDivision, ResourceLimit
from .poly import (
    ELIM,
    GREVLEX,
    MonomialOrder,
    MultiPoly,
    ZERO_MONO,
    homogeneous_degree,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

#: Default cap on elementary reduction steps per Buchberger run.
DEFAULT_STEP_BUDGET = 200_000


class Ideal:
    """An ideal of ``Q[x, y, z]`` (or ``Q[x, y, z, w]``) given by generators.

    Zero generators are dropped.  An ideal with no generators left is the
    zero ideal.  ``homogeneous`` is inferred when not given; if it is given
    as true every generator must be homogeneous.
    """

    def __init__(self, generators, homogeneous=None):
        gens = tuple(g.with_order(GREVLEX) for g in generators if not g.is_zero())
        inferred = all(g.is_homogeneous() for g in gens)
        if homogeneous is None:
            homogeneous = inferred
        elif homogeneous and not inferred:
            for g in gens:
                homogeneous_degree(g)  # raises NotHomogeneous
        self.generators = gens
        self.homogeneous = bool(homogeneous)
        self._gb = {}

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.generators]})"

    def is_zero(self):
        return not self.generators

    def groebner(self, order=GREVLEX, budget=None):
        """Reduced Groebner basis, cached per monomial order."""
        gb = self._gb.get(order)
        if gb is None:
            gb = buchberger(self, order, budget=budget)
            self._gb[order] = gb
        return gb

    def contains(self, p):
        return self.groebner().normal_form(p).is_zero()

    def is_unit(self):
        return self.groebner().is_unit()

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.groebner() == other.groebner()

    __hash__ = None

    def __contains__(self, p):
        return self.contains(p)


# ---------------------------------------------------------------------------
# integer polynomial kernel


def _to_int(p):
    """Clear denominators of a MultiPoly and return a primitive int dict."""
    d = p.as_dict()
    den = 1
    for c in d.values():
        den = den * c.denominator // gcd(den, c.denominator)
    out = {m: int(c * den) for m, c in d.items()}
    return _primitive(out)


def _content(d):
    g = 0
    for c in d.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def _primitive(d):
    g = _content(d)
    if g > 1:
        d = {m: c // g for m, c in d.items()}
    return d


def _leading(d, key):
    return max(d, key=key)


class _Budget:
    __slots__ = ("left", "limit")

    def __init__(self, limit):
        self.limit = limit
        self.left = limit

    def spend(self, n=1):
        self.left -= n
        if self.left < 0:
            raise ResourceLimit(f"reduction step budget of {self.limit} exhausted")


def _reduce(p, basis, key, budget, full=True):
    """Reduce the int dict ``p`` modulo ``basis`` (list of (lm, lc, dict)).

    Returns ``(r, scale)`` with ``scale * p == r (mod basis)``.  When
    ``full`` is false only the leading term is reduced (top reduction).
    """
    p = dict(p)
    r = {}
    scale = 1
    heap = [(_neg(key(m)), m) for m in p]
    heapq.heapify(heap)
    while heap:
        _, m = heapq.heappop(heap)
        c = p.get(m)
        if not c:
            continue
        # skip duplicates of the same monomial
        while heap and heap[0][1] == m:
            heapq.heappop(heap)
        for lm, lc, g in basis:
            if mono_divides(lm, m):
                break
        else:
            r[m] = p.pop(m)
            if not full:
                r.update(p)
                return r, scale
            continue
        budget.spend()
        t = mono_div(m, lm)
        h = gcd(c, lc)
        a = lc // h
        b = c // h
        if a != 1:
            if a == -1:
                p = {k: -v for k, v in p.items()}
                r = {k: -v for k, v in r.items()}
            else:
                p = {k: v * a for k, v in p.items()}
                r = {k: v * a for k, v in r.items()}
            scale *= a
        for mg, cg in g.items():
            mm = mono_mul(t, mg)
            v = p.get(mm, 0) - b * cg
            if v:
                if mm not in p:
                    heapq.heappush(heap, (_neg(key(mm)), mm))
                p[mm] = v
            else:
                p.pop(mm, None)
    return r, scale


def _neg(k):
    return tuple(-v for v in k)


def _spoly(f, g):
    (lmf, lcf, df), (lmg, lcg, dg) = f, g
    L = mono_lcm(lmf, lmg)
    tf = mono_div(L, lmf)
    tg = mono_div(L, lmg)
    h = gcd(lcf, lcg)
    af = lcg // h
    ag = lcf // h
    out = {}
    for m, c in df.items():
        out[mono_mul(tf, m)] = c * af
    for m, c in dg.items():
        mm = mono_mul(tg, m)
        v = out.get(mm, 0) - c * ag
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    return out


def _entry(d, key):
    lm = _leading(d, key)
    lc = d[lm]
    if lc < 0:
        d = {m: -c for m, c in d.items()}
        lc = -lc
    return (lm, lc, d)


def _update(G, pairs, h_index, G_lms, key):
    """Gebauer-Moeller installation of the new element ``G[h_index]``.

    ``pairs`` is a dict ``(i, j) -> lcm``.  Applies the product criterion
    and the chain criterion.
    """
    lmh = G_lms[h_index]
    # chain criterion on old pairs
    for (i, j), L in list(pairs.items()):
        if (
            mono_divides(lmh, L)
            and mono_lcm(G_lms[i], lmh) != L
            and mono_lcm(G_lms[j], lmh) != L
        ):
            del pairs[(i, j)]
    candidates = {}
    for i in range(h_index):
        if G_lms[i] is None:
            continue
        L = mono_lcm(G_lms[i], lmh)
        candidates.setdefault(L, []).append(i)
    kept = []
    for L in sorted(candidates, key=key):
        if any(mono_divides(L2, L) for L2 in kept):
            continue
        kept.append(L)
    for L in kept:
        idx = candidates[L]
        # product criterion: coprime leading monomials give a zero S-polynomial
        if any(mono_mul(G_lms[i], lmh) == L for i in idx):
            continue
        pairs[(min(idx), h_index)] = L


def _groebner_int(polys, order, budget):
    """Core Buchberger loop on primitive int dicts; returns reduced basis entries."""
    key = order.key
    G = []  # entries (lm, lc, dict)
    lms = []
    pairs = {}
    queue = []

    def install(d):
        e = _entry(d, key)
        if e[0] == ZERO_MONO:
            return True
        G.append(e)
        lms.append(e[0])
        _update(G, pairs, len(G) - 1, lms, key)
        return False

    # autoreduce the input lightly: sort by leading monomial
    work = sorted((d for d in polys if d), key=lambda d: key(_leading(d, key)))
    for d in work:
        r, _ = _reduce(d, [g for g in G], key, budget)
        if r:
            if install(_primitive(r)):
                return [(ZERO_MONO, 1, {ZERO_MONO: 1})]

    while pairs:
        # normal selection: smallest lcm first
        (i, j) = min(pairs, key=lambda ij: (key(pairs[ij]), ij))
        del pairs[(i, j)]
        s = _spoly(G[i], G[j])
        if not s:
            continue
        r, _ = _reduce(s, G, key, budget)
        if r:
            if install(_primitive(r)):
                return [(ZERO_MONO, 1, {ZERO_MONO: 1})]
    return _interreduce(G, key, budget)


def _interreduce(G, key, budget):
    # minimal basis: drop elements whose lm is divisible by another's
    G = sorted(G, key=lambda e: key(e[0]))
    minimal = []
    for e in G:
        if not any(mono_divides(f[0], e[0]) for f in minimal):
            minimal.append(e)
    out = []
    for k, e in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1 :]
        r, _ = _reduce(e[2], others, key, budget)
        out.append(_entry(_primitive(r), key))
    return out


# ---------------------------------------------------------------------------
# public API


class GroebnerBasis:
    """A reduced Groebner basis: monic, inter-reduced, sorted by leading monomial."""

    def __init__(self, elements, order, _int_entries=None):
        self.order = order
        key = order.key
        elems = [e.with_order(order).monic() for e in elements]
        elems.sort(key=lambda e: key(e.lm()))
        self.elements = tuple(elems)
        self.leading_monomials = tuple(e.lm() for e in elems)
        if _int_entries is None:
            _int_entries = [_entry(_to_int(e), key) for e in elems]
        self._int = sorted(_int_entries, key=lambda e: key(e[0]))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.order == other.order and set(self.elements) == set(other.elements)

    __hash__ = None

    def __repr__(self):
        return f"GroebnerBasis({[str(e) for e in self.elements]}, {self.order.kind})"

    def is_unit(self):
        return self.leading_monomials == (ZERO_MONO,)

    def normal_form(self, p, budget=None):
        return normal_form(p, self, budget=budget)

    def ideal(self):
        return Ideal(self.elements)

    def standard_monomials(self, k):
        """Degree-``k`` monomials in x, y, z divisible by no leading monomial."""
        out = []
        for a in range(k, -1, -1):
            for b in range(k - a, -1, -1):
                m = (a, b, k - a - b, 0)
                if not any(mono_divides(l, m) for l in self.leading_monomials):
                    out.append(m)
        return out


def buchberger(ideal, order=GREVLEX, budget=None):
    """Reduced Groebner basis of ``ideal`` with respect to ``order``.

    Raises
    ------
    ResourceLimit
        when more than ``budget`` elementary reduction steps are needed
        (default :data:`DEFAULT_STEP_BUDGET`).
    """
    if isinstance(ideal, (list, tuple)):
        ideal = Ideal(ideal)
    bud = _Budget(DEFAULT_STEP_BUDGET if budget is None else budget)
    polys = [_to_int(g) for g in ideal.generators]
    if not polys:
        return GroebnerBasis([], order, _int_entries=[])
    entries = _groebner_int(polys, order, bud)
    elements = []
    for lm, lc, d in entries:
        elements.append(MultiPoly({m: Fraction(c, lc) for m, c in d.items()}, order))
    return GroebnerBasis(elements, order)


def normal_form(p, gb, budget=None):
    """Remainder of ``p`` on division by the Groebner basis ``gb``.

    The result is exact over the rationals; it is zero iff ``p`` lies in the
    ideal.
    """
    if p.is_zero() or not gb._int:
        return p.with_order(gb.order)
    bud = _Budget(DEFAULT_STEP_BUDGET if budget is None else budget)
    d = p.as_dict()
    den = 1
    for c in d.values():
        den = den * c.denominator // gcd(den, c.denominator)
    ip = {m: int(c * den) for m, c in d.items()}
    r, scale = _reduce(ip, gb._int, gb.order.key, bud)
    total = den * scale
    return MultiPoly({m: Fraction(c, total) for m, c in r.items()}, gb.order)


def s_polynomial(f, g, order=GREVLEX):
    """S-polynomial of two rational polynomials (used for basis checks)."""
    f = f.with_order(order)
    g = g.with_order(order)
    lf, lg = f.lm(), g.lm()
    L = mono_lcm(lf, lg)
    return f.mul_term(mono_div(L, lf), 1 / f.lc()) - g.mul_term(mono_div(L, lg), 1 / g.lc())


def is_groebner(gb):
    """Check that every S-polynomial of ``gb`` reduces to zero."""
    els = gb.elements
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            if not normal_form(s_polynomial(els[i], els[j], gb.order), gb).is_zero():
                return False
    return True


def exact_divide(a, b):
    """Multivariate exact quotient ``a / b``; raises :class:`InexactDivision`."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    a = a.with_order(GREVLEX)
    b = b.with_order(GREVLEX)
    lmb, lcb = b.lm(), b.lc()
    q = {}
    r = a
    while not r.is_zero():
        lm = r.lm()
        if not mono_divides(lmb, lm):
            raise InexactDivision("remainder is nonzero")
        t = mono_div(lm, lmb)
        c = r.lc() / lcb
        q[t] = q.get(t, 0) + c
        r = r - b.mul_term(t, c)
    return MultiPoly(q)


def _w_free(gb):
    return [g for g in gb.elements if not g.uses_w()]


def ideal_intersection(i, j, budget=None):
    """Generators of ``i`` meet ``j``, by eliminating an auxiliary variable.

    Uses the ideal ``w*i + (1 - w)*j`` and keeps the ``w``-free elements of
    its Groebner basis under the block order ``w >> grevlex(x, y, z)``.
    """
    if i.is_zero() or j.is_zero():
        return Ideal([])
    w = MultiPoly.var("w")
    gens = [w * f for f in i.generators] + [(1 - w) * g for g in j.generators]
    gb = buchberger(Ideal(gens, homogeneous=False), ELIM, budget=budget)
    return Ideal(
        [g.with_order(GREVLEX) for g in _w_free(gb)],
        homogeneous=(i.homogeneous and j.homogeneous) or None,
    )


def colon(i, j, budget=None):
    """The ideal quotient ``i : j = {g : g*j in i}``.

    For each generator ``h`` of ``j`` compute ``(i meet (h)) / h``, then
    intersect the results.
    """
    if j.is_zero():
        raise ValueError("colon by the zero ideal")
    if i.is_zero():
        return Ideal([])
    parts = []
    for h in j.generators:
        inter = ideal_intersection(i, Ideal([h]), budget=budget)
        parts.append(Ideal([exact_divide(g, h) for g in inter.generators]))
    out = parts[0]
    for part in parts[1:]:
        out = ideal_intersection(out, part, budget=budget)
    # reduced basis generators keep later steps small
    gb = out.groebner(GREVLEX, budget=budget)
    return Ideal(gb.elements, homogeneous=(i.homogeneous and j.homogeneous) or None)


def saturation(i, j, budget=None, max_steps=64):
    """``i : j^infinity``, by iterating :func:`colon` until the basis repeats."""
    cur = Ideal(i.groebner(GREVLEX, budget=budget).elements, homogeneous=i.homogeneous or None)
    if cur.is_zero():
        return cur
    for _ in range(max_steps):
        nxt = colon(cur, j, budget=budget)
        if nxt.groebner(GREVLEX, budget=budget) == cur.groebner(GREVLEX, budget=budget):
            return cur
        cur = nxt
    raise ResourceLimit(f"saturation did not stabilize within {max_steps} colon steps")


def graded_dim(i, k, budget=None):
    """Dimension of the degree-``k`` piece of the homogeneous ideal ``i``."""
    if not i.homogeneous:
        raise ValueError("graded_dim needs a homogeneous ideal")
    if k < 0:
        return 0
    total = comb(k + 2, 2)
    if i.is_zero():
        return 0
    gb = i.groebner(GREVLEX, budget=budget)
    return total - len(gb.standard_monomials(k))


def irrelevant_ideal():
    return Ideal([MultiPoly.var("x"), MultiPoly.var("y"), MultiPoly.var("z")])


def unit_ideal():
    return Ideal([MultiPoly.constant(1)])
