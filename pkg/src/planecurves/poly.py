"""Exact polynomial arithmetic.

Two polynomial types live here:

* :class:`MultiPoly` -- sparse polynomials with :class:`fractions.Fraction`
  coefficients in the variables ``x, y, z`` and one auxiliary variable ``w``
  reserved for elimination.
* :class:`UniPolyZ` -- dense univariate polynomials in ``t`` with integer
  coefficients, lowest degree first.

Monomials are exponent 4-tuples ``(e_x, e_y, e_z, e_w)``.  Every value is
immutable once built.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .errors import InexactDivision, NotHomogeneous, ZeroPolynomial

VARIABLES = ("x", "y", "z", "w")
NVARS = 4

ZERO_MONO = (0, 0, 0, 0)


def mono_mul(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def mono_div(a, b):
    """Return ``a / b`` assuming ``b`` divides ``a``."""
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])


def mono_divides(b, a):
    return b[0] <= a[0] and b[1] <= a[1] and b[2] <= a[2] and b[3] <= a[3]


def mono_lcm(a, b):
    return (max(a[0], b[0]), max(a[1], b[1]), max(a[2], b[2]), max(a[3], b[3]))


def mono_degree(a):
    return a[0] + a[1] + a[2] + a[3]


def _grevlex_key(m):
    # higher degree first; ties broken by the smaller exponent of the last variable
    return (m[0] + m[1] + m[2] + m[3], -m[3], -m[2], -m[1])


def _elim_key(m):
    # w-block dominates, grevlex(x, y, z) inside
    return (m[3], m[0] + m[1] + m[2], -m[2], -m[1])


class MonomialOrder:
    """A monomial order on ``x > y > z`` (and the auxiliary ``w``).

    ``kind`` is ``"grevlex"`` or ``"elim"``.  The elimination order puts the
    single auxiliary variable ``w`` in a block above graded reverse
    lexicographic order on ``x, y, z``.
    """

    __slots__ = ("kind", "key")

    def __init__(self, kind="grevlex"):
        if kind == "grevlex":
            key = _grevlex_key
        elif kind == "elim":
            key = _elim_key
        else:
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.key = key

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.kind == self.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"MonomialOrder({self.kind!r})"


GREVLEX = MonomialOrder("grevlex")
ELIM = MonomialOrder("elim")


def _coerce(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient {c!r}")


class MultiPoly:
    """Sparse polynomial over the rationals.

    Parameters
    ----------
    terms : mapping or iterable of (monomial, coefficient)
        Monomials may be given as 3-tuples (``w`` exponent 0) or 4-tuples.
        Duplicates are summed and zero coefficients dropped.
    order : MonomialOrder, optional
        Order used for :attr:`terms`, :meth:`lm` and friends.
    """

    __slots__ = ("_d", "order", "_hash")

    def __init__(self, terms=(), order=GREVLEX):
        d = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for m, c in items:
            m = tuple(m)
            if len(m) == 3:
                m = m + (0,)
            elif len(m) != NVARS:
                raise ValueError(f"bad monomial {m!r}")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m!r}")
            c = _coerce(c)
            d[m] = d.get(m, 0) + c
        self._d = {m: c for m, c in d.items() if c != 0}
        self.order = order
        self._hash = None

    @classmethod
    def _raw(cls, d, order=GREVLEX):
        # trusted constructor: d is already canonical (Fraction values, no zeros)
        p = cls.__new__(cls)
        p._d = d
        p.order = order
        p._hash = None
        return p

    @classmethod
    def constant(cls, c):
        return cls({ZERO_MONO: c})

    @classmethod
    def var(cls, name):
        i = VARIABLES.index(name)
        m = [0] * NVARS
        m[i] = 1
        return cls._raw({tuple(m): Fraction(1)})

    @classmethod
    def monomial(cls, m, c=1):
        return cls({m: c})

    # -- basic access --------------------------------------------------------

    def as_dict(self):
        return dict(self._d)

    def __len__(self):
        return len(self._d)

    def __bool__(self):
        return bool(self._d)

    def is_zero(self):
        return not self._d

    @property
    def terms(self):
        """(monomial, coefficient) pairs sorted descending by :attr:`order`."""
        key = self.order.key
        return sorted(self._d.items(), key=lambda t: key(t[0]), reverse=True)

    def monomials(self):
        return [m for m, _ in self.terms]

    def coeff(self, m):
        if len(m) == 3:
            m = tuple(m) + (0,)
        return self._d.get(tuple(m), Fraction(0))

    def with_order(self, order):
        return MultiPoly._raw(self._d, order)

    def lm(self):
        if not self._d:
            raise ZeroPolynomial("zero polynomial has no leading monomial")
        return max(self._d, key=self.order.key)

    def lc(self):
        return self._d[self.lm()]

    def total_degree(self):
        if not self._d:
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(mono_degree(m) for m in self._d)

    def uses_w(self):
        return any(m[3] for m in self._d)

    def monic(self):
        if not self._d:
            return self
        c = self.lc()
        return MultiPoly._raw({m: v / c for m, v in self._d.items()}, self.order)

    # -- arithmetic ----------------------------------------------------------

    def _wrap(self, other):
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.constant(other)

    def __add__(self, other):
        other = self._wrap(other)
        d = dict(self._d)
        for m, c in other._d.items():
            v = d.get(m, 0) + c
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return MultiPoly._raw(d, self.order)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self._d.items()}, self.order)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        other = self._wrap(other)
        d = {}
        for m1, c1 in self._d.items():
            for m2, c2 in other._d.items():
                m = mono_mul(m1, m2)
                d[m] = d.get(m, 0) + c1 * c2
        return MultiPoly._raw({m: c for m, c in d.items() if c}, self.order)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(1).with_order(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_term(self, m, c):
        """Multiply by the single term ``c * m``."""
        c = _coerce(c)
        if not c:
            return MultiPoly._raw({}, self.order)
        return MultiPoly._raw(
            {mono_mul(k, m): v * c for k, v in self._d.items()}, self.order
        )

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._d.items()))
        return self._hash

    def __repr__(self):
        from .parser import render

        return f"MultiPoly({render(self)!r})"

    def __str__(self):
        from .parser import render

        return render(self)

    # -- calculus and degree -------------------------------------------------

    def diff(self, var):
        """Formal partial derivative with respect to ``var`` ("x", "y", "z" or "w")."""
        i = VARIABLES.index(var) if isinstance(var, str) else int(var)
        d = {}
        for m, c in self._d.items():
            e = m[i]
            if e:
                mm = list(m)
                mm[i] = e - 1
                d[tuple(mm)] = c * e
        return MultiPoly._raw(d, self.order)

    def subs_linear(self, matrix):
        """Substitute ``(x, y, z) -> matrix @ (x, y, z)``.

        ``matrix`` is a 3x3 nested sequence of rationals; row ``i`` gives the
        image of variable ``i``.
        """
        images = []
        for row in matrix:
            images.append(
                MultiPoly({(1, 0, 0): row[0], (0, 1, 0): row[1], (0, 0, 1): row[2]})
            )
        out = MultiPoly()
        cache = {}
        for m, c in self._d.items():
            if m[3]:
                raise ValueError("linear substitution only acts on x, y, z")
            term = MultiPoly.constant(c)
            for i in range(3):
                if m[i]:
                    key = (i, m[i])
                    if key not in cache:
                        cache[key] = images[i] ** m[i]
                    term = term * cache[key]
            out = out + term
        return out.with_order(self.order)

    def is_homogeneous(self):
        if not self._d:
            return True
        it = iter(self._d)
        d0 = mono_degree(next(it))
        return all(mono_degree(m) == d0 for m in it)


def poly_arith(a, b, op, n=None):
    """Dispatch helper: ``op`` is one of "add", "sub", "mul", "pow".

    For ``pow`` the exponent is ``n`` and ``b`` is ignored.
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "pow":
        if n is None or n < 0:
            raise ValueError("pow needs a non-negative exponent")
        return a**n
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(p, v):
    if v not in ("x", "y", "z"):
        raise ValueError(f"variable must be x, y or z, not {v!r}")
    return p.diff(v)


def homogeneous_degree(p):
    """Degree of a nonzero homogeneous polynomial.

    Raises
    ------
    ZeroPolynomial
        if ``p`` is zero.
    NotHomogeneous
        if the terms have mixed total degrees.
    """
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no degree")
    degs = {mono_degree(m) for m in p.as_dict()}
    if len(degs) != 1:
        raise NotHomogeneous(f"mixed total degrees {sorted(degs)}")
    return degs.pop()


class UniPolyZ:
    """Dense integer polynomial in ``t``; ``coeffs[i]`` multiplies ``t**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def t_power_minus_one(cls, n):
        return cls([-1] + [0] * (n - 1) + [1])

    @classmethod
    def monomial(cls, n, c=1):
        return cls([0] * n + [c])

    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, UniPolyZ):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == UniPolyZ([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPolyZ(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __neg__(self):
        return UniPolyZ(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPolyZ(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPolyZ()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UniPolyZ(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = UniPolyZ([1])
        for _ in range(n):
            result = result * self
        return result

    def compose_power(self, m):
        """Return ``p(t**m)``."""
        if m < 1:
            raise ValueError("m must be positive")
        out = [0] * (m * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return UniPolyZ(out)

    def __call__(self, v):
        return univ_eval(self, v)

    def divmod(self, b):
        """Polynomial division over the integers.

        Returns ``(q, r)`` with ``self = b*q + r``.  Raises
        :class:`InexactDivision` if some quotient coefficient is not an
        integer (this cannot happen when ``b`` is monic).
        """
        if b.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        db = b.degree()
        lb = b.coeffs[-1]
        if len(r) - 1 < db:
            return UniPolyZ(), UniPolyZ(r)
        q = [0] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db]
            if c:
                qc, rem = divmod(c, lb)
                if rem:
                    raise InexactDivision("quotient coefficient is not an integer")
                q[k] = qc
                for i, cb in enumerate(b.coeffs):
                    r[k + i] -= qc * cb
        return UniPolyZ(q), UniPolyZ(r)

    def __repr__(self):
        return f"UniPolyZ({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mon = "t" if i == 1 else f"t^{i}"
                body = mon if a == 1 else f"{a}*{mon}"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def univ_exact_div(a, b):
    """Exact quotient ``a / b``; :class:`InexactDivision` on a nonzero remainder."""
    q, r = a.divmod(b)
    if not r.is_zero():
        raise InexactDivision(f"{b} does not divide {a}")
    return q


def univ_eval(a, v):
    """Horner evaluation of ``a`` at the integer ``v``."""
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * v + c
    return acc
