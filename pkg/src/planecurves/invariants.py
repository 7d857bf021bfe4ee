"""Jacobian-ideal invariants of a projective plane curve ``f = 0``.

``J_f`` is the ideal of the partial derivatives, ``I_f`` its saturation by
``(x, y, z)`` and ``N(f) = I_f / J_f``.  From these we read off the total
Tjurina number, the free / nearly free classification and lower bounds for
the monodromy eigenspaces of ``H^2`` of the Milnor fiber.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb, isqrt

from .alexander import EigenvalueIndex
from .errors import NonStabilizing, ValidationError
from .groebner import Ideal, graded_dim, irrelevant_ideal, saturation
from .poly import homogeneous_degree


@dataclass(frozen=True, eq=False)
class CurveEquation:
    """A reduced plane curve.

    ``irreducible`` and ``components`` are taken on trust; they are never
    computed.  The Jacobian ideal and its saturation are cached on the
    instance.
    """

    f: object
    irreducible: bool = True
    components: int = 1
    budget: int = None

    def __post_init__(self):
        d = homogeneous_degree(self.f)
        object.__setattr__(self, "d", d)
        if self.components < 1:
            raise ValidationError("components must be at least 1")
        if (self.components == 1) != bool(self.irreducible):
            raise ValidationError(
                f"irreducible={self.irreducible} contradicts components={self.components}"
            )

    @cached_property
    def jacobian(self):
        return jacobian_ideal(self)

    @cached_property
    def saturated(self):
        return saturation(self.jacobian, irrelevant_ideal(), budget=self.budget)


@dataclass(frozen=True)
class FreenessClass:
    kind: str  # "free", "nearly_free" or "neither"
    tau: int
    exponents: tuple = None

    def __str__(self):
        if self.exponents:
            return f"{self.kind}{self.exponents}"
        return self.kind

    def as_dict(self):
        return {
            "kind": self.kind,
            "tau": self.tau,
            "exponents": list(self.exponents) if self.exponents else None,
        }


def nf_window(d):
    """Default degree range ``0 .. 3(d-2)`` of the N(f) profile."""
    return max(0, 3 * (d - 2))


def jacobian_ideal(c):
    return Ideal([c.f.diff(v) for v in ("x", "y", "z")], homogeneous=True)


def saturated_jacobian(c):
    return c.saturated


def nf_dim(c, k):
    """``dim N(f)_k = dim (I_f)_k - dim (J_f)_k``."""
    return graded_dim(c.saturated, k, budget=c.budget) - graded_dim(c.jacobian, k, budget=c.budget)


def nf_dims(c, kmax=None):
    """The list ``[dim N(f)_k for k in 0..kmax]``, ``kmax`` defaulting to 3(d-2)."""
    if kmax is None:
        kmax = nf_window(c.d)
    return [nf_dim(c, k) for k in range(kmax + 1)]


def quotient_hilbert(ideal, k, budget=None):
    return comb(k + 2, 2) - graded_dim(ideal, k, budget=budget)


def total_tjurina(c, repeats=3):
    """Degree of the Jacobian scheme, read off the Hilbert function of S/I_f.

    Increases ``k`` until ``repeats`` consecutive values agree, up to
    ``k = 5d``.

    Raises
    ------
    NonStabilizing
        if the cap is hit; this happens for non-reduced input.
    """
    run, last = 0, None
    for k in range(5 * c.d + 1):
        h = quotient_hilbert(c.saturated, k, budget=c.budget)
        run = run + 1 if h == last else 1
        last = h
        if run >= repeats:
            return h
    raise NonStabilizing(f"Hilbert function of S/I_f not stable up to degree {5 * c.d}")


def minimal_syzygy_degree(c):
    """Smallest ``r`` with a relation ``a f_x + b f_y + c f_z = 0``, deg a = r.

    The relations of degree ``r`` form a space of dimension
    ``3 dim S_r - dim (J_f)_{r+d-1}`` (the partials are linearly independent
    unless ``f`` is a cone; then ``r = 0``).
    """
    d = c.d
    for r in range(0, 2 * d):
        if 3 * comb(r + 2, 2) - graded_dim(c.jacobian, r + d - 1, budget=c.budget) > 0:
            return r
    return None


def _int_roots(s, p):
    """Positive integer pairs ``d1 <= d2`` with ``d1 + d2 = s``, ``d1 * d2 = p``."""
    disc = s * s - 4 * p
    if disc < 0:
        return []
    r = isqrt(disc)
    if r * r != disc or (s - r) % 2:
        return []
    d1 = (s - r) // 2
    d2 = s - d1
    return [(d1, d2)] if d1 >= 1 else []


def classify_freeness(d, tau, mdr=None):
    """Free / nearly free classification from the degree and Tjurina number.

    A free curve has ``d1 + d2 = d - 1`` and ``tau = (d-1)^2 - d1 d2``; a
    nearly free curve has ``d1 + d2 = d`` and
    ``tau = (d-1)^2 - d1 (d2 - 1) - 1``.  The nearly free equations are
    symmetric under ``d1 <-> d - 1 - d1`` and can have two solutions; the
    minimal syzygy degree ``mdr`` (equal to ``d1``) picks one.  Without it the
    more balanced pair is returned.  Smooth curves (``tau = 0``) are
    reported as ``neither``.
    """
    if d < 1 or tau < 0:
        raise ValueError("need d >= 1 and tau >= 0")
    if tau == 0:
        return FreenessClass("neither", tau)
    free = _int_roots(d - 1, (d - 1) ** 2 - tau)
    if free and (mdr is None or free[0][0] == mdr):
        return FreenessClass("free", tau, free[0])
    # d1 * (d - d1 - 1) = (d-1)^2 - tau - 1
    target = (d - 1) ** 2 - tau - 1
    sols = [(d1, d - d1) for d1 in range(1, d // 2 + 1) if d1 * (d - d1 - 1) == target]
    if mdr is not None:
        sols = [s for s in sols if s[0] == mdr]
    if sols:
        return FreenessClass("nearly_free", tau, max(sols))
    return FreenessClass("neither", tau)


def classify_from_profile(dims, d, tau):
    """Classification read off the N(f) profile alone.

    ``N(f) = 0`` means free; all dims at most 1 means nearly free, with
    ``d1 = (first k with N(f)_k = 1) - d + 3``.
    """
    if tau == 0:
        return FreenessClass("neither", tau)
    if not any(dims):
        roots = _int_roots(d - 1, (d - 1) ** 2 - tau)
        return FreenessClass("free", tau, roots[0] if roots else None)
    if max(dims) == 1:
        first = next(k for k, v in enumerate(dims) if v)
        d1 = first - d + 3
        return FreenessClass("nearly_free", tau, (d1, d - d1))
    return FreenessClass("neither", tau)


def h2_eigenspace_lower_bounds(c):
    """Pairs ``(EigenvalueIndex(d, j), dim N(f)_{2d-2-j})`` for ``j = 1..d``.

    Each dimension bounds ``dim H^2(F)_{lambda_j}`` from below.
    """
    d = c.d
    return [(EigenvalueIndex(d, j), nf_dim(c, 2 * d - 2 - j)) for j in range(1, d + 1)]
