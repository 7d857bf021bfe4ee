"""Topology of plane-curve singularities from their Newton pairs.

A unibranch singularity is described by Newton pairs
``[(p_1, q_1), ..., (p_g, q_g)]``.  Its link is an iterated torus knot with
cabling parameters ``a_1 = q_1``, ``a_{i+1} = q_{i+1} + p_i p_{i+1} a_i``,
and its Alexander polynomial is

    prod_i Delta_{T(p_i, a_i)}(t ** (p_{i+1} ... p_g)).

The only multibranch singularity supported is the node.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .alexander import CyclotomicProduct, tn_minus_1
from .errors import ParityError, UnsupportedSingularity, ValidationError


@dataclass(frozen=True)
class CharPairs:
    """Validated Newton pairs of a unibranch singularity."""

    pairs: tuple

    def __post_init__(self):
        pairs = tuple((int(p), int(q)) for p, q in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise ValidationError("at least one Newton pair is required")
        for i, (p, q) in enumerate(pairs):
            if p < 2:
                raise ValidationError(f"pair {i}: p={p} must be at least 2")
            if q < 1:
                raise ValidationError(f"pair {i}: q={q} must be positive")
            if gcd(p, q) != 1:
                raise ValidationError(f"pair {i}: ({p}, {q}) not coprime")
        if pairs[0][1] <= pairs[0][0]:
            raise ValidationError(f"first pair {pairs[0]} needs q > p")

    @classmethod
    def normalized(cls, pairs):
        """Accept a single pair in either order, e.g. ``(3, 2)`` for ``(2, 3)``."""
        pairs = [tuple(pr) for pr in pairs]
        if len(pairs) == 1 and pairs[0][1] < pairs[0][0]:
            pairs = [(pairs[0][1], pairs[0][0])]
        return cls(tuple(pairs))

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def _as_pairs(pairs):
    return pairs if isinstance(pairs, CharPairs) else CharPairs(tuple(pairs))


def newton_to_linking(pairs):
    """Cabling parameters ``a_i`` of the iterated torus knot."""
    pairs = _as_pairs(pairs)
    a = []
    prev_p = None
    for p, q in pairs:
        if not a:
            a.append(q)
        else:
            a.append(q + prev_p * p * a[-1])
        prev_p = p
    return a


def torus_knot_alexander(p, q, m=1):
    """Cyclotomic form of ``Delta_{T(p,q)}(t**m)``.

    ``Delta_{T(p,q)}(t) = (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`` for
    coprime ``p, q``.
    """
    if gcd(p, q) != 1:
        raise ValidationError(f"torus knot parameters ({p}, {q}) must be coprime")
    return tn_minus_1(p * q * m) * tn_minus_1(m) / (tn_minus_1(p * m) * tn_minus_1(q * m))


def local_alexander(pairs):
    pairs = _as_pairs(pairs)
    a = newton_to_linking(pairs)
    ps = [p for p, _ in pairs]
    out = CyclotomicProduct()
    for i, (p, ai) in enumerate(zip(ps, a)):
        m = 1
        for pj in ps[i + 1 :]:
            m *= pj
        out = out * torus_knot_alexander(p, ai, m)
    return out


def milnor_number(pairs):
    """Milnor number, the degree of the local Alexander polynomial."""
    return local_alexander(pairs).degree()


# A_{2k} = (2, 2k+1) is generated on demand, see `named_singularity`.
NAMED_PAIRS = {
    "E6": ((3, 4),),
    "E8": ((3, 5),),
    "E12": ((3, 7),),
    "E14": ((3, 8),),
    "E18": ((3, 10),),
}


@dataclass(frozen=True)
class SingularityRecord:
    """One singular point: either unibranch with Newton pairs, or a node."""

    kind: str
    pairs: CharPairs = None
    name: str = None
    mu: int = field(init=False)
    branches: int = field(init=False)

    def __post_init__(self):
        if self.kind == "node":
            if self.pairs is not None:
                raise ValidationError("a node carries no Newton pairs")
            mu, branches = 1, 2
        elif self.kind == "unibranch":
            if self.pairs is None:
                raise ValidationError("a unibranch singularity needs Newton pairs")
            object.__setattr__(self, "pairs", _as_pairs(self.pairs))
            mu, branches = milnor_number(self.pairs), 1
        else:
            raise UnsupportedSingularity(
                f"unsupported singularity kind {self.kind!r}; only unibranch points and nodes"
            )
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "branches", branches)

    @classmethod
    def node(cls):
        return cls("node", name="A1")

    @classmethod
    def unibranch(cls, pairs, name=None):
        return cls("unibranch", CharPairs(tuple(tuple(p) for p in pairs)), name)

    def alexander(self):
        """Characteristic polynomial of the local monodromy.

        For a node this is ``t - 1`` (the Milnor fiber is an annulus).
        """
        if self.kind == "node":
            return CyclotomicProduct({1: 1})
        return local_alexander(self.pairs)

    def label(self):
        if self.name:
            return self.name
        if self.kind == "node":
            return "A1"
        return "pairs" + "".join(f"({p},{q})" for p, q in self.pairs)


def named_singularity(name):
    """Resolve ``A1``/``node``, ``A2k`` (cusps) and the ``E`` types in the table."""
    key = name.strip()
    if key.lower() == "node" or key.upper() == "A1":
        return SingularityRecord.node()
    upper = key.upper()
    if upper.startswith("A") and upper[1:].isdigit():
        n = int(upper[1:])
        if n >= 2 and n % 2 == 0:
            return SingularityRecord.unibranch([(2, n + 1)], name=f"A{n}")
        raise UnsupportedSingularity(
            f"{name}: A_k with odd k >= 3 has two branches and is not supported"
        )
    if upper in NAMED_PAIRS:
        return SingularityRecord.unibranch(NAMED_PAIRS[upper], name=upper)
    raise ValidationError(f"unknown singularity type {name!r}")


def delta_invariant(s):
    """``delta = (mu + branches - 1) / 2`` (Milnor's formula)."""
    num = s.mu + s.branches - 1
    if num % 2:
        raise ParityError(f"mu + r - 1 = {num} is odd for {s.label()}")
    return num // 2


def genus(d, sings):
    """Geometric genus ``(d-1)(d-2)/2 - sum delta``.

    A negative value means the declared singularities cannot lie on an
    irreducible curve of degree ``d``; it is returned as is and flagged by
    the caller.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    return (d - 1) * (d - 2) // 2 - sum(delta_invariant(s) for s in sings)
