"""Curve description files and the assembled invariant report.

A curve file is a JSON document::

    {
      "name": "prop1_sextic",
      "equation": "(y^2*z - x^3)^2 - x^3*y^3",
      "irreducible": true,
      "components": 1,
      "singularities": [{"named": "A2"}, {"pairs": [[2, 3], [2, 3]]}]
    }

Singularity entries are ``{"named": <type>}``, ``{"pairs": [[p, q], ...]}``
or ``{"node": true}``.  The optional key ``"abelian_pi1"`` asserts that the
fundamental group of the complement is abelian; nodal curves get this by
default.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from . import alexander as alx
from .errors import (
    NotHomogeneous,
    ParityError,
    PolySyntaxError,
    ValidationError,
    ZeroPolynomial,
)
from .invariants import (
    CurveEquation,
    classify_freeness,
    classify_from_profile,
    h2_eigenspace_lower_bounds,
    minimal_syzygy_degree,
    nf_dims,
    total_tjurina,
)
from .local import SingularityRecord, delta_invariant, genus, named_singularity
from .parser import parse_poly

REPORT_KEYS = (
    "degree",
    "tau",
    "freeness",
    "nf_dims",
    "genus",
    "singularities",
    "alexander_bound",
    "h2_lower_bounds",
    "betti",
    "warnings",
)


@dataclass
class CurveFile:
    name: str
    equation: str
    irreducible: bool
    components: int
    singularities: list = field(default_factory=list)
    abelian_pi1: bool = None

    @property
    def records(self):
        return [_singularity(s, i) for i, s in enumerate(self.singularities)]


def _singularity(entry, i):
    if isinstance(entry, str):
        return named_singularity(entry)
    if not isinstance(entry, dict) or len(entry) != 1:
        raise ValidationError(f"singularity {i}: expected one of named/pairs/node, got {entry!r}")
    (kind, value), = entry.items()
    if kind == "named":
        return named_singularity(str(value))
    if kind == "pairs":
        try:
            pairs = [(int(p), int(q)) for p, q in value]
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"singularity {i}: bad pair list {value!r}") from exc
        return SingularityRecord.unibranch(pairs)
    if kind == "node":
        return SingularityRecord.node()
    raise ValidationError(f"singularity {i}: unknown key {kind!r}")


def curve_from_dict(doc, source="<dict>"):
    """Validate a decoded curve document; returns ``(CurveFile, CurveEquation)``."""
    if not isinstance(doc, dict):
        raise ValidationError(f"{source}: top level must be an object")
    for key in ("equation", "irreducible", "components"):
        if key not in doc:
            raise ValidationError(f"{source}: missing field {key!r}")
    irreducible = doc["irreducible"]
    components = doc["components"]
    if not isinstance(irreducible, bool):
        raise ValidationError(f"{source}: 'irreducible' must be a boolean")
    if not isinstance(components, int) or isinstance(components, bool) or components < 1:
        raise ValidationError(f"{source}: 'components' must be a positive integer")
    if (components == 1) != irreducible:
        raise ValidationError(
            f"{source}: components={components} contradicts irreducible={irreducible}"
        )
    abelian = doc.get("abelian_pi1")
    if abelian is not None and not isinstance(abelian, bool):
        raise ValidationError(f"{source}: 'abelian_pi1' must be a boolean")
    cf = CurveFile(
        name=str(doc.get("name", Path(source).stem)),
        equation=str(doc["equation"]),
        irreducible=irreducible,
        components=components,
        singularities=list(doc.get("singularities", [])),
        abelian_pi1=abelian,
    )
    cf.records  # resolve names early so bad entries fail at load time
    f = parse_poly(cf.equation)
    try:
        eq = CurveEquation(f, irreducible=irreducible, components=components)
    except (NotHomogeneous, ZeroPolynomial) as exc:
        raise ValidationError(f"{source}: equation is not a nonzero homogeneous form ({exc})") from exc
    return cf, eq


def load_curve_file(path):
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise PolySyntaxError(f"{path}: invalid JSON ({exc.msg})", exc.pos) from exc
    except OSError as exc:
        raise ValidationError(f"{path}: cannot read ({exc.strerror})") from exc
    return curve_from_dict(doc, str(path))


@dataclass
class CurveReport:
    name: str
    degree: int
    tau: int
    freeness: dict
    nf_dims: list
    genus: int
    singularities: list
    alexander_bound: dict
    h2_lower_bounds: list
    betti: dict
    warnings: list

    def to_dict(self):
        return {key: getattr(self, key) for key in REPORT_KEYS}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self):
        fr = self.freeness
        lines = [
            f"curve        {self.name}",
            f"degree       {self.degree}",
            f"tau          {self.tau}",
            f"freeness     {fr['kind']}"
            + (f" exponents {tuple(fr['exponents'])}" if fr["exponents"] else ""),
            f"N(f) dims    {self.nf_dims}",
            f"genus        {self.genus}",
        ]
        for s in self.singularities:
            lines.append(
                f"  {s['label']:<16} mu={s['mu']:<3} delta={s['delta']:<3} "
                f"local Delta={_fmt_factors(s['local_alexander'])}"
            )
        ab = self.alexander_bound
        lines.append(f"Delta_1 bound before filter  {_fmt_factors(ab['before_filter'])}")
        lines.append(f"Delta_1 bound after filter   {_fmt_factors(ab['after_filter'])}")
        if ab["exact"] is not None:
            lines.append(f"Delta_1 (abelian pi_1)       {_fmt_factors(ab['exact'])}")
        h2 = ", ".join(f"j={e['j']}(ord {e['order']}):{e['lower_bound']}" for e in self.h2_lower_bounds)
        lines.append(f"H^2 eigenspace lower bounds  {h2}")
        b = self.betti
        tag = " (b1, b2 upper bounds)" if b["b1_is_upper_bound"] else ""
        lines.append(
            f"betti        chi(U)={b['chi_U']} chi(F)={b['chi_F']} "
            f"b1={b['b1_F']} b2={b['b2_F']}{tag}"
        )
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines)


def _fmt_factors(factors):
    return str(alx.CyclotomicProduct({int(n): e for n, e in factors.items()}))


def analyze(cf, eq=None, restrict_to_divisors=True):
    """Compute the full :class:`CurveReport` for a validated curve file."""
    if eq is None:
        eq = CurveEquation(parse_poly(cf.equation), cf.irreducible, cf.components)
    d = eq.d
    warnings = []
    records = cf.records

    tau = total_tjurina(eq)
    dims = nf_dims(eq)
    mdr = minimal_syzygy_degree(eq)
    fclass = classify_freeness(d, tau, mdr=mdr)
    profile = classify_from_profile(dims, d, tau)
    if profile.kind != fclass.kind or (
        fclass.exponents and profile.exponents and tuple(profile.exponents) != fclass.exponents
    ):
        warnings.append(
            f"classification from tau ({fclass}) disagrees with the N(f) profile ({profile})"
        )
    if dims and (dims[0] or dims[-1]) and tau > 0:
        warnings.append("N(f) is nonzero at the edge of the degree window 0..3(d-2)")
    if tau < len(records) and tau >= 0:
        warnings.append(f"tau={tau} is smaller than the {len(records)} declared singular points")
    total_mu = sum(s.mu for s in records)
    if tau > total_mu:
        warnings.append(
            f"tau={tau} exceeds the total Milnor number {total_mu} of the declared singularities; "
            "the singularity list looks incomplete"
        )

    sing_rows = []
    deltas_ok = True
    for s in records:
        try:
            delta = delta_invariant(s)
        except ParityError as exc:
            warnings.append(str(exc))
            delta, deltas_ok = None, False
        sing_rows.append(
            {
                "label": s.label(),
                "kind": s.kind,
                "pairs": [list(p) for p in s.pairs] if s.pairs else None,
                "mu": s.mu,
                "delta": delta,
                "branches": s.branches,
                "local_alexander": s.alexander().to_json(),
            }
        )
    g = genus(d, records) if deltas_ok else None
    if cf.irreducible and g is not None and g < 0:
        warnings.append(f"negative genus {g}: declared singularities do not fit degree {d}")

    locals_ = [s.alexander() for s in records]
    before = alx.global_bound(locals_, d, restrict_to_divisors=restrict_to_divisors)
    after = alx.zariski_filter(before, cf.irreducible)
    abelian = cf.abelian_pi1
    if abelian is None:
        abelian = all(s.kind == "node" for s in records)
    exact = alx.abelian_alexander(cf.components) if abelian else None
    if exact is not None and not exact.divides(after) and exact.degree() > 0:
        warnings.append(f"abelian Delta_1 {exact} does not divide the local bound {after}")

    if exact is not None:
        b1, b1_bound = exact.degree(), False
    else:
        b1, b1_bound = after.degree(), True
    if cf.irreducible and g is not None:
        chi_C = 2 - 2 * g - sum(s.branches - 1 for s in records)
    else:
        chi_C = alx.curve_euler_characteristic(d, records)
    betti = alx.milnor_fiber_betti(d, g, records, b1, chi_C=chi_C)
    betti_row = dict(betti.as_dict(), chi_C=chi_C, b1_is_upper_bound=b1_bound)

    h2 = [
        {"j": e.j, "eigenvalue_numerator": e.numerator, "order": e.order, "lower_bound": v}
        for e, v in h2_eigenspace_lower_bounds(eq)
    ]
    freeness = dict(fclass.as_dict(), mdr=mdr, profile_kind=profile.kind)
    return CurveReport(
        name=cf.name,
        degree=d,
        tau=tau,
        freeness=freeness,
        nf_dims=dims,
        genus=g,
        singularities=sing_rows,
        alexander_bound={
            "before_filter": before.to_json(),
            "after_filter": after.to_json(),
            "after_filter_degree": after.degree(),
            "after_filter_expanded": list(alx.expand(after).coeffs),
            "exact": exact.to_json() if exact is not None else None,
            "restricted_to_divisors_of_degree": restrict_to_divisors,
        },
        h2_lower_bounds=h2,
        betti=betti_row,
        warnings=warnings,
    )
