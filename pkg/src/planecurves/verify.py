"""Regression table of the reference claims about the bundled curves.

Each row is ``(section, claim, expected, actual, ok)``.  A row whose check
raises is reported as failed with the exception text as its actual value,
so a broken fixture fails its own rows without stopping the run.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import alexander as alx
from .groebner import (
    Ideal,
    buchberger,
    colon,
    ideal_intersection,
    irrelevant_ideal,
    is_groebner,
    saturation,
)
from .invariants import (
    classify_freeness,
    minimal_syzygy_degree,
    nf_dims,
    total_tjurina,
)
from .local import genus, local_alexander, milnor_number, named_singularity
from .oracles import (
    all_monomials,
    brute_colon,
    brute_intersection,
    brute_saturation,
    monomial_poly,
    random_monomial_ideal,
    random_poly,
    seeded,
)
from .parser import parse_poly, render
from .poly import MultiPoly, UniPolyZ, univ_eval, univ_exact_div
from .report import analyze, load_curve_file

SECTIONS = ("tjurina", "freeness", "nf", "local", "bound", "zariski", "abelian", "smooth", "properties")


@dataclass
class Row:
    section: str
    claim: str
    expected: str
    actual: str
    ok: bool


def default_fixture_dir():
    return Path(str(resources.files("planecurves") / "data"))


class _Ctx:
    def __init__(self, fixtures):
        self.dir = Path(fixtures) if fixtures else default_fixture_dir()
        self._cache = {}

    def curve(self, name):
        if name not in self._cache:
            self._cache[name] = load_curve_file(self.dir / f"{name}.json")
        return self._cache[name]

    def report(self, name):
        key = ("report", name)
        if key not in self._cache:
            cf, eq = self.curve(name)
            self._cache[key] = analyze(cf, eq)
        return self._cache[key]


def _freeness(ctx, name):
    _, eq = ctx.curve(name)
    return str(classify_freeness(eq.d, total_tjurina(eq), mdr=minimal_syzygy_degree(eq)))


def displayed_local_polynomial():
    """(t^15 + 1)(t^6 + 1) / ((t^2 + 1)(t + 1)) expanded over the integers."""
    num = (UniPolyZ.monomial(15) + UniPolyZ([1])) * (UniPolyZ.monomial(6) + UniPolyZ([1]))
    den = (UniPolyZ.monomial(2) + UniPolyZ([1])) * UniPolyZ([1, 1])
    return univ_exact_div(num, den)


def _checks():
    """Yield ``(section, claim, expected, thunk)``; thunk(ctx) returns the actual value."""
    for name, tau in (
        ("prop1_sextic", 18),
        ("torus_family_t1", 18),
        ("e18_family_t1", 18),
        ("e18_family_t0", 19),
        ("e6_e14", 19),
    ):
        yield "tjurina", f"{name}: total Tjurina number", tau, (
            lambda ctx, n=name: total_tjurina(ctx.curve(n)[1])
        )
    for name, cls in (
        ("prop1_sextic", "nearly_free(3, 3)"),
        ("torus_family_t1", "nearly_free(3, 3)"),
        ("e18_family_t1", "nearly_free(3, 3)"),
        ("e18_family_t0", "free(2, 3)"),
        ("e6_e14", "free(2, 3)"),
    ):
        yield "freeness", f"{name}: classification", cls, (lambda ctx, n=name: _freeness(ctx, n))
    yield "freeness", "classify_freeness(6, 18)", "nearly_free(3, 3)", (
        lambda ctx: str(classify_freeness(6, 18))
    )
    yield "freeness", "classify_freeness(6, 19)", "free(2, 3)", (
        lambda ctx: str(classify_freeness(6, 19))
    )
    yield "nf", "prop1_sextic: max_k dim N(f)_k", 1, (
        lambda ctx: max(nf_dims(ctx.curve("prop1_sextic")[1]))
    )
    yield "nf", "e6_e14: N(f) = 0 (free)", 0, (lambda ctx: max(nf_dims(ctx.curve("e6_e14")[1])))

    yield "local", "two-pair cusp: Delta = (t^15+1)(t^6+1)/((t^2+1)(t+1))", True, (
        lambda ctx: alx.expand(local_alexander([(2, 3), (2, 3)])) == displayed_local_polynomial()
    )
    yield "local", "two-pair cusp: deg Delta", 18, (lambda ctx: displayed_local_polynomial().degree())
    yield "local", "milnor_number([(2,3),(2,3)])", 18, (lambda ctx: milnor_number([(2, 3), (2, 3)]))
    yield "local", "milnor_number E14 = [(3,8)]", 14, (lambda ctx: milnor_number([(3, 8)]))
    yield "local", "milnor_number E18 = [(3,10)]", 18, (lambda ctx: milnor_number([(3, 10)]))
    yield "local", "A2 local Alexander polynomial", "t^2 - t + 1", (
        lambda ctx: str(alx.expand(local_alexander([(2, 3)])))
    )
    for name in ("prop1_sextic", "e6_e14", "e18_family_t0"):
        yield "local", f"{name}: genus (rational)", 0, (
            lambda ctx, n=name: genus(ctx.curve(n)[1].d, ctx.curve(n)[0].records)
        )

    def _bound(ctx):
        return alx.CyclotomicProduct(
            {int(k): v for k, v in ctx.report("prop1_sextic").alexander_bound["after_filter"].items()}
        )

    yield "bound", "prop1_sextic: filtered bound = Phi6^a, a in {1,2}", True, (
        lambda ctx: set(_bound(ctx).factors) == {6} and _bound(ctx).multiplicity(6) in (1, 2)
    )
    yield "bound", "prop1_sextic: t^2 - t + 1 divides the bound", True, (
        lambda ctx: univ_exact_div(alx.expand(_bound(ctx)), UniPolyZ([1, -1, 1])) is not None
    )
    yield "bound", "prop1_sextic: no Phi1, Phi2, Phi3 factor", True, (
        lambda ctx: all(_bound(ctx).multiplicity(n) == 0 for n in (1, 2, 3))
    )

    def _phi_at_one(ctx):
        for n in range(2, 61):
            v = univ_eval(alx.cyclotomic_poly(n), 1)
            want = alx.prime_factors(n)[0] if alx.is_prime_power(n) else 1
            if v != want:
                return f"n={n}: {v}"
        return "ok"

    yield "zariski", "Phi_n(1) = p for n = p^a, else 1 (n <= 60)", "ok", _phi_at_one

    def _filter(ctx):
        full = alx.CyclotomicProduct({n: 1 for n in range(1, 61)})
        kept = alx.zariski_filter(full, irreducible=True)
        return all(not alx.is_prime_power(n) and n != 1 for n in kept.factors) and all(
            n in kept.factors for n in range(2, 61) if not alx.is_prime_power(n)
        )

    yield "zariski", "filter drops exactly prime powers and 1 (irreducible)", True, _filter
    yield "zariski", "reducible arrangement keeps Phi3 (identity filter)", "Phi3*Phi6", (
        lambda ctx: str(alx.zariski_filter(alx.CyclotomicProduct({3: 1, 6: 1}), irreducible=False))
    )
    yield "zariski", "irreducible: {Phi3, Phi6} -> Phi6", "Phi6", (
        lambda ctx: str(alx.zariski_filter(alx.CyclotomicProduct({3: 1, 6: 1}), irreducible=True))
    )

    for r in range(1, 6):
        want = UniPolyZ([-1, 1]) ** (r - 1)
        yield "abelian", f"abelian_alexander({r}) = (t-1)^{r - 1}", str(want), (
            lambda ctx, r=r: str(alx.expand(alx.abelian_alexander(r)))
        )
    yield "abelian", "nodal_cubic (r=1): b1(F) = 0", 0, (
        lambda ctx: ctx.report("nodal_cubic").betti["b1_F"]
    )
    yield "abelian", "three_lines (r=3): b1(F) = 2", 2, (
        lambda ctx: ctx.report("three_lines").betti["b1_F"]
    )

    for name in ("fermat_conic", "fermat_cubic", "fermat_quartic", "fermat_quintic"):
        yield "smooth", f"{name}: tau, class, I_f", "0 neither unit", (
            lambda ctx, n=name: "{} {} {}".format(
                total_tjurina(ctx.curve(n)[1]),
                classify_freeness(ctx.curve(n)[1].d, total_tjurina(ctx.curve(n)[1])).kind,
                "unit" if ctx.curve(n)[1].saturated.is_unit() else "proper",
            )
        )

    def _closure(ctx):
        names = ("prop1_sextic", "e18_family_t0", "e18_family_t1", "e6_e14", "nodal_cubic")
        for n in names:
            eq = ctx.curve(n)[1]
            for ideal in (eq.jacobian, eq.saturated):
                if not is_groebner(ideal.groebner()):
                    return f"{n}: S-polynomial does not reduce to 0"
        return "ok"

    yield "properties", "S-polynomial closure of the fixture bases", "ok", _closure

    def _tn(ctx):
        for n in range(1, 61):
            prod = UniPolyZ([1])
            for k in alx.divisors(n):
                prod = prod * alx.cyclotomic_poly(k)
            if prod != UniPolyZ.t_power_minus_one(n):
                return f"n={n}"
        return "ok"

    yield "properties", "prod_{k|n} Phi_k = t^n - 1 for n <= 60", "ok", _tn

    def _monomial(ctx, trials=25, max_degree=10):
        rng = seeded(2024)
        m_ideal = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        for _ in range(trials):
            gi = random_monomial_ideal(rng)
            gj = random_monomial_ideal(rng)
            I = Ideal([monomial_poly(g) for g in gi])
            J = Ideal([monomial_poly(g) for g in gj])
            inter = buchberger(ideal_intersection(I, J))
            col = buchberger(colon(I, J))
            sat = buchberger(saturation(I, irrelevant_ideal()))
            for m in all_monomials(max_degree):
                p = monomial_poly(m)
                if inter.normal_form(p).is_zero() != brute_intersection(m, gi, gj):
                    return f"intersection {gi} {gj} at {m}"
                if col.normal_form(p).is_zero() != brute_colon(m, gi, gj):
                    return f"colon {gi} {gj} at {m}"
                if sat.normal_form(p).is_zero() != brute_saturation(m, gi, m_ideal):
                    return f"saturation {gi} at {m}"
        return "ok"

    yield "properties", "ideal ops vs brute-force monomial oracle", "ok", _monomial

    def _round_trip(ctx, n=500):
        rng = seeded(7)
        for _ in range(n):
            p = random_poly(rng, rational=rng.random() < 0.3)
            if parse_poly(render(p)) != p:
                return render(p)
        return "ok"

    yield "properties", "parser round trip on 500 random polynomials", "ok", _round_trip


def run_checks(only=None, fixtures=None):
    if only is not None and only not in SECTIONS:
        raise ValueError(f"unknown section {only!r}; choose from {', '.join(SECTIONS)}")
    ctx = _Ctx(fixtures)
    rows = []
    for section, claim, expected, thunk in _checks():
        if only is not None and section != only:
            continue
        try:
            actual = thunk(ctx)
            ok = actual == expected
        except Exception as exc:  # a failing row must not abort the table
            actual, ok = f"{type(exc).__name__}: {exc}", False
        rows.append(Row(section, claim, str(expected), str(actual), ok))
    return rows


def format_rows(rows):
    w = max((len(r.claim) for r in rows), default=10)
    out = []
    for r in rows:
        flag = "PASS" if r.ok else "FAIL"
        out.append(f"{flag}  {r.section:<10}  {r.claim:<{w}}  expected={r.expected}  actual={r.actual}")
    npass = sum(r.ok for r in rows)
    out.append(f"{npass}/{len(rows)} rows passed")
    return "\n".join(out)


def verify_paper(only=None, fixtures=None):
    """Print the table; return 0 when every row passes, 3 otherwise."""
    rows = run_checks(only=only, fixtures=fixtures)
    print(format_rows(rows))
    return 0 if rows and all(r.ok for r in rows) else 3
