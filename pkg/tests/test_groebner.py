import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from planecurves.errors import ResourceLimit
from planecurves.groebner import (
    ELIM,
    GREVLEX,
    Ideal,
    buchberger,
    colon,
    exact_divide,
    graded_dim,
    ideal_intersection,
    irrelevant_ideal,
    is_groebner,
    normal_form,
    saturation,
    unit_ideal,
)
from planecurves.oracles import (
    all_monomials,
    brute_colon,
    brute_intersection,
    brute_saturation,
    monomial_poly,
    random_monomial_ideal,
    span_dim,
)
from planecurves.parser import parse_poly as P
from planecurves.poly import MultiPoly


def I(*texts):
    return Ideal([P(t) for t in texts])


def gb_set(ideal):
    return {str(g) for g in buchberger(ideal)}


def test_single_generator():
    assert gb_set(I("x")) == {"x"}


def test_one_s_polynomial():
    gb = buchberger(I("x^2 + y^2", "x*y"))
    assert {str(g) for g in gb} == {"x^2 + y^2", "x*y", "y^3"}
    assert is_groebner(gb)


def test_smooth_conic_jacobian():
    f = P("x^2 + y^2 + z^2")
    J = Ideal([f.diff(v) for v in "xyz"])
    assert gb_set(J) == {"x", "y", "z"}


def test_unit_ideal_basis():
    gb = buchberger(I("x + 1", "x"))
    assert gb.is_unit()


def test_basis_is_reduced(sextic):
    J = Ideal([sextic.diff(v) for v in "xyz"])
    gb = buchberger(J)
    lms = gb.leading_monomials
    for g in gb:
        assert g.lc() == 1
    for i, a in enumerate(lms):
        for j, b in enumerate(lms):
            if i != j:
                assert not all(x <= y for x, y in zip(a, b))
    assert is_groebner(gb)


def test_elimination_order_basis():
    w = MultiPoly.var("w")
    gens = [w * P("x"), (1 - w) * P("y")]
    gb = buchberger(Ideal(gens), ELIM)
    assert is_groebner(gb)
    assert any(not g.uses_w() and str(g) == "x*y" for g in gb)


def _sympy_reduced(texts):
    sp = pytest.importorskip("sympy")
    x, y, z = sp.symbols("x y z")
    G = sp.groebner([sp.sympify(t.replace("^", "**")) for t in texts], x, y, z, order="grevlex")
    out = set()
    for e in G.exprs:
        poly = sp.Poly(e, x, y, z)
        out.add(sp.expand(e / poly.LC(order="grevlex")))
    return out


@pytest.mark.parametrize(
    "texts",
    [
        ["x^2*y - z^3", "x*y^2 - x*z^2", "y^3 - z*x^2"],
        ["x^3 - 2*x*y", "x^2*y - 2*y^2 + x*z"],
        ["(y^2*z - x^3)^2 - x^3*y^3"],
        ["x^2 + y*z + z^2", "x*y + y^2 - 3*z^2", "x*z - y^2"],
    ],
)
def test_matches_sympy_reduced_basis(texts):
    sp = pytest.importorskip("sympy")
    if len(texts) == 1:
        f = P(texts[0])
        texts = [str(f.diff(v)) for v in "xyz"]
    ours = buchberger(Ideal([P(t) for t in texts]))
    x, y, z = sp.symbols("x y z")
    mine = {sp.expand(sp.sympify(str(g).replace("^", "**"))) for g in ours}
    theirs = {sp.expand(e) for e in _sympy_reduced(texts)}
    assert mine == theirs


def test_resource_limit():
    J = I("x^3 + y^2*z - z^3", "x*y^2 - y*z^2 + x^2*z", "y^3 - x*z^2 + 2*x*y*z")
    with pytest.raises(ResourceLimit):
        buchberger(J, budget=5)


def test_normal_form_examples(sextic):
    assert normal_form(P("x^2"), buchberger(I("x"))).is_zero()
    assert normal_form(P("y"), buchberger(I("x"))) == P("y")
    J = Ideal([sextic.diff(v) for v in "xyz"])
    assert normal_form(sextic, buchberger(J)).is_zero()


GB_FIXED = buchberger(I("x^2 + y^2 - z^2", "x*y - z^2"))
small_polys = st.dictionaries(
    st.tuples(*(st.integers(0, 3) for _ in range(3))), st.integers(-5, 5), max_size=5
).map(MultiPoly)


@settings(max_examples=60, deadline=None)
@given(small_polys, small_polys)
def test_normal_form_linear_and_idempotent(a, b):
    na, nb = normal_form(a, GB_FIXED), normal_form(b, GB_FIXED)
    assert normal_form(na, GB_FIXED) == na
    assert normal_form(a + b, GB_FIXED) == normal_form(na + nb, GB_FIXED)
    assert (a - na).is_zero() or normal_form(a - na, GB_FIXED).is_zero()


def test_intersection_examples():
    assert gb_set(ideal_intersection(I("x"), I("y"))) == {"x*y"}
    assert gb_set(ideal_intersection(I("x^2"), I("x"))) == {"x^2"}
    assert gb_set(ideal_intersection(I("x", "y"), I("z"))) == {"x*z", "y*z"}


def test_colon_examples():
    assert gb_set(colon(I("x*y"), I("x"))) == {"y"}
    assert gb_set(colon(I("x"), I("y"))) == {"x"}
    assert gb_set(colon(I("x^2", "x*y", "x*z"), irrelevant_ideal())) == {"x"}


def test_saturation_examples():
    assert gb_set(saturation(I("x^2", "x*y", "x*z"), irrelevant_ideal())) == {"x"}
    assert saturation(irrelevant_ideal(), irrelevant_ideal()).is_unit()
    f = P("x^2 + y^2 + z^2")
    J = Ideal([f.diff(v) for v in "xyz"])
    assert saturation(J, irrelevant_ideal()).is_unit()


def test_saturation_properties(sextic):
    J = Ideal([sextic.diff(v) for v in "xyz"])
    sat = saturation(J, irrelevant_ideal())
    for g in J.generators:
        assert sat.contains(g)
    again = saturation(sat, irrelevant_ideal())
    assert again == sat
    assert is_groebner(sat.groebner())
    # (x*y) is already saturated with respect to z
    assert saturation(I("x*y"), I("z")) == I("x*y")


def test_exact_divide():
    assert exact_divide(P("x^2 - y^2"), P("x - y")) == P("x + y")


def test_graded_dim_examples(sextic):
    m = irrelevant_ideal()
    assert graded_dim(m, 1) == 3
    assert graded_dim(m, 0) == 0
    J = Ideal([sextic.diff(v) for v in "xyz"])
    assert graded_dim(J, 5) == span_dim(J.generators, 5) == 3


@pytest.mark.parametrize("k", range(21))
def test_graded_dim_unit_ideal(k):
    assert graded_dim(unit_ideal(), k) == (k + 1) * (k + 2) // 2


def test_graded_dim_against_rank_oracle(sextic):
    J = Ideal([sextic.diff(v) for v in "xyz"])
    for k in range(4, 14):
        assert graded_dim(J, k) == span_dim(J.generators, k)


def test_graded_dim_needs_homogeneous():
    with pytest.raises(ValueError):
        graded_dim(I("x + 1"), 2)


@pytest.mark.parametrize("seed", range(12))
def test_monomial_ideal_ops_vs_brute_force(seed):
    rng = random.Random(seed)
    gi = random_monomial_ideal(rng)
    gj = random_monomial_ideal(rng)
    A = Ideal([monomial_poly(g) for g in gi])
    B = Ideal([monomial_poly(g) for g in gj])
    inter = buchberger(ideal_intersection(A, B))
    col = buchberger(colon(A, B))
    sat_m = buchberger(saturation(A, irrelevant_ideal()))
    sat_b = buchberger(saturation(A, B))
    m_ideal = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for m in all_monomials(12):
        p = monomial_poly(m)
        assert inter.normal_form(p).is_zero() == brute_intersection(m, gi, gj)
        assert col.normal_form(p).is_zero() == brute_colon(m, gi, gj)
        assert sat_m.normal_form(p).is_zero() == brute_saturation(m, gi, m_ideal)
        assert sat_b.normal_form(p).is_zero() == brute_saturation(m, gi, gj, power=12)
