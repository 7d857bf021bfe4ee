import pytest
from hypothesis import given, strategies as st

from planecurves import alexander as alx
from planecurves.alexander import (
    CyclotomicProduct,
    EigenvalueIndex,
    abelian_alexander,
    cyclotomic_content,
    cyclotomic_poly,
    expand,
    global_bound,
    is_prime_power,
    milnor_fiber_betti,
    tn_minus_1,
    totient,
    zariski_filter,
)
from planecurves.errors import InconsistentTopology, NegativeMultiplicity
from planecurves.local import SingularityRecord, local_alexander
from planecurves.poly import UniPolyZ, univ_eval


def test_cyclotomic_examples():
    assert cyclotomic_poly(1) == UniPolyZ([-1, 1])
    assert cyclotomic_poly(9) == UniPolyZ([1, 0, 0, 1, 0, 0, 1])
    assert cyclotomic_poly(6) == UniPolyZ([1, -1, 1])


def test_phi_prime_power_quotient():
    # Phi_{p^a} = (t^{p^a} - 1) / (t^{p^(a-1)} - 1)
    for p, a in [(2, 1), (2, 3), (3, 2), (5, 1), (7, 2)]:
        q, r = UniPolyZ.t_power_minus_one(p**a).divmod(UniPolyZ.t_power_minus_one(p ** (a - 1)))
        assert r.is_zero() and q == cyclotomic_poly(p**a)


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_properties(n):
    prod = UniPolyZ([1])
    for k in alx.divisors(n):
        prod = prod * cyclotomic_poly(k)
    assert prod == UniPolyZ.t_power_minus_one(n)
    assert cyclotomic_poly(n).degree() == totient(n)
    if n > 1:
        want = alx.prime_factors(n)[0] if is_prime_power(n) else 1
        assert univ_eval(cyclotomic_poly(n), 1) == want


def test_expand():
    assert expand(CyclotomicProduct({6: 1})) == UniPolyZ([1, -1, 1])
    assert expand(CyclotomicProduct()) == UniPolyZ([1])
    assert expand(CyclotomicProduct({1: 1, 2: 1, 3: 1, 6: 1})) == UniPolyZ.t_power_minus_one(6)
    with pytest.raises(NegativeMultiplicity):
        expand(CyclotomicProduct({2: -1}))


def test_tn_minus_1():
    assert tn_minus_1(6) == CyclotomicProduct({1: 1, 2: 1, 3: 1, 6: 1})
    assert tn_minus_1(1) == CyclotomicProduct({1: 1})
    t30 = tn_minus_1(30)
    assert len(t30.factors) == 8 and sorted(t30.factors) == alx.divisors(30)


@given(st.integers(1, 40), st.integers(1, 6))
def test_phi_of_power_expands_correctly(n, m):
    direct = cyclotomic_poly(n).compose_power(m)
    assert expand(alx.phi_of_power(n, m)) == direct


def test_cyclotomic_content_of_local_polynomials():
    a2 = expand(local_alexander([(2, 3)]))
    big = expand(local_alexander([(2, 3), (2, 3)]))
    assert cyclotomic_content(a2) == (1, CyclotomicProduct({6: 1}))
    assert cyclotomic_content(big) == (1, CyclotomicProduct({6: 1, 10: 1, 12: 1, 30: 1}))


def test_global_bound_cuspidal_sextic():
    locals_ = [CyclotomicProduct({6: 1}), CyclotomicProduct({6: 1, 10: 1, 12: 1, 30: 1})]
    assert global_bound(locals_, 6) == CyclotomicProduct({6: 2})
    assert global_bound(locals_, 6, restrict_to_divisors=False).degree() == 20


def test_global_bound_six_cusps():
    assert global_bound([CyclotomicProduct({6: 1})] * 6, 6) == CyclotomicProduct({6: 6})


def test_global_bound_empty():
    assert global_bound([], 5) == CyclotomicProduct()


def test_zariski_filter():
    c = CyclotomicProduct({3: 1, 6: 1})
    assert zariski_filter(c, True) == CyclotomicProduct({6: 1})
    assert zariski_filter(c, False) == c
    assert zariski_filter(CyclotomicProduct(), True) == CyclotomicProduct()


products = st.dictionaries(st.integers(1, 60), st.integers(0, 3)).map(CyclotomicProduct)


@given(products)
def test_zariski_filter_properties(c):
    kept = zariski_filter(c, True)
    assert all(n != 1 and not is_prime_power(n) for n in kept.factors)
    assert zariski_filter(c, False) == c
    assert univ_eval(expand(kept), 1) in (1, -1)


@given(st.lists(st.sampled_from([[(2, 3)], [(2, 3), (2, 3)], [(3, 4)], [(3, 8)], [(3, 10)], [(2, 5)]]), max_size=4),
       st.integers(2, 12))
def test_filtered_bound_evaluates_to_unit(pair_lists, d):
    locals_ = [local_alexander(p) for p in pair_lists]
    bound = zariski_filter(global_bound(locals_, d), True)
    assert univ_eval(expand(bound), 1) in (1, -1)


@pytest.mark.parametrize("r", range(1, 6))
def test_abelian_alexander(r):
    c = abelian_alexander(r)
    assert expand(c) == UniPolyZ([-1, 1]) ** (r - 1)
    assert c.degree() == r - 1


def test_eigenvalue_index():
    orders = [EigenvalueIndex(6, j).order for j in range(1, 7)]
    assert orders == [1, 6, 3, 2, 3, 6]
    for j in range(1, 7):
        assert 6 % EigenvalueIndex(6, j).order == 0
    with pytest.raises(ValueError):
        EigenvalueIndex(6, 0)


def test_betti_cuspidal_sextic():
    sings = [SingularityRecord.unibranch([(2, 3)]), SingularityRecord.unibranch([(2, 3), (2, 3)])]
    b = milnor_fiber_betti(6, 0, sings, 2)
    assert (b.chi_U, b.chi_F, b.b1_F, b.b2_F) == (1, 6, 2, 7)
    assert b.chi_F == 1 - b.b1_F + b.b2_F


def test_betti_nodal_and_line():
    b = milnor_fiber_betti(3, 0, [SingularityRecord.node()], 0)
    assert b.b1_F == 0 and b.chi_F == 3 * b.chi_U
    line = milnor_fiber_betti(1, 0, [], 0)
    assert (line.chi_U, line.chi_F, line.b1_F, line.b2_F) == (1, 1, 0, 0)


def test_betti_three_lines_via_euler_characteristic():
    nodes = [SingularityRecord.node()] * 3
    chi_C = alx.curve_euler_characteristic(3, nodes)
    b = milnor_fiber_betti(3, None, nodes, abelian_alexander(3).degree(), chi_C=chi_C)
    # F = {xyz = 1} is a 2-torus (C*)^2
    assert (b.chi_F, b.b1_F, b.b2_F) == (0, 2, 1)


def test_betti_inconsistent():
    with pytest.raises(InconsistentTopology):
        milnor_fiber_betti(1, 0, [], 0, chi_C=3)


def test_euler_characteristic_agrees_with_genus_route():
    sings = [SingularityRecord.unibranch([(2, 3)]), SingularityRecord.unibranch([(3, 10)])]
    assert alx.curve_euler_characteristic(6, sings) == 2
