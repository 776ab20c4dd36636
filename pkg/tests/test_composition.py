from fractions import Fraction as F
from itertools import product

import pytest

from gammaq import composition as comp
from gammaq import core, qfuzzy
from gammaq.errors import PreconditionViolated
from gammaq.qfuzzy import QFuzzySubset, default_qset
from oracle import brute_compose

P = default_qset(1)
GRID3 = (F(0), F(1, 2), F(1))


def test_compose_matches_oracle(all_structures):
    for G in all_structures:
        subsets = list(qfuzzy.enumerate_q_fuzzy_subsets(G, P, (0, F(1, 3), 1)))[::7]
        for mu1, mu2 in product(subsets, repeat=2):
            got = comp.compose(G, mu1, mu2)
            assert [list(r) for r in got.grades] == brute_compose(G, mu1.grades, mu2.grades)


def test_compose_with_zero(lz3, lz3_mu):
    zero = QFuzzySubset.constant(lz3.carrier, P, 0)
    assert comp.compose(lz3, lz3_mu, zero).is_empty()


def test_compose_is_zero_without_factorizations(const2):
    one = comp.full_characteristic(const2, P)
    assert comp.compose(const2, one, one).grades == ((1,), (0,))


def test_worked_example_composition(lz3, lz3_mu):
    # x = x g y for every y, so mu o mu (x) = max_y min(mu(x), mu(y)) = mu(x)
    assert comp.compose(lz3, lz3_mu, lz3_mu) == lz3_mu


def test_full_characteristic(mod16):
    assert all(g == 1 for row in comp.full_characteristic(mod16, P).grades for g in row)


def test_thm_4_2_examples(lz3, lz3_mu, const2):
    v = comp.check_thm_4_2(lz3, lz3_mu, "right")
    assert v.ok and v.lhs and v.rhs
    v = comp.check_thm_4_2(lz3, lz3_mu, "left")
    assert v.ok and v.lhs is False and v.rhs is False
    for mu, side in product(qfuzzy.enumerate_q_fuzzy_subsets(const2, P), ("left", "right")):
        assert comp.check_thm_4_2(const2, mu, side).ok
    with pytest.raises(ValueError):
        comp.check_thm_4_2(lz3, lz3_mu, "both")


def test_thm_4_3_examples(lz3, lz3_mu):
    v = comp.check_thm_4_3(lz3, QFuzzySubset.constant(lz3.carrier, P, "1/2"))
    assert v.lhs and v.rhs
    v = comp.check_thm_4_3(lz3, lz3_mu)
    assert v.ok and v.lhs is False and v.rhs is False
    assert all(comp.check_thm_4_3(lz3, mu).ok for mu in qfuzzy.enumerate_q_fuzzy_subsets(lz3, P))


def test_prop_4_4(lz3, lz3_mu, const2):
    assert comp.check_prop_4_4(lz3, lz3_mu, QFuzzySubset.constant(lz3.carrier, P, "1/2")).ok
    for G in (lz3, const2):
        chi = comp.full_characteristic(G, P)
        assert comp.check_prop_4_4(G, chi, chi).ok
    rights = qfuzzy.fuzzy_ideals(const2, P, "right")
    lefts = qfuzzy.fuzzy_ideals(const2, P, "left")
    assert all(comp.check_prop_4_4(const2, m1, m2).ok for m1, m2 in product(rights, lefts))
    with pytest.raises(PreconditionViolated):
        comp.check_prop_4_4(lz3, lz3_mu, lz3_mu)


def test_prop_4_5(mod4mul):
    both = qfuzzy.fuzzy_ideals(mod4mul, P, "both", GRID3)
    assert len(both) > 1
    assert all(comp.check_prop_4_5(mod4mul, m1, m2).ok for m1, m2 in product(both, repeat=2))


def test_prop_4_6(lz3, lz3_mu, const2, t2):
    v = comp.check_prop_4_6(lz3, lz3_mu, lz3_mu)
    assert v.ok and qfuzzy.intersection(lz3_mu, lz3_mu) == comp.compose(lz3, lz3_mu, lz3_mu)
    chi = comp.full_characteristic(t2, P)
    assert comp.compose(t2, chi, chi) == chi
    with pytest.raises(PreconditionViolated):
        comp.check_prop_4_6(const2, comp.full_characteristic(const2, P), comp.full_characteristic(const2, P))


def test_thm_4_7(lz3, const2, mod16):
    v = comp.check_thm_4_7(lz3, P)
    assert v.ok and v.lhs and v.rhs
    v = comp.check_thm_4_7(const2, P)
    assert v.ok and v.lhs is False and v.rhs is False
    assert v.extra["failing_element"] == "b"
    assert v.witness["x"] == "b"
    assert (v.witness["compose"], v.witness["intersection"]) == ("0/1", "1/1")
    v = comp.check_thm_4_7(mod16, P)
    assert v.ok and v.lhs and v.rhs


def test_thm_4_7_restricted_quantifier(mod16):
    # only constant fuzzy ideals exist on MOD16, crisp ideal S gives the constant 1
    ideals = comp.one_sided_fuzzy_ideals(mod16, P, "right")
    assert len(ideals) == 4
    assert all(len(set(mu.grades)) == 1 for mu in ideals)


def test_crisp_regularity_criterion(lz3, const2, mod16, mod4mul, t2):
    for G in (lz3, mod16, t2):
        v = comp.check_crisp_regularity_criterion(G)
        assert v.ok and v.lhs and v.rhs
    v = comp.check_crisp_regularity_criterion(const2)
    assert v.ok and v.lhs is False and v.rhs is False
    assert v.witness == {"R": "{a,b}", "L": "{a,b}", "R_Gamma_L": "{a}", "R_cap_L": "{a,b}"}
    v = comp.check_crisp_regularity_criterion(mod4mul)
    assert v.ok and v.lhs is False and v.rhs is False


def test_sup_min_is_order_only(lz3):
    # the kernel works on any totally ordered values
    ranks = ((2,), (1,), (0,))
    assert comp.sup_min(lz3.factorizations, ranks, ranks, 1, -1) == ranks
