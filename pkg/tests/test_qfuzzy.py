from fractions import Fraction as F
from itertools import product

import pytest

from gammaq import core, qfuzzy
from gammaq.errors import EmptyFuzzySubset, GradeOrderViolation, OutOfRange, ParseError
from gammaq.qfuzzy import QFuzzySubset, default_qset
from oracle import brute_fuzzy_ideal, brute_is_ideal, brute_level

P = default_qset(1)
Q2 = default_qset(2)


def test_grade_parsing():
    assert qfuzzy.grade("7/10") == F(7, 10)
    assert qfuzzy.grade("0.8") == F(4, 5)
    assert qfuzzy.grade(".5") == F(1, 2)
    with pytest.raises(OutOfRange):
        qfuzzy.grade("3/2")
    with pytest.raises(ParseError):
        qfuzzy.grade("1e-1")
    with pytest.raises(ParseError):
        qfuzzy.grade("1/0")


def test_render_grade_is_canonical():
    assert qfuzzy.render_grade(F(1)) == "1/1"
    assert qfuzzy.render_grade(F(0)) == "0/1"
    assert qfuzzy.render_grade(qfuzzy.grade("0.70")) == "7/10"


def test_worked_example_level_set(lz3_mu):
    assert str(qfuzzy.level_set(lz3_mu, "0.7")) == "{a,b}"
    assert [str(qfuzzy.level_set(lz3_mu, t)) for t in ("3/5", "4/5", "9/10")] == ["{a,b,c}", "{a}", "{}"]


def test_level_zero_is_everything(lz3_mu):
    assert qfuzzy.level_set(lz3_mu, 0) == core.CrispSubset.full(lz3_mu.carrier)


def test_level_set_requires_every_q(lz3):
    mu = QFuzzySubset.from_labels(lz3.carrier, Q2, {("a", "q1"): "1/2", ("a", "q2"): 1, ("b", "q1"): 1, ("b", "q2"): 1})
    assert str(qfuzzy.level_set(mu, 1)) == "{b}"


def test_image(lz3, lz3_mu, const2):
    assert qfuzzy.image(lz3_mu) == (F(3, 5), F(7, 10), F(4, 5))
    assert qfuzzy.image(QFuzzySubset.constant(lz3.carrier, P, "1/3")) == (F(1, 3),)
    mu = qfuzzy.two_valued(const2, const2.subset("a"), F(1, 10), F(9, 10), P)
    assert qfuzzy.image(mu) == (F(1, 10), F(9, 10))


def test_fuzzy_ideal_examples(lz3, lz3_mu):
    assert qfuzzy.is_q_fuzzy_ideal(lz3, lz3_mu, "right")
    check = qfuzzy.is_q_fuzzy_ideal(lz3, lz3_mu, "left")
    assert not check
    # c γ a = c and mu(c) = 3/5 < 4/5 = mu(a); the first failure in scan order
    # is b γ a = b with mu(b) = 7/10 < 4/5
    assert check.witness == {"side": "left", "x": "b", "gamma": "γ", "y": "a", "q": "p"}
    assert brute_fuzzy_ideal(lz3, [[F(7, 10)], [F(7, 10)], [F(3, 5)]], "left") is False


def test_constant_is_a_fuzzy_ideal(all_structures):
    for G in all_structures:
        assert qfuzzy.is_q_fuzzy_ideal(G, QFuzzySubset.constant(G.carrier, P, "1/2"), "both")


def test_empty_fuzzy_subset_is_rejected(lz3):
    with pytest.raises(EmptyFuzzySubset):
        qfuzzy.is_q_fuzzy_ideal(lz3, QFuzzySubset.constant(lz3.carrier, P, 0), "left")
    assert not qfuzzy.is_nonempty_fuzzy_ideal(lz3, QFuzzySubset.constant(lz3.carrier, P, 0), "left")


def test_characteristic(lz3):
    chi = qfuzzy.characteristic(lz3, lz3.subset("a"), P)
    assert chi.grades == ((1,), (0,), (0,))
    assert qfuzzy.characteristic(lz3, core.CrispSubset.full(lz3.carrier), P).grades == ((1,),) * 3
    assert qfuzzy.characteristic(lz3, lz3.subset([]), P).is_empty()


def test_two_valued(const2):
    mu = qfuzzy.two_valued(const2, const2.subset("a"), F(1, 10), F(9, 10), P)
    assert mu.grades == ((F(9, 10),), (F(1, 10),))
    assert qfuzzy.is_q_fuzzy_ideal(const2, mu, "both")
    a = const2.subset("a")
    # alpha = beta = 1 is constant 1, the characteristic function of the whole carrier;
    # alpha = 0, beta = 1 is the characteristic function of I
    assert qfuzzy.two_valued(const2, a, 1, 1, P) == qfuzzy.characteristic(const2, core.CrispSubset.full(const2.carrier), P)
    assert qfuzzy.two_valued(const2, a, 0, 1, P) == qfuzzy.characteristic(const2, a, P)
    with pytest.raises(GradeOrderViolation):
        qfuzzy.two_valued(const2, const2.subset("a"), F(1, 2), F(1, 4), P)


def test_intersection_and_inclusion(lz3, lz3_mu):
    c = QFuzzySubset.constant(lz3.carrier, P, "7/10")
    assert qfuzzy.intersection(lz3_mu, c).grades == ((F(7, 10),), (F(7, 10),), (F(3, 5),))
    assert qfuzzy.includes(lz3_mu, lz3_mu)
    assert qfuzzy.includes(QFuzzySubset.constant(lz3.carrier, P, 0), lz3_mu)
    assert not qfuzzy.includes(lz3_mu, c)


def test_characteristic_criterion(lz3):
    a = lz3.subset("a")
    v = qfuzzy.check_characteristic_criterion(lz3, a, P, "right")
    assert v.ok and v.lhs and v.rhs
    v = qfuzzy.check_characteristic_criterion(lz3, a, P, "left")
    assert v.ok and not v.lhs and not v.rhs
    verdicts = [qfuzzy.check_characteristic_criterion(lz3, I, P, side)
                for I in core.enumerate_subsets(lz3.carrier) for side in core.SIDES]
    assert len(verdicts) == 21 and all(verdicts)


def test_level_criterion_examples(lz3, lz3_mu, mod16):
    v = qfuzzy.check_level_criterion(lz3, lz3_mu, "right")
    assert v.ok and v.lhs and v.rhs
    v = qfuzzy.check_level_criterion(lz3, lz3_mu, "left")
    assert v.ok and v.lhs is False and v.rhs is False
    v = qfuzzy.check_level_criterion(mod16, QFuzzySubset.constant(mod16.carrier, P, "1/4"), "both")
    assert v.ok and v.lhs and v.rhs
    assert qfuzzy.check_level_criterion(lz3, QFuzzySubset.constant(lz3.carrier, P, 0), "left").vacuous


def test_level_criterion_two_parameter_counterexample():
    # one point, |Q| = 2: a Q-fuzzy ideal whose top level set is empty
    G = core.build_gamma_semigroup("a", ["g"], lambda x, g, y: "a")
    mu = QFuzzySubset.from_labels(G.carrier, Q2, {("a", "q1"): 1, ("a", "q2"): "1/2"})
    v = qfuzzy.check_level_criterion(G, mu, "both")
    assert v.lhs is True and v.rhs is False and not v.ok
    assert v.witness["level_witness"] == {"t": "1/1", "level_set": "{}"}


def test_level_thresholds_all_variant(lz3_mu):
    assert qfuzzy.level_thresholds(lz3_mu, "all") == (0, F(3, 5), F(7, 10), F(4, 5))
    with pytest.raises(ValueError):
        qfuzzy.level_thresholds(lz3_mu, "some")


@pytest.mark.parametrize("variant", ["image", "all"])
def test_level_criterion_exhaustive_single_q(lz3, const2, variant):
    for G in (lz3, const2):
        for mu, side in product(qfuzzy.enumerate_q_fuzzy_subsets(G, P), core.SIDES):
            assert qfuzzy.check_level_criterion(G, mu, side, variant).ok


def test_enumeration_counts(lz3, const2):
    grid3 = qfuzzy.uniform_grid(3)
    assert sum(1 for _ in qfuzzy.enumerate_q_fuzzy_subsets(lz3, P, grid3)) == 27
    assert sum(1 for _ in qfuzzy.enumerate_q_fuzzy_subsets(const2, P)) == 25
    assert sum(1 for _ in qfuzzy.enumerate_q_fuzzy_subsets(lz3, Q2)) == 15625
    with pytest.raises(Exception):
        next(qfuzzy.enumerate_q_fuzzy_subsets(lz3, Q2, bound=1000))


def test_enumeration_order_is_lexicographic(const2):
    first = [mu.grades for mu in qfuzzy.enumerate_q_fuzzy_subsets(const2, P, (0, 1))]
    assert first == [((0,), (0,)), ((0,), (1,)), ((1,), (0,)), ((1,), (1,))]


def test_fuzzy_ideals_and_levels_match_oracle(lz3, const2, mod4mul):
    for G in (lz3, const2, mod4mul):
        for mu, side in product(qfuzzy.enumerate_q_fuzzy_subsets(G, P, (0, F(1, 2), 1)), core.SIDES):
            rows = [list(r) for r in mu.grades]
            if not mu.is_empty():
                assert bool(qfuzzy.is_q_fuzzy_ideal(G, mu, side)) == brute_fuzzy_ideal(G, rows, side)
            assert set(qfuzzy.level_set(mu, F(1, 2))) == brute_level(rows, F(1, 2))


def test_every_level_set_of_a_fuzzy_ideal_is_an_ideal(mod4mul):
    for mu in qfuzzy.fuzzy_ideals(mod4mul, P, "both", (0, F(1, 2), 1)):
        for t in qfuzzy.image(mu):
            assert brute_is_ideal(mod4mul, qfuzzy.level_set(mu, t), "both")


def test_render(lz3_mu):
    assert lz3_mu.render() == "{a,p=4/5 b,p=7/10 c,p=3/5}"
