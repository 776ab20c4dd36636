"""Property tests for the stated invariants, over bundled and enumerated structures."""

from fractions import Fraction
from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from gammaq import composition as comp
from gammaq import core, operators as ops, qfuzzy, structures
from gammaq.formats import parse_qfz, render_qfz
from gammaq.qfuzzy import QFuzzySubset, default_qset
from gammaq.search import enumerate_gamma_semigroups
from oracle import brute_compose

SMALL = [G for n in (1, 2, 3) for G in enumerate_gamma_semigroups(n, 1)] + list(enumerate_gamma_semigroups(2, 2))
STRUCTURES = structures.bundled() + SMALL[::5]
BOTH_SIDED = [G for G in structures.bundled() if G.both_sided]

grades = st.fractions(min_value=0, max_value=1, max_denominator=12)
structure = st.sampled_from(STRUCTURES)
q_sizes = st.integers(1, 2)
settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def fuzzy(carrier, Q):
    rows = st.tuples(*[grades] * len(Q))
    return st.tuples(*[rows] * len(carrier)).map(lambda g: QFuzzySubset(carrier, Q, g))


@st.composite
def with_fuzzy(draw, count=1, pool=STRUCTURES):
    G = draw(st.sampled_from(pool))
    Q = default_qset(draw(q_sizes))
    return (G, Q, *[draw(fuzzy(G.carrier, Q)) for _ in range(count)])


@st.composite
def fuzzy_ideal(draw, G, Q, side):
    """A sup of graded characteristic functions of crisp ideals is a fuzzy ideal."""
    crisp = core.ideals(G, side)
    chosen = draw(st.lists(st.sampled_from(crisp), min_size=1, max_size=3))
    levels = [draw(st.lists(grades, min_size=len(Q), max_size=len(Q))) for _ in chosen]
    rows = tuple(tuple(max([Fraction(0)] + [lv[q] for I, lv in zip(chosen, levels) if x in I])
                       for q in range(len(Q))) for x in range(G.size))
    return QFuzzySubset(G.carrier, Q, rows)


@given(structure, st.data())
def test_both_sided_ideal_is_left_and_right(G, data):
    A = core.CrispSubset(G.carrier, data.draw(st.integers(1, (1 << G.size) - 1)))
    assert core.is_ideal(G, A, "both") == (core.is_ideal(G, A, "left") and core.is_ideal(G, A, "right"))


@given(structure, st.data())
def test_crisp_product_is_monotone(G, data):
    bits = st.integers(0, (1 << G.size) - 1)
    A, B, C = (core.CrispSubset(G.carrier, data.draw(bits)) for _ in range(3))
    AB = core.crisp_product(G, A, B)
    assert AB <= core.crisp_product(G, A | C, B) and AB <= core.crisp_product(G, A, B | C)


@given(structure)
def test_regularity_witnesses_verify(G):
    r = core.is_regular(G)
    if r:
        assert len(r.witnesses) == G.size
        for x, b in r.witnesses.items():
            i, j = G.carrier.lookup(x), G.gamma.lookup(b)
            assert G.s_op[i][j][i] == i


@given(with_fuzzy(), grades, grades)
def test_level_sets_are_antitone(case, t1, t2):
    _, _, mu = case
    lo, hi = min(t1, t2), max(t1, t2)
    assert qfuzzy.level_set(mu, hi) <= qfuzzy.level_set(mu, lo)
    assert qfuzzy.level_set(mu, 0) == core.CrispSubset.full(mu.carrier)


@given(with_fuzzy(count=3))
def test_inclusion_is_a_partial_order_and_meet_is_glb(case):
    _, _, a, b, c = case
    assert qfuzzy.includes(a, a)
    if qfuzzy.includes(a, b) and qfuzzy.includes(b, a):
        assert a == b
    if qfuzzy.includes(a, b) and qfuzzy.includes(b, c):
        assert qfuzzy.includes(a, c)
    m = qfuzzy.intersection(a, b)
    assert qfuzzy.includes(m, a) and qfuzzy.includes(m, b)
    if qfuzzy.includes(c, a) and qfuzzy.includes(c, b):
        assert qfuzzy.includes(c, m)


@given(with_fuzzy(count=2))
def test_compose_matches_oracle_and_is_bounded(case):
    G, _, a, b = case
    c = comp.compose(G, a, b)
    assert [list(r) for r in c.grades] == brute_compose(G, a.grades, b.grades)
    top = min(max(g for r in a.grades for g in r), max(g for r in b.grades for g in r))
    assert all(g <= top for r in c.grades for g in r)


@given(with_fuzzy(count=3))
def test_compose_is_monotone(case):
    G, _, a, b, c = case
    big = QFuzzySubset(a.carrier, a.qset, tuple(tuple(map(max, ra, rc)) for ra, rc in zip(a.grades, c.grades)))
    assert qfuzzy.includes(comp.compose(G, a, b), comp.compose(G, big, b))
    assert qfuzzy.includes(comp.compose(G, b, a), comp.compose(G, b, big))


@given(st.data())
def test_right_left_composition_within_intersection(data):
    G = data.draw(structure)
    Q = default_qset(data.draw(q_sizes))
    mu1 = data.draw(fuzzy_ideal(G, Q, "right"))
    mu2 = data.draw(fuzzy_ideal(G, Q, "left"))
    if mu1.is_empty() or mu2.is_empty():
        return
    assert comp.check_prop_4_4(G, mu1, mu2).ok
    if core.is_regular(G):
        # forward direction of the regularity characterisation
        assert comp.compose(G, mu1, mu2) == qfuzzy.intersection(mu1, mu2)


@given(st.data())
def test_regular_intersection_within_composition(data):
    G, Q, a, b = data.draw(with_fuzzy(count=2, pool=[G for G in STRUCTURES if core.is_regular(G)]))
    assert comp.check_prop_4_6(G, a, b).ok


@given(st.data())
def test_two_valued_extension_of_an_ideal(data):
    G = data.draw(structure)
    side = data.draw(st.sampled_from(core.SIDES))
    I = data.draw(st.sampled_from(core.ideals(G, side)))
    beta = data.draw(grades.filter(lambda g: g > 0))
    alpha = data.draw(grades.filter(lambda g: g <= beta))
    assert qfuzzy.is_q_fuzzy_ideal(G, qfuzzy.two_valued(G, I, alpha, beta, default_qset(2)), side)


@given(with_fuzzy())
def test_level_criterion_single_q(case):
    G, _, mu = case
    mu = QFuzzySubset(mu.carrier, default_qset(1), tuple((row[0],) for row in mu.grades))
    for side in core.SIDES:
        assert qfuzzy.check_level_criterion(G, mu, side).ok


@given(with_fuzzy())
def test_characteristic_criterion(case):
    G, Q, _ = case
    for I, side in product(core.enumerate_subsets(G.carrier), core.SIDES):
        assert qfuzzy.check_characteristic_criterion(G, I, Q, side).ok


@given(with_fuzzy())
def test_qfz_round_trip(case):
    G, _, mu = case
    assert parse_qfz(render_qfz(mu), G) == mu


@given(st.data())
def test_maps_are_monotone(data):
    G = data.draw(st.sampled_from(BOTH_SIDED))
    name = data.draw(st.sampled_from(sorted(ops.MAPS)))
    kind, to_source, _, _ = ops.MAPS[name]
    op = ops._build(G, kind)
    Q = default_qset(data.draw(q_sizes))
    domain = op.carrier if to_source else G.carrier
    a, b = data.draw(fuzzy(domain, Q)), data.draw(fuzzy(domain, Q))
    small = qfuzzy.intersection(a, b)
    assert qfuzzy.includes(ops.apply_map(op, name, small), ops.apply_map(op, name, a))


@given(st.data())
def test_level_commutation(data):
    G = data.draw(st.sampled_from(BOTH_SIDED))
    name = data.draw(st.sampled_from(sorted(ops.MAPS)))
    kind, to_source, _, _ = ops.MAPS[name]
    op = ops._build(G, kind)
    Q = default_qset(data.draw(q_sizes))
    mu = data.draw(fuzzy(op.carrier if to_source else G.carrier, Q))
    t = data.draw(grades)
    assert ops.check_level_commutation(op, name, mu, t).ok


@given(st.data())
def test_round_trips_on_fuzzy_ideals(data):
    G = data.draw(st.sampled_from(BOTH_SIDED))
    side = data.draw(st.sampled_from(["left", "right"]))
    forward, back = ("plus_prime", "plus") if side == "left" else ("star_prime", "star")
    op = ops.build_left_operator(G) if side == "left" else ops.build_right_operator(G)
    Q = default_qset(data.draw(q_sizes))
    kind = data.draw(st.sampled_from(["both", ops.MAP_SIDE[side]]))
    sigma = data.draw(fuzzy_ideal(G, Q, kind))
    assert ops.apply_map(op, back, ops.apply_map(op, forward, sigma)) == sigma
    delta = data.draw(fuzzy_ideal(op.semigroup, Q, kind))
    assert ops.apply_map(op, forward, ops.apply_map(op, back, delta)) == delta
