"""Sup-min composition of Q-fuzzy subsets and the regularity characterisations."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import product

from .core import CrispSubset, GammaSemigroup, SymbolTable, crisp_product, ideals, is_regular
from .errors import PreconditionViolated
from .qfuzzy import (
    DEFAULT_GRID,
    ONE,
    VACUOUS,
    ZERO,
    QFuzzySubset,
    Verdict,
    _on,
    _same_domain,
    biconditional,
    characteristic,
    fuzzy_ideals,
    inclusion_failure,
    intersection,
    is_nonempty_fuzzy_ideal,
    is_q_fuzzy_ideal,
    render_grade,
)


def sup_min(factorizations, a, b, k: int, zero):
    """Sup-min kernel over any totally ordered grade values.

    ``a`` and ``b`` are ``[x][q]`` tables; ``zero`` is the value for elements
    with no factorization.  Only comparisons are used, so order-preserving
    re-encodings of the grades give the same answer.
    """
    rows = []
    for pairs in factorizations:
        row = []
        for q in range(k):
            best = zero
            for u, v in pairs:
                m = a[u][q] if a[u][q] < b[v][q] else b[v][q]
                if m > best:
                    best = m
            row.append(best)
        rows.append(tuple(row))
    return tuple(rows)


def compose(G: GammaSemigroup, mu1: QFuzzySubset, mu2: QFuzzySubset) -> QFuzzySubset:
    """(mu1 o mu2)(x, q) = max over x = u g v of min(mu1(u, q), mu2(v, q)), or 0."""
    _same_domain(mu1, mu2)
    _on(G, mu1)
    return QFuzzySubset(mu1.carrier, mu1.qset, sup_min(G.factorizations, mu1.grades, mu2.grades, len(mu1.qset), ZERO))


def full_characteristic(G: GammaSemigroup, Q: SymbolTable) -> QFuzzySubset:
    return QFuzzySubset(G.carrier, Q, tuple((ONE,) * len(Q) for _ in range(G.size)))


def _point(mu: QFuzzySubset, at: tuple[int, int] | None) -> dict[str, str] | None:
    if at is None:
        return None
    return {"x": mu.carrier[at[0]], "q": mu.qset[at[1]]}


def _chi_inclusion(G: GammaSemigroup, mu: QFuzzySubset, side: str) -> tuple[int, int] | None:
    chi = full_characteristic(G, mu.qset)
    composed = compose(G, chi, mu) if side == "left" else compose(G, mu, chi)
    return inclusion_failure(composed, mu)


def check_thm_4_2(G: GammaSemigroup, mu: QFuzzySubset, side: str) -> Verdict:
    """mu is a Q-fuzzy left (right) ideal iff chi o mu (mu o chi) is contained in mu."""
    if side not in ("left", "right"):
        raise ValueError("side must be left or right")
    _on(G, mu)
    if mu.is_empty():
        return VACUOUS
    ideal = is_q_fuzzy_ideal(G, mu, side)
    failure = _chi_inclusion(G, mu, side)
    witness = None
    if ideal.holds != (failure is None):
        witness = {"side": side, "mu": mu.render(), "ideal_witness": ideal.witness, "inclusion_fails_at": _point(mu, failure)}
    return biconditional(ideal.holds, failure is None, witness)


def check_thm_4_3(G: GammaSemigroup, mu: QFuzzySubset) -> Verdict:
    """mu is a two-sided Q-fuzzy ideal iff both chi-composition inclusions hold."""
    _on(G, mu)
    if mu.is_empty():
        return VACUOUS
    ideal = is_q_fuzzy_ideal(G, mu, "both")
    left, right = _chi_inclusion(G, mu, "left"), _chi_inclusion(G, mu, "right")
    rhs = left is None and right is None
    witness = None
    if ideal.holds != rhs:
        witness = {"mu": mu.render(), "ideal_witness": ideal.witness,
                   "left_fails_at": _point(mu, left), "right_fails_at": _point(mu, right)}
    return biconditional(ideal.holds, rhs, witness)


def _claim(failure: tuple[int, int] | None, mu: QFuzzySubset, **context) -> Verdict:
    if failure is None:
        return Verdict(True)
    return Verdict(False, witness={**context, **_point(mu, failure)})


def check_prop_4_4(G: GammaSemigroup, mu1: QFuzzySubset, mu2: QFuzzySubset) -> Verdict:
    """Right ideal mu1 and left ideal mu2: mu1 o mu2 is contained in mu1 cap mu2."""
    if not is_nonempty_fuzzy_ideal(G, mu1, "right") or not is_nonempty_fuzzy_ideal(G, mu2, "left"):
        raise PreconditionViolated("need a Q-fuzzy right ideal and a Q-fuzzy left ideal")
    failure = inclusion_failure(compose(G, mu1, mu2), intersection(mu1, mu2))
    return _claim(failure, mu1, mu1=mu1.render(), mu2=mu2.render())


def check_prop_4_5(G: GammaSemigroup, mu1: QFuzzySubset, mu2: QFuzzySubset) -> Verdict:
    """Two-sided ideals: mu1 o mu2 within mu1 cap mu2, which lies within each factor."""
    if not is_nonempty_fuzzy_ideal(G, mu1, "both") or not is_nonempty_fuzzy_ideal(G, mu2, "both"):
        raise PreconditionViolated("both arguments must be Q-fuzzy ideals")
    meet = intersection(mu1, mu2)
    for stage, (small, big) in (("compose<=meet", (compose(G, mu1, mu2), meet)),
                                ("meet<=mu1", (meet, mu1)), ("meet<=mu2", (meet, mu2))):
        failure = inclusion_failure(small, big)
        if failure is not None:
            return _claim(failure, mu1, stage=stage, mu1=mu1.render(), mu2=mu2.render())
    return Verdict(True)


def check_prop_4_6(G: GammaSemigroup, mu1: QFuzzySubset, mu2: QFuzzySubset, *, regular: bool | None = None) -> Verdict:
    """On a regular structure, mu1 cap mu2 is contained in mu1 o mu2 for any mu1, mu2.

    ``regular`` lets enumeration loops pass a precomputed regularity flag.
    """
    if regular is None:
        regular = is_regular(G).regular
    if not regular:
        raise PreconditionViolated("structure is not regular")
    failure = inclusion_failure(intersection(mu1, mu2), compose(G, mu1, mu2))
    return _claim(failure, mu1, mu1=mu1.render(), mu2=mu2.render())


def _dedupe(subsets: Iterable[QFuzzySubset]) -> list[QFuzzySubset]:
    return list(dict.fromkeys(subsets))


def one_sided_fuzzy_ideals(G: GammaSemigroup, Q: SymbolTable, side: str, grid=DEFAULT_GRID) -> list[QFuzzySubset]:
    """Characteristic functions of crisp ideals of the side, then grid-valued ones."""
    chars = [characteristic(G, I, Q) for I in ideals(G, side)]
    return _dedupe(chars + fuzzy_ideals(G, Q, side, grid))


def ideal_pairs(G: GammaSemigroup, Q: SymbolTable, grid=DEFAULT_GRID) -> Iterator[tuple[QFuzzySubset, QFuzzySubset]]:
    """(right ideal, left ideal) pairs in deterministic order."""
    rights = one_sided_fuzzy_ideals(G, Q, "right", grid)
    lefts = one_sided_fuzzy_ideals(G, Q, "left", grid)
    return product(rights, lefts)


def check_thm_4_7(G: GammaSemigroup, Q: SymbolTable, grid=DEFAULT_GRID) -> Verdict:
    """Regular iff mu1 o mu2 = mu1 cap mu2 for all right ideals mu1, left ideals mu2.

    The quantifier ranges over grid-valued fuzzy one-sided ideals together with
    characteristic functions of all crisp one-sided ideals.  The first pair in
    enumeration order where equality fails is reported as the witness.
    """
    regularity = is_regular(G)
    witness = None
    checked = 0
    for mu1, mu2 in ideal_pairs(G, Q, grid):
        checked += 1
        composed, meet = compose(G, mu1, mu2), intersection(mu1, mu2)
        if composed != meet:
            x, q = next((x, q) for x in range(G.size) for q in range(len(Q))
                        if composed.grades[x][q] != meet.grades[x][q])
            witness = {"mu1": mu1.render(), "mu2": mu2.render(), "x": G.carrier[x], "q": Q[q],
                       "compose": render_grade(composed.grades[x][q]), "intersection": render_grade(meet.grades[x][q])}
            break
    rhs = witness is None
    if rhs and not regularity.regular:
        witness = _irregular_witness(G, regularity.failing)
    return biconditional(regularity.regular, rhs, witness, pairs_checked=checked,
                         failing_element=regularity.failing)


def check_crisp_regularity_criterion(G: GammaSemigroup) -> Verdict:
    """Regular iff R Gamma L = R cap L for every crisp right ideal R and left ideal L."""
    regularity = is_regular(G)
    witness = None
    for R, L in product(ideals(G, "right"), ideals(G, "left")):
        prod, meet = crisp_product(G, R, L), R & L
        if prod != meet:
            witness = {"R": str(R), "L": str(L), "R_Gamma_L": str(prod), "R_cap_L": str(meet)}
            break
    rhs = witness is None
    if rhs and not regularity.regular:
        witness = _irregular_witness(G, regularity.failing)
    return biconditional(regularity.regular, rhs, witness, failing_element=regularity.failing)


def _irregular_witness(G: GammaSemigroup, failing: str) -> dict[str, object]:
    """Why an irregular structure still passes the ideal-side test.

    With no Gamma x S x Gamma product, x = x a y b x does not shrink to
    x = x c x, so the ideals only see the weaker property.
    """
    x = G.carrier.lookup(failing)
    weak = next(((a, y, b) for a, y, b in product(range(len(G.gamma)), range(G.size), range(len(G.gamma)))
                 if G.s_op[G.s_op[x][a][y]][b][x] == x), None)
    out: dict[str, object] = {"x": failing, "x_b_x": {G.gamma[b]: G.carrier[G.s_op[x][b][x]] for b in range(len(G.gamma))}}
    if weak is not None:
        a, y, b = weak
        out["x_a_y_b_x"] = f"{failing} = {failing} {G.gamma[a]} {G.carrier[y]} {G.gamma[b]} {failing}"
    return out

