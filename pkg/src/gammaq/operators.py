"""Left and right operator semigroups of a both-sided Gamma-semigroup.

The left operator semigroup L is S x Gamma modulo

    (x, a) ~ (y, b)  iff  x a s = y b s for all s  and  g x a = g y b for all g,

with [x, a][y, b] = [x a y, b].  The right one, R, is Gamma x S modulo the
mirrored relation (s a x = s b y for all s and a x g = b y g for all g) with
[a, x][b, y] = [a x b, y].  Both are plain semigroups, represented here as
Gamma-semigroups over a one-symbol Gamma so every ideal predicate applies.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import product
from typing import Any

from .core import CrispSubset, GammaSemigroup, SymbolTable, ideal_failure, semigroup_as_gamma
from .errors import (
    DomainMismatch,
    EmptyFuzzySubset,
    EmptySubset,
    KindMismatch,
    MissingUnity,
    PreconditionViolated,
    RequiresBothSided,
    WellDefinednessViolation,
)
from .qfuzzy import (
    DEFAULT_GRID,
    VACUOUS,
    QFuzzySubset,
    Verdict,
    fuzzy_ideals,
    grade,
    includes,
    is_nonempty_fuzzy_ideal,
    is_q_fuzzy_ideal,
    level_set,
    render_grade,
)

Pair = tuple[int, int]


@dataclass(frozen=True)
class OperatorElement:
    """An equivalence class; ``representative`` is its least member.

    Pairs are (S-index, Gamma-index) for left classes [x, a] and
    (Gamma-index, S-index) for right classes [a, x].
    """

    kind: str
    representative: Pair
    class_members: tuple[Pair, ...]
    label: str


@dataclass(frozen=True, eq=False)
class OperatorSemigroup:
    kind: str
    source: GammaSemigroup
    elements: tuple[OperatorElement, ...]
    mult: tuple[tuple[int, ...], ...]
    unity: int | None
    class_of: dict[Pair, int] = field(repr=False)
    semigroup: GammaSemigroup = field(repr=False)

    @property
    def carrier(self) -> SymbolTable:
        return self.semigroup.carrier

    def __len__(self) -> int:
        return len(self.elements)

    def element(self, pair: Pair) -> int:
        return self.class_of[pair]


def _pair_label(G: GammaSemigroup, kind: str, pair: Pair) -> str:
    if kind == "left":
        return f"[{G.carrier[pair[0]]},{G.gamma[pair[1]]}]"
    return f"[{G.gamma[pair[0]]},{G.carrier[pair[1]]}]"


def _signature(G: GammaSemigroup, kind: str, pair: Pair) -> tuple:
    n, m = G.size, len(G.gamma)
    if kind == "left":
        x, a = pair
        return tuple(G.s_op[x][a][s] for s in range(n)), tuple(G.g_op[g][x][a] for g in range(m))
    a, x = pair
    return tuple(G.s_op[s][a][x] for s in range(n)), tuple(G.g_op[a][x][g] for g in range(m))


def operator_pairs(G: GammaSemigroup, kind: str) -> list[Pair]:
    n, m = G.size, len(G.gamma)
    return list(product(range(n), range(m))) if kind == "left" else list(product(range(m), range(n)))


def operator_relation(G: GammaSemigroup, kind: str) -> dict[tuple[Pair, Pair], bool]:
    """The relation on pairs straight from its definition, for auditing."""
    _need_both_sided(G)
    pairs = operator_pairs(G, kind)
    sig = {p: _signature(G, kind, p) for p in pairs}
    return {(p, r): sig[p] == sig[r] for p in pairs for r in pairs}


def _product_pair(G: GammaSemigroup, kind: str, p: Pair, r: Pair) -> Pair:
    if kind == "left":
        (x, a), (y, b) = p, r
        return G.s_op[x][a][y], b
    (a, x), (b, y) = p, r
    return G.g_op[a][x][b], y


def _need_both_sided(G: GammaSemigroup) -> None:
    if not G.both_sided:
        raise RequiresBothSided("operator semigroups need the Gamma x S x Gamma product")


def _build(G: GammaSemigroup, kind: str) -> OperatorSemigroup:
    _need_both_sided(G)
    classes: dict[tuple, list[Pair]] = {}
    for p in operator_pairs(G, kind):
        classes.setdefault(_signature(G, kind, p), []).append(p)
    groups = sorted((tuple(sorted(members)) for members in classes.values()), key=lambda ms: ms[0])
    class_of = {p: i for i, members in enumerate(groups) for p in members}
    elements = tuple(OperatorElement(kind, ms[0], ms, _pair_label(G, kind, ms[0])) for ms in groups)

    violations = well_definedness_violations(G, kind, groups, class_of)
    if violations:
        raise WellDefinednessViolation(f"{kind} operator product depends on representatives: {violations[0]}")
    mult = tuple(tuple(class_of[_product_pair(G, kind, c.representative, d.representative)] for d in elements)
                 for c in elements)
    labels = SymbolTable(e.label for e in elements)
    semigroup = semigroup_as_gamma(labels, lambda i, j: mult[i][j], name=f"{kind[0].upper()}({G.name})")

    unity = None
    for i, e in enumerate(elements):
        if kind == "left":
            e_, d = e.representative
            hit = all(G.s_op[e_][d][s] == s for s in range(G.size))
        else:
            g, f = e.representative
            hit = all(G.s_op[s][g][f] == s for s in range(G.size))
        if hit:
            unity = i
            break
    return OperatorSemigroup(kind, G, elements, mult, unity, class_of, semigroup)


def well_definedness_violations(G: GammaSemigroup, kind: str, groups, class_of) -> list[dict[str, Any]]:
    """Class pairs whose product class depends on the chosen representatives."""
    found = []
    for c, d in product(groups, repeat=2):
        results = {class_of[_product_pair(G, kind, p, r)] for p in c for r in d}
        if len(results) > 1:
            found.append({"left": _pair_label(G, kind, c[0]), "right": _pair_label(G, kind, d[0]),
                          "classes": sorted(results)})
    return found


def build_left_operator(G: GammaSemigroup) -> OperatorSemigroup:
    return _build(G, "left")


def build_right_operator(G: GammaSemigroup) -> OperatorSemigroup:
    return _build(G, "right")


def left_unity(G: GammaSemigroup) -> Pair | None:
    """Some (e, d) with e d s = s for all s."""
    return next(((e, d) for e, d in product(range(G.size), range(len(G.gamma)))
                 if all(G.s_op[e][d][s] == s for s in range(G.size))), None)


def right_unity(G: GammaSemigroup) -> Pair | None:
    """Some (g, f) with s g f = s for all s."""
    return next(((g, f) for g, f in product(range(len(G.gamma)), range(G.size))
                 if all(G.s_op[s][g][f] == s for s in range(G.size))), None)


def require_unities(G: GammaSemigroup) -> None:
    _need_both_sided(G)
    missing = [k for k, u in (("left", left_unity(G)), ("right", right_unity(G))) if u is None]
    if missing:
        raise MissingUnity(f"structure has no {' or '.join(missing)} unity")


# -- the four maps -------------------------------------------------------------

def _expect(op: OperatorSemigroup, kind: str) -> None:
    if op.kind != kind:
        raise KindMismatch(f"map needs the {kind} operator semigroup, got {op.kind}")


def _over(mu: QFuzzySubset | CrispSubset, universe: SymbolTable) -> None:
    got = mu.carrier if isinstance(mu, QFuzzySubset) else mu.universe
    if got != universe:
        raise DomainMismatch("argument lives over the wrong universe")


def star_fuzzy(op: OperatorSemigroup, mu: QFuzzySubset) -> QFuzzySubset:
    """mu*(a, q) = min over g of mu([g, a], q)."""
    _expect(op, "right")
    _over(mu, op.carrier)
    G, cls = op.source, op.class_of
    return QFuzzySubset(G.carrier, mu.qset, tuple(
        tuple(min(mu.grades[cls[g, a]][q] for g in range(len(G.gamma))) for q in range(len(mu.qset)))
        for a in range(G.size)))


def star_prime_fuzzy(op: OperatorSemigroup, sigma: QFuzzySubset) -> QFuzzySubset:
    """sigma*'([a, x], q) = min over s of sigma(s a x, q)."""
    _expect(op, "right")
    G = op.source
    _over(sigma, G.carrier)
    rows = []
    for e in op.elements:
        a, x = e.representative
        hits = [sigma.grades[G.s_op[s][a][x]] for s in range(G.size)]
        rows.append(tuple(min(h[q] for h in hits) for q in range(len(sigma.qset))))
    return QFuzzySubset(op.carrier, sigma.qset, tuple(rows))


def plus_fuzzy(op: OperatorSemigroup, delta: QFuzzySubset) -> QFuzzySubset:
    """delta+(a, q) = min over g of delta([a, g], q)."""
    _expect(op, "left")
    _over(delta, op.carrier)
    G, cls = op.source, op.class_of
    return QFuzzySubset(G.carrier, delta.qset, tuple(
        tuple(min(delta.grades[cls[a, g]][q] for g in range(len(G.gamma))) for q in range(len(delta.qset)))
        for a in range(G.size)))


def plus_prime_fuzzy(op: OperatorSemigroup, eta: QFuzzySubset) -> QFuzzySubset:
    """eta+'([x, a], q) = min over s of eta(x a s, q)."""
    _expect(op, "left")
    G = op.source
    _over(eta, G.carrier)
    rows = []
    for e in op.elements:
        x, a = e.representative
        hits = [eta.grades[G.s_op[x][a][s]] for s in range(G.size)]
        rows.append(tuple(min(h[q] for h in hits) for q in range(len(eta.qset))))
    return QFuzzySubset(op.carrier, eta.qset, tuple(rows))


def star_crisp(op: OperatorSemigroup, I: CrispSubset) -> CrispSubset:
    """{s in S : [a, s] in I for every a}."""
    _expect(op, "right")
    _over(I, op.carrier)
    G = op.source
    return CrispSubset.from_indices(G.carrier, (s for s in range(G.size)
                                                if all(op.class_of[a, s] in I for a in range(len(G.gamma)))))


def star_prime_crisp(op: OperatorSemigroup, P: CrispSubset) -> CrispSubset:
    """{[a, x] in R : s a x in P for every s}."""
    _expect(op, "right")
    G = op.source
    _over(P, G.carrier)
    return CrispSubset.from_indices(op.carrier, (i for i, e in enumerate(op.elements)
                                                 if all(G.s_op[s][e.representative[0]][e.representative[1]] in P
                                                        for s in range(G.size))))


def plus_crisp(op: OperatorSemigroup, J: CrispSubset) -> CrispSubset:
    """{s in S : [s, a] in J for every a}."""
    _expect(op, "left")
    _over(J, op.carrier)
    G = op.source
    return CrispSubset.from_indices(G.carrier, (s for s in range(G.size)
                                                if all(op.class_of[s, a] in J for a in range(len(G.gamma)))))


def plus_prime_crisp(op: OperatorSemigroup, P: CrispSubset) -> CrispSubset:
    """{[x, a] in L : x a s in P for every s}."""
    _expect(op, "left")
    G = op.source
    _over(P, G.carrier)
    return CrispSubset.from_indices(op.carrier, (i for i, e in enumerate(op.elements)
                                                 if all(G.s_op[e.representative[0]][e.representative[1]][s] in P
                                                        for s in range(G.size))))


# name -> (operator kind, goes from the operator semigroup to S, fuzzy map, crisp map)
MAPS = {
    "plus": ("left", True, plus_fuzzy, plus_crisp),
    "plus_prime": ("left", False, plus_prime_fuzzy, plus_prime_crisp),
    "star": ("right", True, star_fuzzy, star_crisp),
    "star_prime": ("right", False, star_prime_fuzzy, star_prime_crisp),
}
# one-sided ideal kind each map family carries, besides two-sided ideals
MAP_SIDE = {"left": "right", "right": "left"}


def apply_map(op: OperatorSemigroup, name: str, x: QFuzzySubset | CrispSubset):
    kind, _, fuzzy, crisp = MAPS[name]
    _expect(op, kind)
    return fuzzy(op, x) if isinstance(x, QFuzzySubset) else crisp(op, x)


def check_level_commutation(op: OperatorSemigroup, name: str, mu: QFuzzySubset, t) -> Verdict:
    """map(mu_t) = map(mu)_t, vacuous when either side is empty."""
    t = grade(t)
    before = apply_map(op, name, level_set(mu, t))
    after = level_set(apply_map(op, name, mu), t)
    if not before or not after:
        return Verdict(True, vacuous=True, extra={"equal": before == after})
    if before == after:
        return Verdict(True)
    return Verdict(False, witness={"map": name, "mu": mu.render(), "t": render_grade(t),
                                   "map_of_level": str(before), "level_of_map": str(after)})


def check_prop_5_7(op: OperatorSemigroup, mu: QFuzzySubset, t) -> Verdict:
    return check_level_commutation(op, "star", mu, t)


def check_prop_5_8(op: OperatorSemigroup, sigma: QFuzzySubset, t) -> Verdict:
    return check_level_commutation(op, "star_prime", sigma, t)


def check_transfer(op: OperatorSemigroup, name: str, x: QFuzzySubset | CrispSubset, side: str) -> Verdict:
    """Map an ideal of the given side and check the image is an ideal of that side.

    Crisp inputs cover the classical set-level transfers, fuzzy inputs the
    Q-fuzzy ones.  The structure must have both unities.
    """
    kind, to_source, _, _ = MAPS[name]
    _expect(op, kind)
    if side not in ("both", MAP_SIDE[kind]):
        raise ValueError(f"{name} transfers two-sided or {MAP_SIDE[kind]} ideals, not {side}")
    require_unities(op.source)
    domain, target = (op.semigroup, op.source) if to_source else (op.source, op.semigroup)
    if isinstance(x, QFuzzySubset):
        if not is_nonempty_fuzzy_ideal(domain, x, side):
            raise PreconditionViolated(f"input is not a Q-fuzzy {side} ideal")
        out = apply_map(op, name, x)
        try:
            check = is_q_fuzzy_ideal(target, out, side)
            ok, why = check.holds, check.witness
        except EmptyFuzzySubset:
            ok, why = False, {"reason": "image is the empty fuzzy subset"}
        shown_in, shown_out = x.render(), out.render()
    else:
        try:
            if ideal_failure(domain, x, side) is not None:
                raise PreconditionViolated(f"input is not a {side} ideal")
        except EmptySubset:
            raise PreconditionViolated("input is empty") from None
        out = apply_map(op, name, x)
        if not out:
            ok, why = False, {"reason": "image is empty"}
        else:
            failure = ideal_failure(target, out, side)
            ok, why = failure is None, None if failure is None else {"side": failure[0]}
        shown_in, shown_out = str(x), str(out)
    if ok:
        return Verdict(True)
    return Verdict(False, witness={"map": name, "side": side, "input": shown_in, "image": shown_out, "why": why})


def bijection_cases(G: GammaSemigroup, side: str, Q: SymbolTable, grid=DEFAULT_GRID) -> Iterator[tuple[str, Verdict]]:
    """Every instance behind the inclusion-preserving bijection between fuzzy ideals.

    ``side='left'`` pairs S with L through +' and +, covering two-sided and
    right ideals; ``side='right'`` pairs S with R through *' and *, covering
    two-sided and left ideals.  Yields (case label, verdict).
    """
    require_unities(G)
    op = build_left_operator(G) if side == "left" else build_right_operator(G)
    forward, back = ("plus_prime", "plus") if side == "left" else ("star_prime", "star")
    for kind in ("both", MAP_SIDE[side]):
        ours = fuzzy_ideals(G, Q, kind, grid)
        theirs = fuzzy_ideals(op.semigroup, Q, kind, grid)
        yield from _one_way(op, G, op.semigroup, forward, back, kind, ours, "source")
        yield from _one_way(op, op.semigroup, G, back, forward, kind, theirs, "operator")


def _one_way(op, home, away, there, home_again, kind, ideals_, where) -> Iterator[tuple[str, Verdict]]:
    images = [apply_map(op, there, mu) for mu in ideals_]
    for mu, img in zip(ideals_, images):
        if is_nonempty_fuzzy_ideal(away, img, kind):
            yield f"{there} maps {kind} ideals into {kind} ideals", Verdict(True)
        else:
            yield f"{there} maps {kind} ideals into {kind} ideals", Verdict(
                False, witness={"map": there, "kind": kind, "input": mu.render(), "image": img.render()})
        back = apply_map(op, home_again, img)
        label = f"round trip on {where} ({kind})"
        if back == mu:
            yield label, Verdict(True)
        else:
            yield label, Verdict(False, witness={"kind": kind, "input": mu.render(), "round_trip": back.render()})
    for (m1, i1), (m2, i2) in product(zip(ideals_, images), repeat=2):
        label = f"{there} preserves inclusion ({kind})"
        if not includes(m1, m2):
            yield label, VACUOUS
        elif includes(i1, i2):
            yield label, Verdict(True)
        else:
            yield label, Verdict(False, witness={"kind": kind, "smaller": m1.render(), "larger": m2.render(),
                                                 "image_smaller": i1.render(), "image_larger": i2.render()})


def check_bijection(G: GammaSemigroup, side: str, Q: SymbolTable, grid=DEFAULT_GRID) -> Verdict:
    """Aggregate of :func:`bijection_cases`; the witness lists every violation."""
    violations = []
    cases = 0
    for label, verdict in bijection_cases(G, side, Q, grid):
        cases += 1
        if not verdict:
            violations.append({"case": label, **verdict.witness})
    return Verdict(not violations, witness={"violations": violations} if violations else None,
                   extra={"cases": cases})
