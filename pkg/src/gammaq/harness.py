"""Exhaustive verification driver and counterexample search.

Each registered result maps a structure plus an enumeration context to a
stream of ``(context, Verdict)`` instances; :func:`run_verify` tallies them
into a :class:`VerdictReport`.
"""

from __future__ import annotations

import json
import time
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any

from . import composition as comp
from . import operators as ops
from .core import SIDES, GammaSemigroup, SymbolTable, enumerate_subsets, ideals, is_regular
from .errors import BoundExceeded, PreconditionViolated, UnknownTheorem
from .qfuzzy import (
    DEFAULT_GRID,
    VACUOUS,
    ZERO,
    Verdict,
    check_characteristic_criterion,
    check_level_criterion,
    default_qset,
    enumerate_q_fuzzy_subsets,
    fuzzy_ideals,
    image,
    is_q_fuzzy_ideal,
    render_grade,
    two_valued,
)
from .search import MAX_G, MAX_S, enumerate_gamma_semigroups


@dataclass
class VerdictReport:
    theorem_id: str
    structure_id: str
    cases_checked: int = 0
    agreements: int = 0
    discrepancies: list[dict[str, Any]] = field(default_factory=list)
    vacuous: int = 0
    notes: dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    def add(self, verdict: Verdict, context: dict[str, Any] | None = None) -> None:
        self.cases_checked += 1
        if verdict.vacuous:
            self.vacuous += 1
        if verdict.ok:
            self.agreements += 1
        else:
            self.discrepancies.append({**(context or {}), "witness": verdict.witness})

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_dict(self, *, timing: bool = False, max_discrepancies: int | None = None) -> dict[str, Any]:
        shown = self.discrepancies if max_discrepancies is None else self.discrepancies[:max_discrepancies]
        out = {
            "theorem": self.theorem_id,
            "structure": self.structure_id,
            "cases_checked": self.cases_checked,
            "agreements": self.agreements,
            "vacuous": self.vacuous,
            "discrepancy_count": len(self.discrepancies),
            "discrepancies": shown,
            "status": "agree" if self.ok else "DISCREPANCY",
        }
        if len(shown) < len(self.discrepancies):
            out["discrepancies_truncated"] = True
        if self.notes:
            out["notes"] = self.notes
        if timing:
            out["elapsed_s"] = round(self.elapsed, 3)
        return out


def render_reports(reports: Iterable[VerdictReport], **kwargs) -> str:
    """Deterministic JSON: sorted keys, canonical n/d grades, no timings unless asked."""
    return json.dumps([r.to_dict(**kwargs) for r in reports], sort_keys=True, indent=2, ensure_ascii=False)


@dataclass(frozen=True)
class Context:
    Q: SymbolTable
    grid: tuple[Fraction, ...] = DEFAULT_GRID
    sides: tuple[str, ...] | None = None

    def pick(self, allowed: Sequence[str]) -> tuple[str, ...]:
        if self.sides is None:
            return tuple(allowed)
        return tuple(s for s in allowed if s in self.sides)

    def subsets(self, carrier) -> Iterator:
        return enumerate_q_fuzzy_subsets(carrier, self.Q, self.grid)


Cases = Iterator[tuple[dict[str, Any], Verdict]]


def _per_side(checks: dict[str, Verdict], vacuous: bool = False) -> Verdict:
    if vacuous:
        return VACUOUS
    bad = {s: v.witness for s, v in checks.items() if not v.ok}
    return Verdict(not bad, witness=bad or None)


def _thm_3_5(G: GammaSemigroup, ctx: Context) -> Cases:
    for I in enumerate_subsets(G.carrier):
        for side in ctx.pick(SIDES):
            yield {"subset": str(I), "side": side}, check_characteristic_criterion(G, I, ctx.Q, side)


def _prop_3_6(G: GammaSemigroup, ctx: Context) -> Cases:
    for side in ctx.pick(SIDES):
        for I in ideals(G, side):
            for alpha, beta in product(ctx.grid, repeat=2):
                if alpha > beta or beta == 0:
                    continue
                mu = two_valued(G, I, alpha, beta, ctx.Q)
                check = is_q_fuzzy_ideal(G, mu, side)
                yield ({"subset": str(I), "side": side, "alpha": render_grade(alpha), "beta": render_grade(beta)},
                       Verdict(check.holds, witness=check.witness))


def _thm_3_7(variant: str) -> Callable[[GammaSemigroup, Context], Cases]:
    def run(G: GammaSemigroup, ctx: Context) -> Cases:
        for mu in ctx.subsets(G):
            verdicts = {s: check_level_criterion(G, mu, s, variant) for s in ctx.pick(SIDES)}
            yield {"mu": mu.render()}, _per_side(verdicts, mu.is_empty())
    return run


def _thm_4_2(G: GammaSemigroup, ctx: Context) -> Cases:
    for mu in ctx.subsets(G):
        verdicts = {s: comp.check_thm_4_2(G, mu, s) for s in ctx.pick(("left", "right"))}
        yield {"mu": mu.render()}, _per_side(verdicts, mu.is_empty())


def _thm_4_3(G: GammaSemigroup, ctx: Context) -> Cases:
    for mu in ctx.subsets(G):
        yield {"mu": mu.render()}, comp.check_thm_4_3(G, mu)


def _prop_4_4(G: GammaSemigroup, ctx: Context) -> Cases:
    rights = fuzzy_ideals(G, ctx.Q, "right", ctx.grid)
    lefts = fuzzy_ideals(G, ctx.Q, "left", ctx.grid)
    for mu1, mu2 in product(rights, lefts):
        yield {}, comp.check_prop_4_4(G, mu1, mu2)


def _prop_4_5(G: GammaSemigroup, ctx: Context) -> Cases:
    both = fuzzy_ideals(G, ctx.Q, "both", ctx.grid)
    for mu1, mu2 in product(both, repeat=2):
        yield {}, comp.check_prop_4_5(G, mu1, mu2)


def _prop_4_6(G: GammaSemigroup, ctx: Context) -> Cases:
    # The pair loop runs on integer ranks of the grid values (sup and min only
    # compare); a failing pair is re-checked on exact grades for its witness.
    subsets = list(ctx.subsets(G))
    order = {g: i for i, g in enumerate(sorted(set(ctx.grid)))}
    zero = order.get(ZERO, -1)
    ranked = [tuple(tuple(order[g] for g in row) for row in mu.grades) for mu in subsets]
    k, fact = len(ctx.Q), G.factorizations
    for (mu1, a), (mu2, b) in product(zip(subsets, ranked), repeat=2):
        composed = comp.sup_min(fact, a, b, k, zero)
        if all(min(p, r) <= c for ra, rb, rc in zip(a, b, composed) for p, r, c in zip(ra, rb, rc)):
            yield {}, Verdict(True)
        else:
            yield {}, comp.check_prop_4_6(G, mu1, mu2, regular=True)


def _single(check: Callable[..., Verdict]) -> Callable[[GammaSemigroup, Context], Cases]:
    def run(G: GammaSemigroup, ctx: Context) -> Cases:
        v = check(G) if check is comp.check_crisp_regularity_criterion else check(G, ctx.Q, ctx.grid)
        notes = {"lhs_regular": v.lhs, "rhs": v.rhs, "rhs_witness": v.witness, **v.extra}
        yield {"notes": notes}, v
    return run


def _crisp_transfer(name: str) -> Callable[[GammaSemigroup, Context], Cases]:
    kind, to_source, _, _ = ops.MAPS[name]

    def run(G: GammaSemigroup, ctx: Context) -> Cases:
        op = ops.build_left_operator(G) if kind == "left" else ops.build_right_operator(G)
        domain = op.semigroup if to_source else G
        for side in ctx.pick(("both", ops.MAP_SIDE[kind])):
            for A in ideals(domain, side):
                yield {"input": str(A), "side": side}, ops.check_transfer(op, name, A, side)
    return run


def _fuzzy_transfer(name: str) -> Callable[[GammaSemigroup, Context], Cases]:
    kind, to_source, _, _ = ops.MAPS[name]

    def run(G: GammaSemigroup, ctx: Context) -> Cases:
        op = ops.build_left_operator(G) if kind == "left" else ops.build_right_operator(G)
        domain = op.semigroup if to_source else G
        for side in ctx.pick(("both", ops.MAP_SIDE[kind])):
            for mu in fuzzy_ideals(domain, ctx.Q, side, ctx.grid):
                yield {"side": side}, ops.check_transfer(op, name, mu, side)
    return run


def _level_commutation(name: str) -> Callable[[GammaSemigroup, Context], Cases]:
    kind, to_source, _, _ = ops.MAPS[name]

    def run(G: GammaSemigroup, ctx: Context) -> Cases:
        op = ops.build_right_operator(G) if kind == "right" else ops.build_left_operator(G)
        domain = op.carrier if to_source else G.carrier
        for mu in ctx.subsets(domain):
            for t in image(mu):
                yield {"t": render_grade(t)}, ops.check_level_commutation(op, name, mu, t)
    return run


def _bijection(side: str) -> Callable[[GammaSemigroup, Context], Cases]:
    def run(G: GammaSemigroup, ctx: Context) -> Cases:
        for label, verdict in ops.bijection_cases(G, side, ctx.Q, ctx.grid):
            yield {"case": label}, verdict
    return run


def _needs_regular(G: GammaSemigroup) -> None:
    r = is_regular(G)
    if not r:
        raise PreconditionViolated(f"{G.name or 'structure'} is not regular (fails at {r.failing})")


def _needs_both_sided(G: GammaSemigroup) -> None:
    ops._need_both_sided(G)


@dataclass(frozen=True)
class Result:
    title: str
    run: Callable[[GammaSemigroup, Context], Cases]
    requires: tuple[Callable[[GammaSemigroup], None], ...] = ()


THEOREMS: dict[str, Result] = {
    "3.5": Result("crisp ideal iff characteristic function is a Q-fuzzy ideal", _thm_3_5),
    "3.6": Result("two-valued extension of an ideal is a Q-fuzzy ideal", _prop_3_6),
    "3.7": Result("Q-fuzzy ideal iff every level set over Im(mu) is an ideal", _thm_3_7("image")),
    "3.7-all": Result("Q-fuzzy ideal iff every non-empty level set is an ideal", _thm_3_7("all")),
    "4.2": Result("one-sided ideal iff chi-composition inclusion", _thm_4_2),
    "4.3": Result("two-sided ideal iff both chi-composition inclusions", _thm_4_3),
    "4.4": Result("right o left is within the intersection", _prop_4_4),
    "4.5": Result("ideal o ideal within intersection within each factor", _prop_4_5),
    "4.6": Result("regular: intersection within the composition", _prop_4_6, (_needs_regular,)),
    "4.7": Result("regular iff composition equals intersection", _single(comp.check_thm_4_7)),
    "crisp-4.7": Result("regular iff R Gamma L = R cap L", _single(comp.check_crisp_regularity_criterion)),
    "5.3": Result("A ideal of L gives A+ ideal of S", _crisp_transfer("plus"), (ops.require_unities,)),
    "5.4": Result("B ideal of S gives B+' ideal of L", _crisp_transfer("plus_prime"), (ops.require_unities,)),
    "5.5": Result("A ideal of R gives A* ideal of S", _crisp_transfer("star"), (ops.require_unities,)),
    "5.6": Result("B ideal of S gives B*' ideal of R", _crisp_transfer("star_prime"), (ops.require_unities,)),
    "5.7": Result("(mu_t)* = (mu*)_t", _level_commutation("star"), (_needs_both_sided,)),
    "5.8": Result("(sigma_t)*' = (sigma*')_t", _level_commutation("star_prime"), (_needs_both_sided,)),
    "5.9": Result("mu* is a Q-fuzzy ideal of S", _fuzzy_transfer("star"), (ops.require_unities,)),
    "5.10": Result("sigma*' is a Q-fuzzy ideal of R", _fuzzy_transfer("star_prime"), (ops.require_unities,)),
    "5.11": Result("delta+ is a Q-fuzzy ideal of S", _fuzzy_transfer("plus"), (ops.require_unities,)),
    "5.12": Result("eta+' is a Q-fuzzy ideal of L", _fuzzy_transfer("plus_prime"), (ops.require_unities,)),
    "5.13": Result("inclusion-preserving bijection with L", _bijection("left"), (ops.require_unities,)),
    "5.14": Result("inclusion-preserving bijection with R", _bijection("right"), (ops.require_unities,)),
}
# the default verify suite; 3.7-all is an extra reading, available on request
SUITE = tuple(t for t in THEOREMS if t != "3.7-all")


def _result(theorem_id: str) -> Result:
    try:
        return THEOREMS[theorem_id]
    except KeyError:
        raise UnknownTheorem(f"unknown theorem {theorem_id!r}; choose from {', '.join(THEOREMS)}") from None


def applicable(G: GammaSemigroup, theorem_id: str) -> str | None:
    """None if the theorem's hypotheses hold for G, else the reason they do not."""
    for require in _result(theorem_id).requires:
        try:
            require(G)
        except Exception as exc:  # noqa: BLE001 - any hypothesis failure is a reason
            return f"{type(exc).__name__}: {exc}"
    return None


def run_verify(
    G: GammaSemigroup,
    theorem_id: str,
    grid: Sequence[Fraction] = DEFAULT_GRID,
    q_size: int = 1,
    sides: Sequence[str] | None = None,
) -> VerdictReport:
    """Exhaustively check one result on one structure.

    Raises the hypothesis error (RequiresBothSided, MissingUnity,
    PreconditionViolated) when the structure is outside the result's scope.
    """
    result = _result(theorem_id)
    for require in result.requires:
        require(G)
    ctx = Context(default_qset(q_size), tuple(grid), tuple(sides) if sides else None)
    report = VerdictReport(theorem_id, G.name or "structure")
    start = time.perf_counter()
    for context, verdict in result.run(G, ctx):
        notes = context.pop("notes", None)
        if notes is not None:
            report.notes = notes
        report.add(verdict, context)
    report.elapsed = time.perf_counter() - start
    return report


def run_suite(
    structures: Iterable[GammaSemigroup],
    theorems: Sequence[str] | None = None,
    grid: Sequence[Fraction] = DEFAULT_GRID,
    q_size: int = 1,
    sides: Sequence[str] | None = None,
) -> tuple[list[VerdictReport], list[dict[str, str]]]:
    """Run every requested result on every structure, skipping out-of-scope pairs."""
    reports, skipped = [], []
    for G in structures:
        for tid in theorems or SUITE:
            reason = applicable(G, tid)
            if reason is not None:
                skipped.append({"theorem": tid, "structure": G.name, "reason": reason})
                continue
            reports.append(run_verify(G, tid, grid, q_size, sides))
    return reports, skipped


SEARCH_ALIASES = {
    "level-criterion": "3.7",
    "level-criterion-all": "3.7-all",
    "characteristic-criterion": "3.5",
    "two-valued": "3.6",
    "chi-composition": "4.2",
    "chi-composition-both": "4.3",
    "right-left-composition": "4.4",
    "ideal-composition": "4.5",
    "regular-composition": "4.6",
    "regularity": "4.7",
    "crisp-regularity": "crisp-4.7",
}


def run_search(
    property_id: str,
    max_s: int = 2,
    max_g: int = 1,
    grid: Sequence[Fraction] = (Fraction(0), Fraction(1, 2), Fraction(1)),
    q_size: int = 1,
    *,
    limit_s: int = MAX_S,
    limit_g: int = MAX_G,
) -> VerdictReport:
    """Check a property on every one-sided structure with |S| <= max_s, |Gamma| <= max_g.

    Discrepancies are findings about the stated result, each carrying the
    structure tables so it can be reproduced.
    """
    if not 1 <= max_s <= limit_s or not 1 <= max_g <= limit_g:
        raise BoundExceeded(f"search bounds |S|<={max_s}, |Gamma|<={max_g} exceed the limits {limit_s}, {limit_g}")
    tid = SEARCH_ALIASES.get(property_id, property_id)
    result = _result(tid)
    if any(r is not _needs_regular for r in result.requires):
        raise UnknownTheorem(f"{property_id!r} needs both-sided structures; search enumerates one-sided ones")
    ctx = Context(default_qset(q_size), tuple(grid))
    report = VerdictReport(tid, f"all |S|<={max_s}, |Gamma|<={max_g}")
    structures = 0
    out_of_scope = 0
    start = time.perf_counter()
    for n, m in product(range(1, max_s + 1), range(1, max_g + 1)):
        for G in enumerate_gamma_semigroups(n, m, max_s=limit_s, max_g=limit_g):
            structures += 1
            if applicable(G, tid) is not None:
                out_of_scope += 1
                continue
            for context, verdict in result.run(G, ctx):
                context.pop("notes", None)
                if not verdict.ok:
                    context = {"structure": G.name, "tables": _tables(G), **context}
                report.add(verdict, context)
    report.notes = {"property": property_id, "structures": structures, "out_of_scope": out_of_scope,
                    "q_size": q_size, "grid": [render_grade(g) for g in ctx.grid]}
    report.elapsed = time.perf_counter() - start
    return report


def _tables(G: GammaSemigroup) -> dict[str, list[str]]:
    return {g: [" ".join(G.carrier[G.s_op[x][j][y]] for y in range(G.size)) for x in range(G.size)]
            for j, g in enumerate(G.gamma)}
