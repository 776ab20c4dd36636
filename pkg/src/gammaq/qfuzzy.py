"""Q-fuzzy subsets with exact rational grades and the ideal criteria built on them."""

from __future__ import annotations

import re
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any

from .core import SIDES, CrispSubset, GammaSemigroup, SymbolTable, ideal_failure
from .errors import BoundExceeded, DomainMismatch, EmptyFuzzySubset, GradeOrderViolation, OutOfRange, ParseError

Grade = Fraction
ZERO, ONE = Fraction(0), Fraction(1)
DEFAULT_GRID = tuple(Fraction(k, 4) for k in range(5))
ENUMERATION_BOUND = 10**6

_RATIONAL = re.compile(r"[+-]?\d+/\d+")
_DECIMAL = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)")


def grade(value: str | int | Fraction) -> Fraction:
    """Parse ``n/d`` or a finite decimal into an exact grade in [0, 1]."""
    if isinstance(value, str):
        text = value.strip()
        if not (_RATIONAL.fullmatch(text) or _DECIMAL.fullmatch(text)):
            raise ParseError(f"not a grade: {value!r}")
        try:
            value = Fraction(text)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {value!r}") from None
    else:
        value = Fraction(value)
    if not ZERO <= value <= ONE:
        raise OutOfRange(f"grade {value} is outside [0, 1]")
    return value


def render_grade(g: Fraction) -> str:
    return f"{g.numerator}/{g.denominator}"


def uniform_grid(points: int) -> tuple[Fraction, ...]:
    if points < 2:
        raise ValueError("a grid needs at least the two points 0 and 1")
    return tuple(Fraction(k, points - 1) for k in range(points))


def default_qset(size: int = 1) -> SymbolTable:
    if size < 1:
        raise ValueError("Q must be non-empty")
    return SymbolTable(["p"] if size == 1 else [f"q{i + 1}" for i in range(size)])


@dataclass(frozen=True)
class QFuzzySubset:
    """A total map carrier x Q -> [0, 1]; ``grades[x][q]`` by index."""

    carrier: SymbolTable
    qset: SymbolTable
    grades: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.grades) != len(self.carrier) or any(len(row) != len(self.qset) for row in self.grades):
            raise ValueError("grade table is not total over carrier x Q")

    @classmethod
    def from_function(cls, carrier: SymbolTable, qset: SymbolTable, f: Callable[[int, int], Any]) -> QFuzzySubset:
        return cls(carrier, qset, tuple(tuple(grade(f(x, q)) for q in range(len(qset))) for x in range(len(carrier))))

    @classmethod
    def constant(cls, carrier: SymbolTable, qset: SymbolTable, c) -> QFuzzySubset:
        c = grade(c)
        return cls(carrier, qset, tuple((c,) * len(qset) for _ in carrier))

    @classmethod
    def from_labels(cls, carrier: SymbolTable, qset: SymbolTable, values: dict[tuple[str, str], Any]) -> QFuzzySubset:
        """Grades keyed by (element, q) labels; missing pairs are 0."""
        rows = [[ZERO] * len(qset) for _ in carrier]
        for (x, q), v in values.items():
            rows[carrier.lookup(x)][qset.lookup(q)] = grade(v)
        return cls(carrier, qset, tuple(map(tuple, rows)))

    def __call__(self, x: int, q: int) -> Fraction:
        return self.grades[x][q]

    def value(self, x: str, q: str) -> Fraction:
        return self.grades[self.carrier.lookup(x)][self.qset.lookup(q)]

    def is_empty(self) -> bool:
        return all(g == 0 for row in self.grades for g in row)

    def render(self) -> str:
        cells = (f"{self.carrier[x]},{self.qset[q]}={render_grade(g)}"
                 for x, row in enumerate(self.grades) for q, g in enumerate(row))
        return "{" + " ".join(cells) + "}"


def _same_domain(mu1: QFuzzySubset, mu2: QFuzzySubset) -> None:
    if mu1.carrier != mu2.carrier or mu1.qset != mu2.qset:
        raise DomainMismatch("fuzzy subsets have different domains")


def _on(G: GammaSemigroup, mu: QFuzzySubset) -> None:
    if mu.carrier != G.carrier:
        raise DomainMismatch("fuzzy subset is not over the carrier of the structure")


def level_set(mu: QFuzzySubset, t) -> CrispSubset:
    """Elements graded at least t for every q simultaneously."""
    t = grade(t)
    return CrispSubset.from_indices(mu.carrier, (x for x, row in enumerate(mu.grades) if all(g >= t for g in row)))


def image(mu: QFuzzySubset) -> tuple[Fraction, ...]:
    return tuple(sorted({g for row in mu.grades for g in row}))


@dataclass(frozen=True)
class Check:
    """Outcome of a predicate, with the first counterexample when it fails."""

    holds: bool
    witness: dict[str, str] | None = None

    def __bool__(self) -> bool:
        return self.holds


def is_q_fuzzy_ideal(G: GammaSemigroup, mu: QFuzzySubset, side: str) -> Check:
    """Left: mu(x g y, q) >= mu(y, q); right: mu(x g y, q) >= mu(x, q); both: each."""
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    _on(G, mu)
    if mu.is_empty():
        raise EmptyFuzzySubset("Q-fuzzy ideals must take some positive grade")
    grades, s_op = mu.grades, G.s_op
    for s in (("left", "right") if side == "both" else (side,)):
        for x, g, y in product(range(G.size), range(len(G.gamma)), range(G.size)):
            lower = grades[y] if s == "left" else grades[x]
            got = grades[s_op[x][g][y]]
            for q in range(len(mu.qset)):
                if got[q] < lower[q]:
                    return Check(False, {"side": s, "x": G.carrier[x], "gamma": G.gamma[g],
                                         "y": G.carrier[y], "q": mu.qset[q]})
    return Check(True)


def is_nonempty_fuzzy_ideal(G: GammaSemigroup, mu: QFuzzySubset, side: str) -> bool:
    """Like :func:`is_q_fuzzy_ideal`, but the empty fuzzy subset is simply not an ideal."""
    return not mu.is_empty() and bool(is_q_fuzzy_ideal(G, mu, side))


def characteristic(G: GammaSemigroup, I: CrispSubset, Q: SymbolTable) -> QFuzzySubset:
    if I.universe != G.carrier:
        raise DomainMismatch("subset is not over the carrier of the structure")
    return characteristic_of(I, Q)


def characteristic_of(I: CrispSubset, Q: SymbolTable) -> QFuzzySubset:
    one, zero = (ONE,) * len(Q), (ZERO,) * len(Q)
    return QFuzzySubset(I.universe, Q, tuple(one if x in I else zero for x in range(len(I.universe))))


def two_valued(G: GammaSemigroup, I: CrispSubset, alpha, beta, Q: SymbolTable) -> QFuzzySubset:
    """beta on I x Q and alpha elsewhere; requires alpha <= beta and beta != 0."""
    alpha, beta = grade(alpha), grade(beta)
    if alpha > beta or beta == 0:
        raise GradeOrderViolation(f"need alpha <= beta != 0, got alpha={alpha}, beta={beta}")
    if I.universe != G.carrier:
        raise DomainMismatch("subset is not over the carrier of the structure")
    inside, outside = (beta,) * len(Q), (alpha,) * len(Q)
    return QFuzzySubset(G.carrier, Q, tuple(inside if x in I else outside for x in range(G.size)))


def intersection(mu1: QFuzzySubset, mu2: QFuzzySubset) -> QFuzzySubset:
    _same_domain(mu1, mu2)
    return QFuzzySubset(mu1.carrier, mu1.qset,
                        tuple(tuple(map(min, r1, r2)) for r1, r2 in zip(mu1.grades, mu2.grades)))


def inclusion_failure(mu1: QFuzzySubset, mu2: QFuzzySubset) -> tuple[int, int] | None:
    """First (x, q) with mu1(x, q) > mu2(x, q)."""
    _same_domain(mu1, mu2)
    for x, (r1, r2) in enumerate(zip(mu1.grades, mu2.grades)):
        for q, (a, b) in enumerate(zip(r1, r2)):
            if a > b:
                return x, q
    return None


def includes(mu1: QFuzzySubset, mu2: QFuzzySubset) -> bool:
    """True iff mu1 is contained in mu2 pointwise."""
    return inclusion_failure(mu1, mu2) is None


@dataclass(frozen=True)
class Verdict:
    """Result of checking one instance of a stated result.

    For biconditionals ``lhs``/``rhs`` hold the two sides and ``ok`` is their
    agreement; for one-way claims ``ok`` is whether the claim held.
    ``vacuous`` marks instances outside the hypothesis, which count as agreeing.
    """

    ok: bool
    lhs: bool | None = None
    rhs: bool | None = None
    witness: dict[str, Any] | None = None
    vacuous: bool = False
    extra: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def biconditional(lhs: bool, rhs: bool, witness: dict[str, Any] | None = None, **extra) -> Verdict:
    return Verdict(lhs == rhs, lhs, rhs, witness, extra=extra)


VACUOUS = Verdict(True, vacuous=True)


def check_characteristic_criterion(G: GammaSemigroup, I: CrispSubset, Q: SymbolTable, side: str) -> Verdict:
    """I is a crisp ideal of the side iff its characteristic function is a Q-fuzzy one."""
    crisp = ideal_failure(G, I, side)
    fuzzy = is_q_fuzzy_ideal(G, characteristic(G, I, Q), side)
    witness = None
    if (crisp is None) != fuzzy.holds:
        witness = {"subset": str(I), "side": side, "fuzzy_witness": fuzzy.witness,
                   "crisp_witness": None if crisp is None else _crisp_witness(G, crisp)}
    return biconditional(crisp is None, fuzzy.holds, witness)


def _crisp_witness(G: GammaSemigroup, failure: tuple[str, int, int, int]) -> dict[str, str]:
    side, x, g, y = failure
    return {"side": side, "x": G.carrier[x], "gamma": G.gamma[g], "y": G.carrier[y]}


def level_thresholds(mu: QFuzzySubset, variant: str = "image") -> tuple[Fraction, ...]:
    """Thresholds t whose level sets the level criterion inspects.

    ``image`` is Im(mu).  ``all`` stands for every t in [0, 1] with a
    non-empty level set: level sets only change at the values min_q mu(x, q),
    so those values plus 0 represent every such t.
    """
    if variant == "image":
        return image(mu)
    if variant == "all":
        return tuple(sorted({ZERO} | {min(row) for row in mu.grades}))
    raise ValueError(f"unknown threshold variant {variant!r}")


def check_level_criterion(G: GammaSemigroup, mu: QFuzzySubset, side: str, variant: str = "image") -> Verdict:
    """mu is a Q-fuzzy ideal of the side iff every level set mu_t is a crisp one.

    An empty level set at an inspected t makes the right-hand side false.
    The empty fuzzy subset is outside the hypothesis and yields a vacuous verdict.
    """
    _on(G, mu)
    if mu.is_empty():
        return VACUOUS
    lhs = is_q_fuzzy_ideal(G, mu, side)
    bad = None
    for t in level_thresholds(mu, variant):
        mu_t = level_set(mu, t)
        if not mu_t:
            bad = {"t": render_grade(t), "level_set": "{}"}
            break
        failure = ideal_failure(G, mu_t, side)
        if failure is not None:
            bad = {"t": render_grade(t), "level_set": str(mu_t), **_crisp_witness(G, failure)}
            break
    rhs = bad is None
    witness = None
    if lhs.holds != rhs:
        witness = {"side": side, "mu": mu.render(), "fuzzy_witness": lhs.witness, "level_witness": bad}
    return biconditional(lhs.holds, rhs, witness)


def enumerate_q_fuzzy_subsets(
    carrier: SymbolTable | GammaSemigroup,
    Q: SymbolTable,
    grid: Sequence[Fraction] = DEFAULT_GRID,
    bound: int = ENUMERATION_BOUND,
) -> Iterator[QFuzzySubset]:
    """Every assignment carrier x Q -> grid, lexicographic with (x, q) row-major."""
    if isinstance(carrier, GammaSemigroup):
        carrier = carrier.carrier
    grid = tuple(grade(g) for g in grid)
    n, k = len(carrier), len(Q)
    count = len(grid) ** (n * k)
    if count > bound:
        raise BoundExceeded(f"{len(grid)}^{n * k} = {count} fuzzy subsets exceeds the bound {bound}")
    for cells in product(grid, repeat=n * k):
        yield QFuzzySubset(carrier, Q, tuple(cells[x * k:(x + 1) * k] for x in range(n)))


def fuzzy_ideals(G: GammaSemigroup, Q: SymbolTable, side: str, grid: Iterable[Fraction] = DEFAULT_GRID) -> list[QFuzzySubset]:
    """All grid-valued Q-fuzzy ideals of the given side, in enumeration order."""
    return [mu for mu in enumerate_q_fuzzy_subsets(G, Q, tuple(grid)) if is_nonempty_fuzzy_ideal(G, mu, side)]
