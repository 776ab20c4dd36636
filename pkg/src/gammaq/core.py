"""Finite Gamma-semigroups given by explicit operation tables.

A Gamma-semigroup has a carrier S, a parameter set Gamma and a ternary
product ``x g y`` in S.  The *both-sided* variant additionally carries a
product ``a x b`` in Gamma for a, b in Gamma and x in S.  Elements are held as
indices into :class:`SymbolTable` objects; labels only show up at the I/O
boundary.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from .errors import AssociativityViolation, BoundExceeded, DomainMismatch, EmptySubset, MissingEntry

SIDES = ("left", "right", "both")
SUBSET_BOUND = 16


@dataclass(frozen=True)
class SymbolTable:
    names: tuple[str, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("symbol table must be non-empty")
        for name in names:
            if not isinstance(name, str) or not name or any(c.isspace() for c in name):
                raise ValueError(f"invalid symbol label {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate labels in {names}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "index", {n: i for i, n in enumerate(names)})

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __getitem__(self, i: int) -> str:
        return self.names[i]

    def lookup(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise KeyError(f"unknown symbol {label!r}") from None


def as_table(symbols: SymbolTable | Iterable[str]) -> SymbolTable:
    return symbols if isinstance(symbols, SymbolTable) else SymbolTable(symbols)


@dataclass(frozen=True)
class CrispSubset:
    """A subset of a symbol table, stored as a bitset over positions."""

    universe: SymbolTable
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> len(self.universe):
            raise ValueError("members outside the universe")

    @classmethod
    def from_indices(cls, universe: SymbolTable, indices: Iterable[int]) -> CrispSubset:
        bits = 0
        for i in indices:
            bits |= 1 << i
        return cls(universe, bits)

    @classmethod
    def from_labels(cls, universe: SymbolTable, labels: Iterable[str]) -> CrispSubset:
        return cls.from_indices(universe, (universe.lookup(s) for s in labels))

    @classmethod
    def full(cls, universe: SymbolTable) -> CrispSubset:
        return cls(universe, (1 << len(universe)) - 1)

    def __contains__(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return (i for i in range(len(self.universe)) if self.bits >> i & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def _same(self, other: CrispSubset) -> None:
        if self.universe != other.universe:
            raise DomainMismatch("subsets live in different universes")

    def __and__(self, other: CrispSubset) -> CrispSubset:
        self._same(other)
        return CrispSubset(self.universe, self.bits & other.bits)

    def __or__(self, other: CrispSubset) -> CrispSubset:
        self._same(other)
        return CrispSubset(self.universe, self.bits | other.bits)

    def __le__(self, other: CrispSubset) -> bool:
        self._same(other)
        return self.bits & ~other.bits == 0

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.universe[i] for i in self)

    def __str__(self) -> str:
        return "{" + ",".join(self.labels) + "}"


Table3 = tuple[tuple[tuple[int, ...], ...], ...]


@dataclass(frozen=True)
class GammaSemigroup:
    """Validated finite Gamma-semigroup.

    ``s_op[x][g][y]`` is the index of ``x g y`` in the carrier and, when
    present, ``g_op[a][x][b]`` is the index of ``a x b`` in Gamma.  Use
    :func:`build_gamma_semigroup` to construct one from labelled tables.
    """

    carrier: SymbolTable
    gamma: SymbolTable
    s_op: Table3
    g_op: Table3 | None = None
    name: str = field(default="", compare=False)

    @property
    def both_sided(self) -> bool:
        return self.g_op is not None

    @property
    def size(self) -> int:
        return len(self.carrier)

    def mul(self, x: int, g: int, y: int) -> int:
        return self.s_op[x][g][y]

    def gmul(self, a: int, x: int, b: int) -> int:
        if self.g_op is None:
            raise ValueError("structure has no Gamma x S x Gamma product")
        return self.g_op[a][x][b]

    @cached_property
    def factorizations(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """For each x, the distinct pairs (u, v) with x = u g v for some g."""
        found: list[dict[tuple[int, int], None]] = [{} for _ in range(self.size)]
        for u, v in product(range(self.size), repeat=2):
            for g in range(len(self.gamma)):
                found[self.s_op[u][g][v]][(u, v)] = None
        return tuple(tuple(d) for d in found)

    def subset(self, labels: Iterable[str]) -> CrispSubset:
        return CrispSubset.from_labels(self.carrier, labels)

    def __str__(self) -> str:
        kind = "both-sided" if self.both_sided else "one-sided"
        label = f"{self.name}: " if self.name else ""
        return f"{label}|S|={self.size}, |Gamma|={len(self.gamma)}, {kind}"


def _tabulate(op, outer: SymbolTable, mid: SymbolTable, target: SymbolTable, what: str) -> Table3:
    rows = []
    for a in outer:
        block = []
        for m in mid:
            row = []
            for b in outer:
                try:
                    value = op(a, m, b) if callable(op) else op[(a, m, b)]
                except (KeyError, IndexError):
                    raise MissingEntry(f"{what} entry ({a}, {m}, {b}) is missing") from None
                if value not in target.index:
                    raise MissingEntry(f"{what} entry ({a}, {m}, {b}) = {value!r} is not a known symbol")
                row.append(target.index[value])
            block.append(tuple(row))
        rows.append(tuple(block))
    return tuple(rows)


def check_associativity(carrier: SymbolTable, gamma: SymbolTable, s_op: Table3, g_op: Table3 | None) -> None:
    """Raise :class:`AssociativityViolation` at the first failing instance."""
    n, m = len(carrier), len(gamma)

    def fail(law: str, **parts: int | str) -> None:
        names = {k: (v if isinstance(v, str) else (gamma if k in "bgde" else carrier)[v]) for k, v in parts.items()}
        raise AssociativityViolation(f"{law} fails at {names}", {"law": law, **names})

    for x, b, y in product(range(n), range(m), range(n)):
        xy = s_op[x][b][y]
        for g, z in product(range(m), range(n)):
            lhs = s_op[xy][g][z]
            if lhs != s_op[x][b][s_op[y][g][z]]:
                fail("(xby)gz=xb(ygz)", x=x, b=b, y=y, g=g, z=z)
            if g_op is not None and lhs != s_op[x][g_op[b][y][g]][z]:
                fail("(xby)gz=x(byg)z", x=x, b=b, y=y, g=g, z=z)
    if g_op is None:
        return
    # Gamma side: d(x b y)g = (d x b)y g = d x(b y g); letters reused as indices
    for d, x, b in product(range(m), range(n), range(m)):
        dxb = g_op[d][x][b]
        for y, g in product(range(n), range(m)):
            lhs = g_op[d][s_op[x][b][y]][g]
            if lhs != g_op[dxb][y][g] or lhs != g_op[d][x][g_op[b][y][g]]:
                fail("d(xby)g=(dxb)yg=dx(byg)", d=d, x=x, b=b, y=y, g=g)


def build_gamma_semigroup(
    carrier: SymbolTable | Iterable[str],
    gamma: SymbolTable | Iterable[str],
    s_op: Mapping[tuple[str, str, str], str] | Callable[[str, str, str], str],
    g_op: Mapping[tuple[str, str, str], str] | Callable[[str, str, str], str] | None = None,
    name: str = "",
) -> GammaSemigroup:
    """Tabulate labelled products and validate every associativity law.

    ``s_op`` maps ``(x, g, y)`` label triples (or is called with them) to a
    carrier label; ``g_op`` likewise maps ``(a, x, b)`` to a Gamma label.
    """
    carrier, gamma = as_table(carrier), as_table(gamma)
    s_table = _tabulate(s_op, carrier, gamma, carrier, "S x Gamma x S")
    g_table = None if g_op is None else _tabulate(g_op, gamma, carrier, gamma, "Gamma x S x Gamma")
    check_associativity(carrier, gamma, s_table, g_table)
    return GammaSemigroup(carrier, gamma, s_table, g_table, name)


def _require_subset(G: GammaSemigroup, A: CrispSubset) -> None:
    if A.universe != G.carrier:
        raise DomainMismatch("subset is not over the carrier of the structure")


def ideal_failure(G: GammaSemigroup, A: CrispSubset, side: str) -> tuple[str, int, int, int] | None:
    """First (side, x, g, y) whose product escapes A, or None if A is an ideal."""
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    _require_subset(G, A)
    if not A:
        raise EmptySubset("ideals are non-empty by definition")
    sides = ("left", "right") if side == "both" else (side,)
    members = list(A)
    for s in sides:
        for a in members:
            for g in range(len(G.gamma)):
                for x in range(G.size):
                    if s == "left" and G.s_op[x][g][a] not in A:
                        return s, x, g, a
                    if s == "right" and G.s_op[a][g][x] not in A:
                        return s, a, g, x
    return None


def is_ideal(G: GammaSemigroup, A: CrispSubset, side: str) -> bool:
    return ideal_failure(G, A, side) is None


def ideals(G: GammaSemigroup, side: str) -> list[CrispSubset]:
    """All crisp ideals of the given side, in ascending bitset order."""
    return [A for A in enumerate_subsets(G.carrier) if is_ideal(G, A, side)]


@dataclass(frozen=True)
class Regularity:
    regular: bool
    witnesses: dict[str, str]
    failing: str | None = None

    def __bool__(self) -> bool:
        return self.regular


def is_regular(G: GammaSemigroup) -> Regularity:
    """Check x = x b x for some b, per element; first b in Gamma order is the witness."""
    witnesses = {}
    for x in range(G.size):
        b = next((b for b in range(len(G.gamma)) if G.s_op[x][b][x] == x), None)
        if b is None:
            return Regularity(False, witnesses, G.carrier[x])
        witnesses[G.carrier[x]] = G.gamma[b]
    return Regularity(True, witnesses)


def crisp_product(G: GammaSemigroup, A: CrispSubset, B: CrispSubset) -> CrispSubset:
    """A Gamma B = {a g b : a in A, g in Gamma, b in B}."""
    _require_subset(G, A)
    _require_subset(G, B)
    return CrispSubset.from_indices(
        G.carrier, (G.s_op[a][g][b] for a in A for b in B for g in range(len(G.gamma)))
    )


def enumerate_subsets(universe: SymbolTable, nonempty_only: bool = True, bound: int = SUBSET_BOUND) -> Iterator[CrispSubset]:
    if len(universe) > bound:
        raise BoundExceeded(f"universe of {len(universe)} symbols exceeds the subset bound {bound}")
    for bits in range(1 if nonempty_only else 0, 1 << len(universe)):
        yield CrispSubset(universe, bits)


def semigroup_as_gamma(elements: SymbolTable, mult: Callable[[int, int], int], name: str = "") -> GammaSemigroup:
    """View a plain semigroup as a Gamma-semigroup with a single Gamma symbol."""
    gamma = SymbolTable(["."])
    n = len(elements)
    s_op = tuple(tuple((tuple(mult(x, y) for y in range(n)),)) for x in range(n))
    check_associativity(elements, gamma, s_op, None)
    return GammaSemigroup(elements, gamma, s_op, None, name)
