"""Enumeration of all (labelled) one-sided Gamma-semigroups of a given size.

Each Gamma symbol induces an associative binary table on S, and two tables A,
B must satisfy (x A y) B z = x A (y B z).  So we first collect the associative
tables on n points by backtracking, then pick m-tuples that are pairwise
compatible.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import product

from .core import GammaSemigroup, SymbolTable
from .errors import BoundExceeded

MAX_S, MAX_G = 3, 2
CARRIER_LABELS = "abcdefgh"
GAMMA_LABELS = "αβγδεζηθ"


def associative_tables(n: int) -> list[tuple[int, ...]]:
    """All associative n x n tables, flattened row-major, in lexicographic order."""
    cells = n * n
    table = [-1] * cells
    found = []

    def consistent() -> bool:
        for a, b, c in product(range(n), repeat=3):
            ab, bc = table[a * n + b], table[b * n + c]
            if ab < 0 or bc < 0:
                continue
            left, right = table[ab * n + c], table[a * n + bc]
            if left >= 0 and right >= 0 and left != right:
                return False
        return True

    def extend(i: int) -> None:
        if i == cells:
            found.append(tuple(table))
            return
        for v in range(n):
            table[i] = v
            if consistent():
                extend(i + 1)
        table[i] = -1

    extend(0)
    return found


def _compatible(A: tuple[int, ...], B: tuple[int, ...], n: int) -> bool:
    return all(B[A[x * n + y] * n + z] == A[x * n + B[y * n + z]] for x, y, z in product(range(n), repeat=3))


def enumerate_gamma_semigroups(n: int, m: int, *, max_s: int = MAX_S, max_g: int = MAX_G) -> Iterator[GammaSemigroup]:
    """Every one-sided Gamma-semigroup on n carrier points and m Gamma symbols."""
    if not 1 <= n <= max_s or not 1 <= m <= max_g:
        raise BoundExceeded(f"|S|={n}, |Gamma|={m} is outside the search limits |S|<={max_s}, |Gamma|<={max_g}")
    if n > len(CARRIER_LABELS) or m > len(GAMMA_LABELS):
        raise BoundExceeded("not enough labels for a structure this large")
    tables = associative_tables(n)
    ok = {(i, j) for i, j in product(range(len(tables)), repeat=2) if _compatible(tables[i], tables[j], n)}
    carrier, gamma = SymbolTable(CARRIER_LABELS[:n]), SymbolTable(GAMMA_LABELS[:m])
    count = 0

    def pick(chosen: list[int]) -> Iterator[list[int]]:
        if len(chosen) == m:
            yield chosen
            return
        for j in range(len(tables)):
            if all((i, j) in ok and (j, i) in ok for i in chosen):
                yield from pick(chosen + [j])

    for choice in pick([]):
        s_op = tuple(tuple(tuple(tables[t][x * n + y] for y in range(n)) for t in choice) for x in range(n))
        yield GammaSemigroup(carrier, gamma, s_op, None, name=f"S{n}G{m}#{count}")
        count += 1
