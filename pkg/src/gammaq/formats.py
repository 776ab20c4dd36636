"""GSEM v1 (structures) and QFZ v1 (Q-fuzzy subsets) text formats.

GSEM::

    gsem v1
    S: a b c
    G: γ δ
    SGS γ:          # one block per Gamma symbol: row = left operand, column = right
    a a a
    ...
    GSG a:          # optional, one block per carrier element, |Gamma| x |Gamma|
    ...

QFZ::

    qfz v1
    Q: p
    mu a p 4/5      # omitted (element, q) pairs have grade 0

``#`` starts a comment anywhere on a line.
"""

from __future__ import annotations

from collections.abc import Iterator

from .core import GammaSemigroup, SymbolTable, build_gamma_semigroup
from .errors import MissingEntry, ParseError, UnknownSymbol
from .qfuzzy import ZERO, QFuzzySubset, grade, render_grade


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield number, tokens


def _header(lines: list[tuple[int, list[str]]], magic: str) -> None:
    if not lines or lines[0][1] != magic.split():
        raise ParseError(f"expected header {magic!r}", lines[0][0] if lines else 1)


def _declaration(entry: tuple[int, list[str]], key: str) -> SymbolTable:
    number, tokens = entry
    if tokens[0] != f"{key}:" or len(tokens) < 2:
        raise ParseError(f"expected '{key}: <labels>'", number)
    try:
        return SymbolTable(tokens[1:])
    except ValueError as exc:
        raise ParseError(str(exc), number) from None


def parse_gsem(text: str, name: str = "") -> GammaSemigroup:
    lines = list(_lines(text))
    _header(lines, "gsem v1")
    if len(lines) < 3:
        raise ParseError("expected 'S:' and 'G:' declarations", lines[-1][0])
    carrier, gamma = _declaration(lines[1], "S"), _declaration(lines[2], "G")

    blocks: dict[tuple[str, str], list[tuple[int, list[str]]]] = {}
    i = 3
    while i < len(lines):
        number, tokens = lines[i]
        if len(tokens) != 2 or tokens[0] not in ("SGS", "GSG") or not tokens[1].endswith(":"):
            raise ParseError(f"expected 'SGS <gamma>:' or 'GSG <element>:', got {' '.join(tokens)!r}", number)
        kind, label = tokens[0], tokens[1][:-1]
        labels, rows = (gamma, carrier) if kind == "SGS" else (carrier, gamma)
        if label not in labels.index:
            raise ParseError(f"{kind} block for unknown symbol {label!r}", number)
        if (kind, label) in blocks:
            raise ParseError(f"duplicate {kind} block for {label!r}", number)
        body = lines[i + 1:i + 1 + len(rows)]
        if len(body) < len(rows) or any(t[0] in ("SGS", "GSG") for _, t in body):
            raise ParseError(f"{kind} {label} block needs {len(rows)} rows", number)
        for row_number, row in body:
            if len(row) != len(rows):
                raise MissingEntry(f"line {row_number}: expected {len(rows)} entries, got {len(row)}")
        blocks[kind, label] = body
        i += 1 + len(rows)

    for g in gamma:
        if ("SGS", g) not in blocks:
            raise ParseError(f"missing SGS block for {g!r}", lines[-1][0])
    gsg = [s for s in carrier if ("GSG", s) in blocks]
    if gsg and len(gsg) != len(carrier):
        missing = next(s for s in carrier if ("GSG", s) not in blocks)
        raise ParseError(f"missing GSG block for {missing!r}", lines[-1][0])

    s_op = {(x, g, y): blocks["SGS", g][carrier.index[x]][1][carrier.index[y]]
            for g in gamma for x in carrier for y in carrier}
    g_op = None
    if gsg:
        g_op = {(a, s, b): blocks["GSG", s][gamma.index[a]][1][gamma.index[b]]
                for s in carrier for a in gamma for b in gamma}
    return build_gamma_semigroup(carrier, gamma, s_op, g_op, name=name)


def render_gsem(G: GammaSemigroup) -> str:
    out = ["gsem v1"]
    if G.name:
        out.append(f"# {G.name}")
    out += ["S: " + " ".join(G.carrier), "G: " + " ".join(G.gamma)]
    for g in range(len(G.gamma)):
        out.append(f"SGS {G.gamma[g]}:")
        out += [" ".join(G.carrier[G.s_op[x][g][y]] for y in range(G.size)) for x in range(G.size)]
    if G.g_op is not None:
        for s in range(G.size):
            out.append(f"GSG {G.carrier[s]}:")
            out += [" ".join(G.gamma[G.g_op[a][s][b]] for b in range(len(G.gamma))) for a in range(len(G.gamma))]
    return "\n".join(out) + "\n"


def parse_qfz(text: str, carrier: SymbolTable | GammaSemigroup) -> QFuzzySubset:
    if isinstance(carrier, GammaSemigroup):
        carrier = carrier.carrier
    lines = list(_lines(text))
    _header(lines, "qfz v1")
    if len(lines) < 2:
        raise ParseError("expected a 'Q:' declaration", lines[0][0])
    qset = _declaration(lines[1], "Q")
    values: dict[tuple[str, str], object] = {}
    for number, tokens in lines[2:]:
        if len(tokens) != 4 or tokens[0] != "mu":
            raise ParseError("expected 'mu <element> <q> <grade>'", number)
        _, x, q, g = tokens
        if x not in carrier.index:
            raise UnknownSymbol(f"line {number}: unknown element {x!r}")
        if q not in qset.index:
            raise UnknownSymbol(f"line {number}: unknown Q symbol {q!r}")
        if (x, q) in values:
            raise ParseError(f"duplicate grade for ({x}, {q})", number)
        try:
            values[x, q] = grade(g)
        except ParseError as exc:
            raise ParseError(str(exc), number) from None
    return QFuzzySubset.from_labels(carrier, qset, values)


def render_qfz(mu: QFuzzySubset) -> str:
    out = ["qfz v1", "Q: " + " ".join(mu.qset)]
    for x, row in enumerate(mu.grades):
        for q, g in enumerate(row):
            if g != ZERO:
                out.append(f"mu {mu.carrier[x]} {mu.qset[q]} {render_grade(g)}")
    return "\n".join(out) + "\n"
