"""Command-line interface.

Exit codes: 0 when every check agrees, 1 when a discrepancy is found, 2 for
input or usage errors.  Structure arguments are GSEM file paths or the name
of a bundled structure (LZ3, CONST2, MOD16, MOD4MUL, T2); QFZ arguments may
likewise name a bundled file such as LZ3_mu.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import composition, core, operators, qfuzzy
from .errors import GammaQError, UnknownTheorem
from .formats import parse_gsem, parse_qfz, render_qfz
from .harness import SEARCH_ALIASES, SUITE, THEOREMS, run_search, run_suite, run_verify
from .qfuzzy import render_grade

EXIT_OK, EXIT_DISCREPANCY, EXIT_USAGE = 0, 1, 2


def bundled_names() -> list[str]:
    return sorted(p.name[:-5] for p in resources.files("gammaq").joinpath("data").iterdir() if p.name.endswith(".gsem"))


def _read(arg: str, suffix: str) -> tuple[str, str]:
    """Text and name of a file path, or of a bundled data file matched by name."""
    path = Path(arg)
    if path.exists():
        return path.read_text(encoding="utf-8"), path.stem
    data = resources.files("gammaq").joinpath("data")
    for entry in data.iterdir():
        stem = entry.name[:-len(suffix)]
        if entry.name.endswith(suffix) and stem.lower() == arg.lower():
            return entry.read_text(encoding="utf-8"), stem
    raise GammaQError(f"no such file or bundled {suffix} data: {arg}")


def load_structure(arg: str) -> core.GammaSemigroup:
    text, name = _read(arg, ".gsem")
    return parse_gsem(text, name=name)


def load_fuzzy(arg: str, universe) -> qfuzzy.QFuzzySubset:
    return parse_qfz(_read(arg, ".qfz")[0], universe)


def parse_grid(text: str) -> tuple[Fraction, ...]:
    """``n`` for n evenly spaced points on [0, 1], or explicit comma-separated grades."""
    try:
        if "," not in text and "/" not in text and "." not in text:
            return qfuzzy.uniform_grid(int(text))
        return tuple(sorted({qfuzzy.grade(t) for t in text.split(",")}))
    except (ValueError, GammaQError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_subset(universe: core.SymbolTable, text: str) -> core.CrispSubset:
    """Comma- or space-separated labels; bracketed operator labels like [0,1] stay whole."""
    labels = re.findall(r"\[[^\]]*\]|[^,{}\s]+", text)
    try:
        return core.CrispSubset.from_labels(universe, labels)
    except KeyError as exc:
        raise GammaQError(str(exc)) from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def cmd_validate(args) -> int:
    G = load_structure(args.structure)
    print(f"valid {G}")
    return EXIT_OK


def cmd_regular(args) -> int:
    r = core.is_regular(load_structure(args.structure))
    if r:
        print("regular: true")
        for x, b in r.witnesses.items():
            print(f"  {x} = {x} {b} {x}")
    else:
        print(f"regular: false (no b with {r.failing} b {r.failing} = {r.failing})")
    return EXIT_OK


def cmd_ideal(args) -> int:
    G = load_structure(args.structure)
    A = parse_subset(G.carrier, args.subset)
    failure = core.ideal_failure(G, A, args.side)
    if failure is None:
        print(f"{A} is a {args.side} ideal: true")
    else:
        side, x, g, y = failure
        print(f"{A} is a {args.side} ideal: false ({G.carrier[x]} {G.gamma[g]} {G.carrier[y]} escapes on the {side})")
    return EXIT_OK


def cmd_qideal(args) -> int:
    G = load_structure(args.structure)
    check = qfuzzy.is_q_fuzzy_ideal(G, load_fuzzy(args.qfz, G), args.side)
    print(f"Q-fuzzy {args.side} ideal: {str(check.holds).lower()}")
    if check.witness:
        w = check.witness
        print(f"  witness: mu({w['x']} {w['gamma']} {w['y']}, {w['q']}) below the {w['side']} bound")
    return EXIT_OK


def cmd_level(args) -> int:
    G = load_structure(args.structure)
    print(qfuzzy.level_set(load_fuzzy(args.qfz, G), qfuzzy.grade(args.t)))
    return EXIT_OK


def cmd_image(args) -> int:
    G = load_structure(args.structure)
    print("{" + ",".join(render_grade(g) for g in qfuzzy.image(load_fuzzy(args.qfz, G))) + "}")
    return EXIT_OK


def cmd_compose(args) -> int:
    G = load_structure(args.structure)
    mu = composition.compose(G, load_fuzzy(args.left, G), load_fuzzy(args.right, G))
    _emit(render_qfz(mu), args.output)
    return EXIT_OK


def _operator(G: core.GammaSemigroup, kind: str) -> operators.OperatorSemigroup:
    return operators.build_left_operator(G) if kind == "left" else operators.build_right_operator(G)


def cmd_operators(args) -> int:
    G = load_structure(args.structure)
    op = _operator(G, args.kind)
    labels = [e.label for e in op.elements]
    pair = (lambda p: f"[{G.carrier[p[0]]},{G.gamma[p[1]]}]") if op.kind == "left" else \
        (lambda p: f"[{G.gamma[p[0]]},{G.carrier[p[1]]}]")
    report = {
        "kind": op.kind,
        "structure": G.name,
        "classes": [{"class": e.label, "members": [pair(p) for p in e.class_members]} for e in op.elements],
        "mult": {a: {b: labels[op.mult[i][j]] for j, b in enumerate(labels)} for i, a in enumerate(labels)},
        "unity": None if op.unity is None else labels[op.unity],
    }
    _emit(_json(report), args.output)
    return EXIT_OK


def cmd_map(args) -> int:
    G = load_structure(args.structure)
    kind, to_source, _, _ = operators.MAPS[args.kind]
    op = _operator(G, kind)
    domain = op.carrier if to_source else G.carrier
    if (args.qfz is None) == (args.subset is None):
        raise GammaQError("give exactly one of a QFZ file or --subset")
    if args.subset is not None:
        _emit(str(operators.apply_map(op, args.kind, parse_subset(domain, args.subset))), args.output)
    else:
        _emit(render_qfz(operators.apply_map(op, args.kind, load_fuzzy(args.qfz, domain))), args.output)
    return EXIT_OK


def _theorems(values: list[str] | None) -> list[str] | None:
    if not values:
        return None
    out = [t.strip() for v in values for t in v.split(",") if t.strip()]
    for t in out:
        if t not in THEOREMS:
            raise UnknownTheorem(f"unknown theorem {t!r}; choose from {', '.join(THEOREMS)}")
    return out


def cmd_verify(args) -> int:
    structures = [load_structure(s) for s in (args.structures or bundled_names())]
    theorems = _theorems(args.theorem)
    sides = [args.side] if args.side else None
    if theorems:
        # explicitly requested results must apply; let the hypothesis error surface
        reports = [run_verify(G, t, args.grid, args.q_size, sides) for G in structures for t in theorems]
        skipped = []
    else:
        reports, skipped = run_suite(structures, None, args.grid, args.q_size, sides)
    body = {
        "reports": [r.to_dict(timing=args.timing, max_discrepancies=args.max_witnesses) for r in reports],
        "skipped": skipped,
        "summary": {
            "reports": len(reports),
            "cases_checked": sum(r.cases_checked for r in reports),
            "discrepancies": sum(len(r.discrepancies) for r in reports),
            "grid": [render_grade(g) for g in args.grid],
            "q_size": args.q_size,
        },
    }
    _emit(_json(body), args.output)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_DISCREPANCY


def cmd_search(args) -> int:
    report = run_search(args.property, args.max_s, args.max_g, args.grid, args.q_size)
    _emit(_json(report.to_dict(timing=args.timing, max_discrepancies=args.max_witnesses)), args.output)
    return EXIT_OK if report.ok else EXIT_DISCREPANCY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gammaq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, func, help: str, structure: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        if structure:
            p.add_argument("structure", help="GSEM file or bundled structure name")
        p.set_defaults(func=func)
        return p

    command("validate", cmd_validate, "parse and validate a structure")
    command("regular", cmd_regular, "decide regularity, with witnesses")

    p = command("ideal", cmd_ideal, "is a crisp subset an ideal")
    p.add_argument("--subset", required=True, help="comma-separated labels, e.g. a,b")
    p.add_argument("--side", choices=core.SIDES, default="both")

    p = command("qideal", cmd_qideal, "is a Q-fuzzy subset a Q-fuzzy ideal")
    p.add_argument("qfz")
    p.add_argument("--side", choices=core.SIDES, default="both")

    p = command("level", cmd_level, "level set of a Q-fuzzy subset")
    p.add_argument("qfz")
    p.add_argument("--t", required=True, help="threshold, n/d or decimal")

    p = command("image", cmd_image, "distinct grades of a Q-fuzzy subset")
    p.add_argument("qfz")

    p = command("compose", cmd_compose, "sup-min composition of two Q-fuzzy subsets")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output")

    p = command("operators", cmd_operators, "left or right operator semigroup")
    p.add_argument("--kind", choices=("left", "right"), default="left")
    p.add_argument("-o", "--output")

    p = command("map", cmd_map, "apply one of the maps + +' * *' to a QFZ file or crisp subset")
    p.add_argument("qfz", nargs="?")
    p.add_argument("--kind", choices=sorted(operators.MAPS), required=True)
    p.add_argument("--subset", help="apply the crisp map to these labels instead")
    p.add_argument("-o", "--output")

    for name, func, help in (("verify", cmd_verify, "exhaustively check stated results"),
                             ("search", cmd_search, "search all small structures for counterexamples")):
        p = command(name, func, help, structure=False)
        if name == "verify":
            p.add_argument("structures", nargs="*", help="GSEM files or bundled names (default: all bundled)")
            p.add_argument("--theorem", action="append",
                           help=f"result id(s), comma-separated; default suite: {', '.join(SUITE)}")
            p.add_argument("--side", choices=core.SIDES)
            p.add_argument("--grid", type=parse_grid, default=qfuzzy.DEFAULT_GRID,
                           help="grid size n (uniform on [0,1]) or explicit values; default 5")
        else:
            p.add_argument("--property", required=True,
                           help=f"one of {', '.join(SEARCH_ALIASES)} or a result id")
            p.add_argument("--max-s", type=int, default=2)
            p.add_argument("--max-g", type=int, default=1)
            p.add_argument("--grid", type=parse_grid, default=qfuzzy.uniform_grid(3),
                           help="grid size n or explicit values; default 3")
        p.add_argument("--q-size", type=int, default=1)
        p.add_argument("--timing", action="store_true", help="include elapsed seconds (not byte-stable)")
        p.add_argument("--max-witnesses", type=int, default=100, help="discrepancies listed per report")
        p.add_argument("-o", "--output")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GammaQError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
