"""Small reference structures used by the tests and the ``verify`` suite.

LZ3      3-element left-zero Gamma-semigroup, two Gamma symbols, x g y = x.
CONST2   S = {a, b}, one Gamma symbol, every product is a (not regular).
MOD16    S = {1, 5, 9, 13}, Gamma = {3, 7, 11, 15}, both products are sums mod 16.
MOD4MUL  S = Gamma = Z4 under multiplication mod 4 (both-sided, not regular).
T2       S = Gamma = full transformation monoid on {0, 1}, products are
         composition; both-sided, regular and non-commutative.
"""

from __future__ import annotations

from .core import GammaSemigroup, build_gamma_semigroup
from .qfuzzy import QFuzzySubset, default_qset


def lz3() -> GammaSemigroup:
    return build_gamma_semigroup("abc", ["γ", "δ"], lambda x, g, y: x, name="LZ3")


def lz3_mu() -> QFuzzySubset:
    G = lz3()
    return QFuzzySubset.from_labels(G.carrier, default_qset(1),
                                    {("a", "p"): "0.8", ("b", "p"): "0.7", ("c", "p"): "0.6"})


def const2() -> GammaSemigroup:
    return build_gamma_semigroup("ab", ["g"], lambda x, g, y: "a", name="CONST2")


def mod16() -> GammaSemigroup:
    def add(*parts: str) -> str:
        return str(sum(map(int, parts)) % 16)

    return build_gamma_semigroup(["1", "5", "9", "13"], ["3", "7", "11", "15"], add, add, name="MOD16")


def mod4mul() -> GammaSemigroup:
    def mul(*parts: str) -> str:
        p = 1
        for v in parts:
            p *= int(v)
        return str(p % 4)

    z4 = ["0", "1", "2", "3"]
    return build_gamma_semigroup(z4, z4, mul, mul, name="MOD4MUL")


# maps on {0, 1} as (image of 0, image of 1); x g y means apply y, then g, then x
_T2 = {"id": (0, 1), "sw": (1, 0), "c0": (0, 0), "c1": (1, 1)}
_T2_NAME = {v: k for k, v in _T2.items()}


def t2() -> GammaSemigroup:
    def comp(*names: str) -> str:
        f = (0, 1)
        for name in reversed(names):
            f = tuple(_T2[name][i] for i in f)
        return _T2_NAME[f]

    return build_gamma_semigroup(list(_T2), list(_T2), comp, comp, name="T2")


BUNDLED = {"LZ3": lz3, "CONST2": const2, "MOD16": mod16, "MOD4MUL": mod4mul, "T2": t2}


def bundled() -> list[GammaSemigroup]:
    return [make() for make in BUNDLED.values()]

