"""The shared fixture corpus.

Categories: ONE, Z2, P2, UNIT_ISO, REL2 and P2_ZERO (P2 with a zero object
adjoined; used for a non-monadic adjunction). Monads and 2-categories built
from them live next to the modules that define those notions.
"""

from __future__ import annotations

from itertools import product

from .fincat import FinDaggerCategory, make_category, monoid


def one() -> FinDaggerCategory:
    return monoid(["1"], {("1", "1"): "1"}, {"1": "1"})


def z2() -> FinDaggerCategory:
    table = {("1", "1"): "1", ("1", "s"): "s", ("s", "1"): "s", ("s", "s"): "1"}
    return monoid(["1", "s"], table, {"1": "1", "s": "s"})


def p2() -> FinDaggerCategory:
    table = {("1", "1"): "1", ("1", "p"): "p", ("p", "1"): "p", ("p", "p"): "p"}
    return monoid(["1", "p"], table, {"1": "1", "p": "p"})


def unit_iso() -> FinDaggerCategory:
    mors = {"1a": ("a", "a"), "1b": ("b", "b"), "u": ("a", "b"), "ud": ("b", "a")}
    comp = {
        ("1a", "1a"): "1a", ("1b", "1b"): "1b",
        ("u", "1a"): "u", ("1b", "u"): "u",
        ("ud", "1b"): "ud", ("1a", "ud"): "ud",
        ("ud", "u"): "1a", ("u", "ud"): "1b",
    }
    dag = {"1a": "1a", "1b": "1b", "u": "ud", "ud": "u"}
    return make_category(["a", "b"], mors, {"a": "1a", "b": "1b"}, comp, dag)


PAIRS = [(0, 0), (0, 1), (1, 0), (1, 1)]


def _rel_name(rel: frozenset) -> str:
    return "R" + "".join("1" if p in rel else "0" for p in PAIRS)


def rel2() -> FinDaggerCategory:
    """Relations on a 2-element set under relational composition and converse."""
    rels = [frozenset(p for p, bit in zip(PAIRS, bits) if bit) for bits in product((0, 1), repeat=4)]
    names = {r: _rel_name(r) for r in rels}
    table = {}
    for g, f in product(rels, repeat=2):
        gf = frozenset((x, z) for (x, y) in f for (y2, z) in g if y == y2)
        table[(names[g], names[f])] = names[gf]
    conv = {names[r]: names[frozenset((y, x) for (x, y) in r)] for r in rels}
    unit = names[frozenset({(0, 0), (1, 1)})]
    elements = [unit] + sorted(n for n in names.values() if n != unit)
    return monoid(elements, table, conv)


def p2_zero() -> FinDaggerCategory:
    """Objects 0, X; z: 0→X with z†z = 1_0 and e = zz† idempotent on X."""
    mors = {"10": ("0", "0"), "1X": ("X", "X"), "z": ("0", "X"), "zd": ("X", "0"), "e": ("X", "X")}
    comp = {
        ("10", "10"): "10", ("1X", "1X"): "1X",
        ("z", "10"): "z", ("1X", "z"): "z", ("e", "z"): "z",
        ("zd", "1X"): "zd", ("10", "zd"): "zd", ("zd", "e"): "zd",
        ("zd", "z"): "10", ("z", "zd"): "e",
        ("e", "1X"): "e", ("1X", "e"): "e", ("e", "e"): "e",
    }
    dag = {"10": "10", "1X": "1X", "z": "zd", "zd": "z", "e": "e"}
    return make_category(["0", "X"], mors, {"0": "10", "X": "1X"}, comp, dag)


CATEGORIES = {
    "ONE": one,
    "Z2": z2,
    "P2": p2,
    "UNIT_ISO": unit_iso,
    "REL2": rel2,
    "P2_ZERO": p2_zero,
}

# the corpus the acceptance sweeps iterate over
CORPUS = ("ONE", "Z2", "P2", "UNIT_ISO", "REL2")


def category(name: str) -> FinDaggerCategory:
    return CATEGORIES[name]()
