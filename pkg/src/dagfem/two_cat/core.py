"""Strict finite dagger 2-categories, their validation, 2-functors, and
the standard small examples."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Mapping

from ..errors import (
    Assoc1Fail,
    BadComposite,
    DaggerHorizontalFail,
    DanglingReference,
    InterchangeFail,
    MissingComposite,
    NotDaggerPreserving,
    NotFunctorial,
    Unit1Fail,
    ValidationError,
    WhiskerFail,
)
from ..fincat import CategoryDescription, FinDaggerCategory, discrete, make_category, relabel, validate_category
from ..functor import (
    DaggerFunctor,
    compose_functors,
    hom_category,
    identity_functor,
    validate_functor,
    whisker_left,
    whisker_right,
)


@dataclass
class TwoCategoryDescription:
    """Raw tables. ``hom`` values may be CategoryDescription or already
    validated categories. ``hcomp`` is an optional explicit table
    (β, α) -> β∗α that is checked against the whiskers."""

    cells0: list
    hom: dict
    id1: dict
    comp1: dict
    lwhisk: dict
    rwhisk: dict
    hcomp: dict | None = None
    payload: dict = field(default_factory=dict)


@dataclass(frozen=True)
class FinDagger2Category:
    cells0: tuple
    hom: Mapping[tuple, FinDaggerCategory]
    id1: Mapping[str, str]
    comp1: Mapping[tuple, str]
    lwhisk: Mapping[tuple, str]  # (g, α) -> gα
    rwhisk: Mapping[tuple, str]  # (α, f) -> αf
    payload: Mapping[str, Any] = field(default_factory=dict, compare=False, repr=False)
    _where1: Mapping[str, tuple] = field(default_factory=dict, init=False, compare=False, repr=False)
    _where2: Mapping[str, tuple] = field(default_factory=dict, init=False, compare=False, repr=False)

    __hash__ = None  # type: ignore[assignment]

    def __post_init__(self):
        w1, w2 = {}, {}
        for key, c in self.hom.items():
            for f in c.objects:
                w1[f] = key
            for a in c.morphisms:
                w2[a] = key
        object.__setattr__(self, "_where1", w1)
        object.__setattr__(self, "_where2", w2)

    # -- 1-cells
    def cells1(self) -> list:
        return sorted(self._where1)

    def cells2(self) -> list:
        return sorted(self._where2)

    def is1(self, f: str) -> bool:
        return f in self._where1

    def is2(self, a: str) -> bool:
        return a in self._where2

    def ends1(self, f: str) -> tuple:
        return self._where1[f]

    def ends2(self, a: str) -> tuple:
        return self._where2[a]

    def hom1(self, a: str, b: str) -> tuple:
        return self.hom[(a, b)].objects

    def c1(self, *fs: str) -> str:
        """c1(h, g, f) = h∘g∘f."""
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.comp1[(g, out)]
        return out

    # -- 2-cells
    def homcat(self, a: str) -> FinDaggerCategory:
        return self.hom[self._where2[a]]

    def src2(self, a: str) -> str:
        return self.homcat(a).src(a)

    def tgt2(self, a: str) -> str:
        return self.homcat(a).tgt(a)

    def id2(self, f: str) -> str:
        return self.hom[self._where1[f]].id(f)

    def v(self, *alphas: str) -> str:
        """Vertical composite v(γ, β, α) = γ·β·α."""
        return self.homcat(alphas[-1]).comp(*alphas)

    def dag2(self, a: str) -> str:
        return self.homcat(a).dag(a)

    def lw(self, g: str, a: str) -> str:
        return self.lwhisk[(g, a)]

    def rw(self, a: str, f: str) -> str:
        return self.rwhisk[(a, f)]

    def h(self, b: str, a: str) -> str:
        """β∗α = (β f')·(g α) for α: f ⇒ f', β: g ⇒ g'."""
        return self.v(self.rw(b, self.tgt2(a)), self.lw(self.src2(b), a))

    def hom2(self, f: str, g: str) -> tuple:
        return self.hom[self._where1[f]].hom(f, g)

    @property
    def size(self) -> tuple:
        return len(self.cells0), len(self._where1), len(self._where2)


def _ensure_cat(c) -> FinDaggerCategory:
    if isinstance(c, FinDaggerCategory):
        return c
    return validate_category(c)


def validate_2category(desc: TwoCategoryDescription) -> FinDagger2Category:
    cells0 = sorted(set(desc.cells0))
    homs: dict = {}
    for a, b in product(cells0, repeat=2):
        if (a, b) not in desc.hom:
            homs[(a, b)] = make_category([], {}, {}, {}, {})
        else:
            homs[(a, b)] = _ensure_cat(desc.hom[(a, b)])
    for key in desc.hom:
        if key not in homs:
            raise DanglingReference(f"hom declared for unknown 0-cells {key}", key)

    seen1, seen2 = {}, {}
    for key in sorted(homs):
        for f in homs[key].objects:
            if f in seen1:
                raise DanglingReference(f"1-cell id {f} used in two homs", (f, seen1[f], key))
            seen1[f] = key
        for x in homs[key].morphisms:
            if x in seen2:
                raise DanglingReference(f"2-cell id {x} used in two homs", (x, seen2[x], key))
            seen2[x] = key

    for a in cells0:
        i = desc.id1.get(a)
        if i is None or seen1.get(i) != (a, a):
            raise Unit1Fail(f"identity 1-cell of {a} missing or mistyped", (a, i))

    comp1 = desc.comp1
    ones = sorted(seen1)
    by_src: dict = {}
    for f in ones:
        by_src.setdefault(seen1[f][0], []).append(f)
    composable = [(g, f) for f in ones for g in by_src.get(seen1[f][1], ())]
    composable.sort()
    for g, f in composable:
        gf = comp1.get((g, f))
        if gf is None:
            raise MissingComposite(f"1-cell composite {g}∘{f} undefined", (g, f))
        if seen1.get(gf) != (seen1[f][0], seen1[g][1]):
            raise BadComposite(f"{g}∘{f} = {gf} has wrong endpoints", (g, f, gf))
    if len(comp1) != len(composable):
        allowed = set(composable)
        extra = sorted(k for k in comp1 if k not in allowed)
        raise BadComposite(f"1-cell composite on non-composable pair {extra[0]}", extra[0])
    for f in ones:
        a, b = seen1[f]
        if comp1[(f, desc.id1[a])] != f or comp1[(desc.id1[b], f)] != f:
            raise Unit1Fail(f"identity 1-cells are not units for {f}", (f,))
    for g, f in composable:
        for h in by_src.get(seen1[g][1], ()):
            if comp1[(h, comp1[(g, f)])] != comp1[(comp1[(h, g)], f)]:
                raise Assoc1Fail(f"1-cell composition not associative at {(h, g, f)}", (h, g, f))

    K = FinDagger2Category(
        tuple(cells0), homs, {a: desc.id1[a] for a in cells0}, {k: comp1[k] for k in sorted(comp1)},
        dict(desc.lwhisk), dict(desc.rwhisk), dict(desc.payload),
    )
    _check_whiskers(K, seen1, seen2, by_src)
    _check_interchange(K, desc.hcomp)
    _check_dagger_horizontal(K)
    return K


def _check_whiskers(K: FinDagger2Category, seen1, seen2, by_src) -> None:
    twos = sorted(seen2)
    expected_l, expected_r = set(), set()
    for x in twos:
        a, b = seen2[x]
        hc = K.hom[(a, b)]
        f, f2 = hc.morphisms[x]
        for g in by_src.get(b, ()):
            expected_l.add((g, x))
            gx = K.lwhisk.get((g, x))
            if gx is None or seen2.get(gx) is None or K.homcat(gx).morphisms[gx] != (K.c1(g, f), K.c1(g, f2)):
                raise WhiskerFail(f"left whisker {g}∗{x} missing or mistyped", (g, x, gx))
        for e in sorted(e for e in seen1 if seen1[e][1] == a):
            expected_r.add((x, e))
            xe = K.rwhisk.get((x, e))
            if xe is None or seen2.get(xe) is None or K.homcat(xe).morphisms[xe] != (K.c1(f, e), K.c1(f2, e)):
                raise WhiskerFail(f"right whisker {x}∗{e} missing or mistyped", (x, e, xe))
    if set(K.lwhisk) != expected_l:
        raise WhiskerFail("left whisker table has extra entries", sorted(set(K.lwhisk) - expected_l)[0])
    if set(K.rwhisk) != expected_r:
        raise WhiskerFail("right whisker table has extra entries", sorted(set(K.rwhisk) - expected_r)[0])

    # functoriality of whiskering on each hom
    for (a, b), hc in sorted(K.hom.items()):
        for f in hc.objects:
            i = hc.id(f)
            for g in by_src.get(b, ()):
                if K.lw(g, i) != K.id2(K.c1(g, f)):
                    raise WhiskerFail(f"{g}∗1_{f} is not an identity", (g, i))
            for e in sorted(e for e in seen1 if seen1[e][1] == a):
                if K.rw(i, e) != K.id2(K.c1(f, e)):
                    raise WhiskerFail(f"1_{f}∗{e} is not an identity", (i, e))
        for (y, x), yx in sorted(hc.compose.items()):
            for g in by_src.get(b, ()):
                if K.lw(g, yx) != K.v(K.lw(g, y), K.lw(g, x)):
                    raise WhiskerFail(f"{g}∗- does not preserve {y}·{x}", (g, y, x))
            for e in sorted(e for e in seen1 if seen1[e][1] == a):
                if K.rw(yx, e) != K.v(K.rw(y, e), K.rw(x, e)):
                    raise WhiskerFail(f"-∗{e} does not preserve {y}·{x}", (y, x, e))

    # whisker units and associativity
    for x in twos:
        a, b = seen2[x]
        if K.lw(K.id1[b], x) != x or K.rw(x, K.id1[a]) != x:
            raise WhiskerFail(f"identity 1-cells do not whisker trivially on {x}", (x,))
        for g in by_src.get(b, ()):
            c = seen1[g][1]
            for h in by_src.get(c, ()):
                if K.lw(h, K.lw(g, x)) != K.lw(K.c1(h, g), x):
                    raise WhiskerFail(f"{h}∗({g}∗{x}) != ({h}{g})∗{x}", (h, g, x))
            for e in sorted(e for e in seen1 if seen1[e][1] == a):
                if K.rw(K.lw(g, x), e) != K.lw(g, K.rw(x, e)):
                    raise WhiskerFail(f"({g}∗{x})∗{e} != {g}∗({x}∗{e})", (g, x, e))
        for e in sorted(e for e in seen1 if seen1[e][1] == a):
            for d in sorted(d for d in seen1 if seen1[d][1] == seen1[e][0]):
                if K.rw(K.rw(x, e), d) != K.rw(x, K.c1(e, d)):
                    raise WhiskerFail(f"({x}∗{e})∗{d} != {x}∗({e}{d})", (x, e, d))


def _horizontal_pairs(K: FinDagger2Category):
    """All (β, α) with α in K(A, B), β in K(B, C), in id order."""
    for a, b, c in product(K.cells0, repeat=3):
        for x in K.hom[(a, b)].mor_ids():
            for y in K.hom[(b, c)].mor_ids():
                yield y, x


def _check_interchange(K: FinDagger2Category, hcomp: Mapping | None) -> None:
    for y, x in _horizontal_pairs(K):
        f2 = K.tgt2(x)
        g = K.src2(y)
        lhs = K.v(K.rw(y, f2), K.lw(g, x))
        rhs = K.v(K.lw(K.tgt2(y), x), K.rw(y, K.src2(x)))
        if lhs != rhs:
            raise InterchangeFail(f"({y}{f2})·({g}{x}) != ({K.tgt2(y)}{x})·({y}{K.src2(x)})", (y, x))
    if hcomp is None:
        return

    def hc(y, x):
        r = hcomp.get((y, x))
        if r is None:
            raise InterchangeFail(f"horizontal composite {y}∗{x} missing", (y, x))
        return r

    # quadruple form of interchange over the given table
    for a, b, c in product(K.cells0, repeat=3):
        AB, BC = K.hom[(a, b)], K.hom[(b, c)]
        for (x2, x1), x21 in sorted(AB.compose.items()):
            for (y2, y1), y21 in sorted(BC.compose.items()):
                if hc(y21, x21) != K.v(hc(y2, x2), hc(y1, x1)):
                    raise InterchangeFail(
                        f"({y2}·{y1})∗({x2}·{x1}) != ({y2}∗{x2})·({y1}∗{x1})", (y2, y1, x2, x1)
                    )
    for y, x in _horizontal_pairs(K):
        if hc(y, x) != K.h(y, x):
            raise InterchangeFail(f"{y}∗{x} disagrees with the whiskers", (y, x))


def _check_dagger_horizontal(K: FinDagger2Category) -> None:
    for y, x in _horizontal_pairs(K):
        if K.dag2(K.h(y, x)) != K.h(K.dag2(y), K.dag2(x)):
            raise DaggerHorizontalFail(f"({y}∗{x})† != {y}†∗{x}†", (y, x))


def make_2category(cells0, hom, id1, comp1, lwhisk, rwhisk, hcomp=None, payload=None) -> FinDagger2Category:
    return validate_2category(
        TwoCategoryDescription(list(cells0), dict(hom), dict(id1), dict(comp1), dict(lwhisk), dict(rwhisk), hcomp, dict(payload or {}))
    )


def opposite_2category(K: FinDagger2Category) -> FinDagger2Category:
    """Reverse 1-cells; 2-cells keep their direction."""
    return make_2category(
        K.cells0,
        {(b, a): c for (a, b), c in K.hom.items()},
        K.id1,
        {(f, g): gf for (g, f), gf in K.comp1.items()},
        {(f, x): xf for (x, f), xf in K.rwhisk.items()},
        {(x, g): gx for (g, x), gx in K.lwhisk.items()},
        payload=K.payload,
    )


def locally_discrete(C: FinDaggerCategory) -> FinDagger2Category:
    """Objects as 0-cells, morphisms as 1-cells, only identity 2-cells ``1_f``."""
    hom = {}
    for a, b in product(C.objects, repeat=2):
        d = discrete(C.hom(a, b))
        hom[(a, b)] = relabel(d, {f: f for f in d.objects}, {f"1{f}": f"1_{f}" for f in d.objects})
    lw = {(g, f"1_{f}"): f"1_{C.comp(g, f)}" for (g, f) in C.compose}
    rw = {(f"1_{g}", f): f"1_{C.comp(g, f)}" for (g, f) in C.compose}
    return make_2category(C.objects, hom, C.identity, C.compose, lw, rw)


def suspension(C: FinDaggerCategory, one_cell: str = "t0") -> FinDagger2Category:
    """One 0-cell, one 1-cell; 2-cells the morphisms of a one-object category
    with commutative composition, horizontal composite = composition."""
    if len(C.objects) != 1:
        raise ValidationError("suspension needs a one-object category", C.objects)
    (o,) = C.objects
    hc = relabel(C, {o: one_cell}, {m: m for m in C.morphisms})
    lw = {(one_cell, x): x for x in C.morphisms}
    rw = {(x, one_cell): x for x in C.morphisms}
    hcomp = {(y, x): C.comp(y, x) for y in C.morphisms for x in C.morphisms}
    return make_2category(["*"], {("*", "*"): hc}, {"*": one_cell}, {(one_cell, one_cell): one_cell}, lw, rw, hcomp)


def sigma_z2() -> FinDagger2Category:
    from ..fixtures import z2

    return suspension(z2())


def terminal_2category() -> FinDagger2Category:
    from ..fixtures import one

    return locally_discrete(one())


def _pad(i: int, n: int) -> str:
    return str(i).zfill(len(str(max(n - 1, 0))))


def functor_2category(cats: Mapping[str, FinDaggerCategory]) -> FinDagger2Category:
    """0-cells the named categories; homs ``hom_category``; composition of
    functors and whiskering of transformations. 1-cells are ``A>B:fi``,
    2-cells ``A>B:aj``; ``payload`` maps them back to functors/naturals."""
    names = sorted(cats)
    hom, payload = {}, {}
    fkey, nkey = {}, {}  # (pair, key) -> id
    for a, b in product(names, repeat=2):
        H = hom_category(cats[a], cats[b])
        objs = sorted(H.objects, key=lambda k: _fun_order(H.payload[k]))
        om = {k: f"{a}>{b}:f{_pad(i, len(objs))}" for i, k in enumerate(objs)}
        mors = sorted(H.morphisms, key=lambda k: (objs.index(H.morphisms[k][0]), objs.index(H.morphisms[k][1]), k))
        mm = {k: f"{a}>{b}:a{_pad(i, len(mors))}" for i, k in enumerate(mors)}
        hom[(a, b)] = relabel(H, om, mm)
        for k, i in om.items():
            payload[i] = H.payload[k]
            fkey[(a, b, k)] = i
        for k, i in mm.items():
            payload[i] = H.payload[k]
            nkey[(a, b, k)] = i
    ids = {a: fkey[(a, a, identity_functor(cats[a]).key)] for a in names}
    comp1, lw, rw = {}, {}, {}
    for a, b, c in product(names, repeat=3):
        for f in hom[(a, b)].objects:
            for g in hom[(b, c)].objects:
                comp1[(g, f)] = fkey[(a, c, compose_functors(payload[g], payload[f]).key)]
        for x in hom[(a, b)].morphisms:
            for g in hom[(b, c)].objects:
                lw[(g, x)] = nkey[(a, c, whisker_left(payload[g], payload[x]).key)]
        for f in hom[(a, b)].objects:
            for y in hom[(b, c)].morphisms:
                rw[(y, f)] = nkey[(a, c, whisker_right(payload[y], payload[f]).key)]
    return make_2category(names, hom, ids, comp1, lw, rw, payload=payload)


def _fun_order(F: DaggerFunctor) -> tuple:
    # enumeration order of functor search: object images, then morphism images
    return tuple(F.obj_map[a] for a in F.source.objects) + tuple(F.mor_map[m] for m in F.source.mor_ids())


def cell_of(K: FinDagger2Category, obj: Any) -> str:
    """Id of the 1- or 2-cell whose payload has the same maps as ``obj``."""
    for k, v in K.payload.items():
        if type(v) is type(obj) and v.key == obj.key and _same_ends(v, obj):
            return k
    raise DanglingReference("no cell carries this functor or transformation", getattr(obj, "key", obj))


def _same_ends(a, b) -> bool:
    if isinstance(a, DaggerFunctor):
        return a.source == b.source and a.target == b.target
    return a.F.source == b.F.source and a.F.target == b.F.target


# -- dagger 2-functors ----------------------------------------------------------


@dataclass(frozen=True)
class Dagger2Functor:
    source: FinDagger2Category
    target: FinDagger2Category
    obj_map: Mapping[str, str]
    map1: Mapping[str, str]
    map2: Mapping[str, str]

    __hash__ = None  # type: ignore[assignment]


def validate_2functor(source: FinDagger2Category, target: FinDagger2Category, obj_map, map1, map2) -> Dagger2Functor:
    S, T = source, target
    for a in S.cells0:
        if obj_map.get(a) not in T.cells0:
            raise DanglingReference(f"0-cell {a} has no valid image", (a, obj_map.get(a)))
    for (a, b), hc in sorted(S.hom.items()):
        om = {f: map1.get(f) for f in hc.objects}
        mm = {x: map2.get(x) for x in hc.morphisms}
        try:
            validate_functor(hc, T.hom[(obj_map[a], obj_map[b])], om, mm)
        except NotDaggerPreserving:
            raise
        except ValidationError as e:
            raise NotFunctorial(f"hom map on ({a}, {b}) is not a functor: {e}", e.witness) from e
    for a in S.cells0:
        if map1[S.id1[a]] != T.id1[obj_map[a]]:
            raise NotFunctorial(f"identity 1-cell of {a} not preserved", (a,))
    for (g, f), gf in S.comp1.items():
        if map1[gf] != T.c1(map1[g], map1[f]):
            raise NotFunctorial(f"F({g}∘{f}) != F{g}∘F{f}", (g, f))
    for (g, x), gx in S.lwhisk.items():
        if map2[gx] != T.lw(map1[g], map2[x]):
            raise NotFunctorial(f"left whisker {g}∗{x} not preserved", (g, x))
    for (x, f), xf in S.rwhisk.items():
        if map2[xf] != T.rw(map2[x], map1[f]):
            raise NotFunctorial(f"right whisker {x}∗{f} not preserved", (x, f))
    return Dagger2Functor(S, T, dict(obj_map), dict(map1), dict(map2))


def identity_2functor(K: FinDagger2Category) -> Dagger2Functor:
    return Dagger2Functor(
        K, K, {a: a for a in K.cells0}, {f: f for f in K.cells1()}, {x: x for x in K.cells2()}
    )


def constant_2functor(S: FinDagger2Category, T: FinDagger2Category, c: str) -> Dagger2Functor:
    i = T.id1[c]
    return validate_2functor(
        S, T, {a: c for a in S.cells0}, {f: i for f in S.cells1()}, {x: T.id2(i) for x in S.cells2()}
    )


def compose_2functors(G: Dagger2Functor, F: Dagger2Functor) -> Dagger2Functor:
    return Dagger2Functor(
        F.source,
        G.target,
        {a: G.obj_map[F.obj_map[a]] for a in F.source.cells0},
        {f: G.map1[F.map1[f]] for f in F.map1},
        {x: G.map2[F.map2[x]] for x in F.map2},
    )
