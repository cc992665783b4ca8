"""Finite dagger categories stored as explicit tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Iterable, Mapping

from .errors import (
    BadComposite,
    BadIdentity,
    DaggerNotFunctorial,
    DaggerNotInvolutive,
    DaggerWrongEndpoints,
    DanglingReference,
    MissingComposite,
    NonAssociative,
    UnknownMorphism,
)


@dataclass
class CategoryDescription:
    """Raw tables, not yet validated.

    ``morphisms`` maps id -> (src, tgt); ``compose`` maps (g, f) -> g∘f.
    """

    objects: list
    morphisms: dict
    identity: dict
    compose: dict
    dagger: dict
    payload: dict = field(default_factory=dict)


@dataclass(frozen=True)
class FinDaggerCategory:
    objects: tuple
    morphisms: Mapping[str, tuple]
    identity: Mapping[str, str]
    compose: Mapping[tuple, str]
    dagger: Mapping[str, str]
    # what each id stands for (functor, algebra, ...); not part of equality
    payload: Mapping[str, Any] = field(default_factory=dict, compare=False, repr=False)
    _homs: Mapping[tuple, tuple] = field(default_factory=dict, init=False, compare=False, repr=False)

    def __post_init__(self):
        homs = {(a, b): [] for a in self.objects for b in self.objects}
        for m in sorted(self.morphisms):
            homs[self.morphisms[m]].append(m)
        object.__setattr__(self, "_homs", {k: tuple(v) for k, v in homs.items()})

    __hash__ = None  # type: ignore[assignment]

    def src(self, f: str) -> str:
        return self.morphisms[f][0]

    def tgt(self, f: str) -> str:
        return self.morphisms[f][1]

    def id(self, a: str) -> str:
        return self.identity[a]

    def comp(self, *fs: str) -> str:
        """comp(h, g, f) = h∘g∘f."""
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.compose[(g, out)]
        return out

    def dag(self, f: str) -> str:
        return self.dagger[f]

    def hom(self, a: str, b: str) -> tuple:
        return self._homs[(a, b)]

    def mor_ids(self) -> list:
        return sorted(self.morphisms)

    def describe(self) -> CategoryDescription:
        return CategoryDescription(
            list(self.objects),
            dict(self.morphisms),
            dict(self.identity),
            dict(self.compose),
            dict(self.dagger),
            dict(self.payload),
        )

    @property
    def size(self) -> tuple:
        return len(self.objects), len(self.morphisms)


def _composable(desc: CategoryDescription) -> list:
    mors = desc.morphisms
    return [
        (g, f)
        for g, f in product(sorted(mors), repeat=2)
        if mors[g][0] == mors[f][1]
    ]


def validate_category(desc: CategoryDescription) -> FinDaggerCategory:
    """Check every axiom instance; raise on the first failure in id order."""
    objects = sorted(set(desc.objects))
    objset = set(objects)
    mors = {m: tuple(st) for m, st in desc.morphisms.items()}

    for m in sorted(mors):
        s, t = mors[m]
        if s not in objset or t not in objset:
            raise DanglingReference(f"morphism {m} has unknown endpoint", (m, s, t))
    for a in sorted(desc.identity):
        if a not in objset:
            raise DanglingReference(f"identity declared for unknown object {a}", (a,))
        if desc.identity[a] not in mors:
            raise DanglingReference(f"identity of {a} is unknown morphism", (a, desc.identity[a]))
    for key in sorted(desc.compose):
        g, f = key
        gf = desc.compose[key]
        for m in (g, f, gf):
            if m not in mors:
                raise DanglingReference(f"composition entry names unknown morphism {m}", (g, f, gf))
    for f in sorted(desc.dagger):
        if f not in mors or desc.dagger[f] not in mors:
            raise DanglingReference(f"dagger entry names unknown morphism", (f, desc.dagger[f]))

    for a in objects:
        i = desc.identity.get(a)
        if i is None:
            raise BadIdentity(f"object {a} has no identity", (a,))
        if mors[i] != (a, a):
            raise BadIdentity(f"identity of {a} is not an endomorphism of {a}", (a, i))

    comp = desc.compose
    composable = _composable(desc)
    for g, f in composable:
        gf = comp.get((g, f))
        if gf is None:
            raise MissingComposite(f"{g}∘{f} is not defined", (g, f))
        if mors[gf] != (mors[f][0], mors[g][1]):
            raise BadComposite(f"{g}∘{f} = {gf} has wrong endpoints", (g, f, gf))
    if len(comp) != len(composable):
        allowed = set(composable)
        extra = sorted(k for k in comp if k not in allowed)
        raise BadComposite(f"composition defined on non-composable pair {extra[0]}", extra[0])

    for f in sorted(mors):
        s, t = mors[f]
        if comp[(f, desc.identity[s])] != f:
            raise BadIdentity(f"{f}∘id_{s} != {f}", (f, desc.identity[s]))
        if comp[(desc.identity[t], f)] != f:
            raise BadIdentity(f"id_{t}∘{f} != {f}", (desc.identity[t], f))

    by_src: dict = {}
    for h in sorted(mors):
        by_src.setdefault(mors[h][0], []).append(h)
    for g, f in composable:
        gf = comp[(g, f)]
        for h in by_src.get(mors[g][1], ()):
            if comp[(h, gf)] != comp[(comp[(h, g)], f)]:
                raise NonAssociative(f"{h}∘({g}∘{f}) != ({h}∘{g})∘{f}", (h, g, f))

    dag = desc.dagger
    for f in sorted(mors):
        if f not in dag:
            raise DaggerWrongEndpoints(f"dagger undefined on {f}", (f,))
        s, t = mors[f]
        if mors[dag[f]] != (t, s):
            raise DaggerWrongEndpoints(f"{f}† = {dag[f]} has wrong endpoints", (f, dag[f]))
    for f in sorted(mors):
        if dag[dag[f]] != f:
            raise DaggerNotInvolutive(f"{f}†† = {dag[dag[f]]} != {f}", (f, dag[f]))
    for a in objects:
        i = desc.identity[a]
        if dag[i] != i:
            raise DaggerNotFunctorial(f"id_{a}† != id_{a}", (i,))
    for g, f in composable:
        if dag[comp[(g, f)]] != comp[(dag[f], dag[g])]:
            raise DaggerNotFunctorial(f"({g}∘{f})† != {f}†∘{g}†", (g, f))

    return FinDaggerCategory(
        tuple(objects),
        mors,
        {a: desc.identity[a] for a in objects},
        {k: comp[k] for k in sorted(comp)},
        {f: dag[f] for f in sorted(mors)},
        dict(desc.payload),
    )


def make_category(
    objects: Iterable,
    morphisms: Mapping,
    identity: Mapping,
    compose: Mapping,
    dagger: Mapping,
    payload: Mapping | None = None,
) -> FinDaggerCategory:
    return validate_category(
        CategoryDescription(list(objects), dict(morphisms), dict(identity), dict(compose), dict(dagger), dict(payload or {}))
    )


def opposite(c: FinDaggerCategory) -> FinDaggerCategory:
    return make_category(
        c.objects,
        {m: (t, s) for m, (s, t) in c.morphisms.items()},
        c.identity,
        {(g, f): c.compose[(f, g)] for (f, g) in c.compose},
        c.dagger,
        c.payload,
    )


def is_unitary(c: FinDaggerCategory, f: str) -> bool:
    if f not in c.morphisms:
        raise UnknownMorphism(f"{f} is not a morphism", (f,))
    fd = c.dag(f)
    return c.comp(fd, f) == c.id(c.src(f)) and c.comp(f, fd) == c.id(c.tgt(f))


def unitaries(c: FinDaggerCategory) -> list:
    return [f for f in c.mor_ids() if is_unitary(c, f)]


def relabel(c: FinDaggerCategory, obj: Mapping, mor: Mapping) -> FinDaggerCategory:
    """Rename ids along the bijections ``obj`` and ``mor``."""
    return make_category(
        [obj[a] for a in c.objects],
        {mor[m]: (obj[s], obj[t]) for m, (s, t) in c.morphisms.items()},
        {obj[a]: mor[i] for a, i in c.identity.items()},
        {(mor[g], mor[f]): mor[gf] for (g, f), gf in c.compose.items()},
        {mor[f]: mor[fd] for f, fd in c.dagger.items()},
        {**{obj[k]: v for k, v in c.payload.items() if k in obj},
         **{mor[k]: v for k, v in c.payload.items() if k in mor}},
    )


def disjoint_union(parts: Mapping[str, FinDaggerCategory]) -> FinDaggerCategory:
    """Coproduct, ids prefixed with ``<name>.``."""
    objs, mors, ident, comp, dag = [], {}, {}, {}, {}
    for name in sorted(parts):
        c = parts[name]

        def p(x, name=name):
            return f"{name}.{x}"

        objs += [p(a) for a in c.objects]
        mors.update({p(m): (p(s), p(t)) for m, (s, t) in c.morphisms.items()})
        ident.update({p(a): p(i) for a, i in c.identity.items()})
        comp.update({(p(g), p(f)): p(gf) for (g, f), gf in c.compose.items()})
        dag.update({p(f): p(fd) for f, fd in c.dagger.items()})
    return make_category(objs, mors, ident, comp, dag)


def discrete(objects: Iterable) -> FinDaggerCategory:
    objs = list(objects)
    return make_category(
        objs,
        {f"1{a}": (a, a) for a in objs},
        {a: f"1{a}" for a in objs},
        {(f"1{a}", f"1{a}"): f"1{a}" for a in objs},
        {f"1{a}": f"1{a}" for a in objs},
    )


def monoid(elements: list, table: Mapping, dagger: Mapping, obj: str = "*") -> FinDaggerCategory:
    """One-object category from a monoid table; ``elements[0]`` is the unit."""
    return make_category(
        [obj],
        {e: (obj, obj) for e in elements},
        {obj: elements[0]},
        {(g, f): table[(g, f)] for g in elements for f in elements},
        dagger,
    )


def cyclic(n: int, dagger: str = "inverse") -> FinDaggerCategory:
    """Z_n as a one-object category; dagger is inversion or the identity map."""
    els = [f"g{k}" for k in range(n)]
    table = {(els[a], els[b]): els[(a + b) % n] for a in range(n) for b in range(n)}
    if dagger == "inverse":
        dg = {els[k]: els[(-k) % n] for k in range(n)}
    else:
        dg = {e: e for e in els}
    return monoid(els, table, dg)
