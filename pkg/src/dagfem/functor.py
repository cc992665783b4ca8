"""Dagger functors, natural transformations and the hom dagger categories
DagCat(A, D)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Mapping

from .errors import (
    DanglingReference,
    NotComposable,
    NotDaggerPreserving,
    NotFunctorial,
    NotNatural,
    SearchSpaceTooLarge,
    WrongEndpoints,
)
from .fincat import FinDaggerCategory, make_category

DEFAULT_CAP = 10**7


@dataclass(frozen=True)
class DaggerFunctor:
    source: FinDaggerCategory
    target: FinDaggerCategory
    obj_map: Mapping[str, str]
    mor_map: Mapping[str, str]

    __hash__ = None  # type: ignore[assignment]

    def ob(self, a: str) -> str:
        return self.obj_map[a]

    def mor(self, f: str) -> str:
        return self.mor_map[f]

    @property
    def key(self) -> str:
        return functor_key(self)

    def same_maps(self, other: "DaggerFunctor") -> bool:
        return dict(self.obj_map) == dict(other.obj_map) and dict(self.mor_map) == dict(other.mor_map)


@dataclass(frozen=True)
class NatTrans:
    F: DaggerFunctor
    G: DaggerFunctor
    components: Mapping[str, str]

    __hash__ = None  # type: ignore[assignment]

    def at(self, a: str) -> str:
        return self.components[a]

    @property
    def key(self) -> str:
        return nat_key(self)


def functor_key(F: DaggerFunctor) -> str:
    # the morphism map determines the object map through identities
    body = ",".join(f"{m}:{F.mor_map[m]}" for m in F.source.mor_ids())
    if not F.source.objects:
        return "{}"
    return "{" + body + "}"


def nat_key(a: NatTrans) -> str:
    comps = ",".join(f"{x}:{a.components[x]}" for x in a.F.source.objects)
    return f"{functor_key(a.F)}=>{functor_key(a.G)}[{comps}]"


def validate_functor(
    source: FinDaggerCategory,
    target: FinDaggerCategory,
    obj_map: Mapping,
    mor_map: Mapping,
) -> DaggerFunctor:
    for a in source.objects:
        if a not in obj_map or obj_map[a] not in target.objects:
            raise DanglingReference(f"object {a} has no valid image", (a, obj_map.get(a)))
    for f in source.mor_ids():
        if f not in mor_map or mor_map[f] not in target.morphisms:
            raise DanglingReference(f"morphism {f} has no valid image", (f, mor_map.get(f)))
    for f in source.mor_ids():
        s, t = source.morphisms[f]
        if target.morphisms[mor_map[f]] != (obj_map[s], obj_map[t]):
            raise NotFunctorial(f"image of {f} has wrong endpoints", (f, mor_map[f]))
    for a in source.objects:
        if mor_map[source.id(a)] != target.id(obj_map[a]):
            raise NotFunctorial(f"identity of {a} not preserved", (source.id(a),))
    for f in source.mor_ids():
        if mor_map[source.dag(f)] != target.dag(mor_map[f]):
            raise NotDaggerPreserving(f"F({f}†) != F({f})†", (f,))
    for (g, f), gf in source.compose.items():
        if mor_map[gf] != target.comp(mor_map[g], mor_map[f]):
            raise NotFunctorial(f"F({g}∘{f}) != F({g})∘F({f})", (g, f))
    return DaggerFunctor(source, target, dict(obj_map), dict(mor_map))


def identity_functor(c: FinDaggerCategory) -> DaggerFunctor:
    return DaggerFunctor(c, c, {a: a for a in c.objects}, {f: f for f in c.morphisms})


def compose_functors(G: DaggerFunctor, F: DaggerFunctor) -> DaggerFunctor:
    if F.target != G.source:
        raise NotComposable("functors are not composable", (functor_key(G), functor_key(F)))
    return DaggerFunctor(
        F.source,
        G.target,
        {a: G.ob(F.ob(a)) for a in F.source.objects},
        {f: G.mor(F.mor(f)) for f in F.source.morphisms},
    )


def validate_nat(F: DaggerFunctor, G: DaggerFunctor, components: Mapping) -> NatTrans:
    if F.source != G.source or F.target != G.target:
        raise WrongEndpoints("functors are not parallel", (functor_key(F), functor_key(G)))
    C, D = F.source, F.target
    for a in C.objects:
        c = components.get(a)
        if c is None or c not in D.morphisms or D.morphisms[c] != (F.ob(a), G.ob(a)):
            raise WrongEndpoints(f"component at {a} is not F({a}) → G({a})", (a, c))
    for f in C.mor_ids():
        s, t = C.morphisms[f]
        if D.comp(components[t], F.mor(f)) != D.comp(G.mor(f), components[s]):
            raise NotNatural(f"naturality fails at {f}", (f,))
    return NatTrans(F, G, {a: components[a] for a in C.objects})


def identity_nat(F: DaggerFunctor) -> NatTrans:
    return NatTrans(F, F, {a: F.target.id(F.ob(a)) for a in F.source.objects})


def nat_vcomp(beta: NatTrans, alpha: NatTrans) -> NatTrans:
    if not alpha.G.same_maps(beta.F) or alpha.G.source != beta.F.source:
        raise NotComposable("transformations are not vertically composable", (nat_key(beta), nat_key(alpha)))
    D = alpha.F.target
    return NatTrans(alpha.F, beta.G, {a: D.comp(beta.at(a), alpha.at(a)) for a in alpha.F.source.objects})


def nat_dagger(alpha: NatTrans) -> NatTrans:
    D = alpha.F.target
    return NatTrans(alpha.G, alpha.F, {a: D.dag(c) for a, c in alpha.components.items()})


def whisker_left(H: DaggerFunctor, theta: NatTrans) -> NatTrans:
    """Hθ."""
    return NatTrans(
        compose_functors(H, theta.F),
        compose_functors(H, theta.G),
        {a: H.mor(c) for a, c in theta.components.items()},
    )


def whisker_right(sigma: NatTrans, F: DaggerFunctor) -> NatTrans:
    """σF."""
    return NatTrans(
        compose_functors(sigma.F, F),
        compose_functors(sigma.G, F),
        {a: sigma.at(F.ob(a)) for a in F.source.objects},
    )


def nat_hcomp(sigma: NatTrans, theta: NatTrans) -> NatTrans:
    """σ∗θ for θ: F ⇒ G (A → B) and σ: H ⇒ K (B → C)."""
    if theta.F.target != sigma.F.source:
        raise NotComposable("transformations are not horizontally composable", (nat_key(sigma), nat_key(theta)))
    return nat_vcomp(whisker_right(sigma, theta.G), whisker_left(sigma.F, theta))


def enumerate_functors(
    source: FinDaggerCategory,
    target: FinDaggerCategory,
    obj_candidates: Callable[[str], Iterable[str]] | None = None,
    mor_candidates: Callable[[str], Iterable[str]] | None = None,
    cap: int = DEFAULT_CAP,
) -> list:
    """All dagger functors source → target, in lexicographic choice order.

    Objects are chosen first (in object order), then morphisms in id order;
    composition and dagger constraints are checked as soon as all the cells
    they mention are assigned.
    """
    objs = list(source.objects)
    idents = {source.id(a) for a in objs}
    order = [f for f in source.mor_ids() if f not in idents]
    pos = {f: i for i, f in enumerate(order)}
    pos.update({i: -1 for i in idents})

    checks: list = [[] for _ in order]
    for (g, f), gf in source.compose.items():
        k = max(pos[g], pos[f], pos[gf])
        if k >= 0:
            checks[k].append((g, f, gf))

    out: list = []
    nodes = 0

    def obj_choices(a):
        return sorted(obj_candidates(a)) if obj_candidates else list(target.objects)

    for images in product(*(obj_choices(a) for a in objs)):
        om = dict(zip(objs, images))
        mm = {source.id(a): target.id(om[a]) for a in objs}

        def assign(i: int) -> None:
            nonlocal nodes
            if i == len(order):
                out.append(DaggerFunctor(source, target, dict(om), dict(mm)))
                return
            f = order[i]
            s, t = source.morphisms[f]
            cands = target.hom(om[s], om[t])
            if mor_candidates is not None:
                allowed = set(mor_candidates(f))
                cands = [x for x in cands if x in allowed]
            fd = source.dag(f)
            for x in cands:
                nodes += 1
                if nodes > cap:
                    raise SearchSpaceTooLarge(f"functor search exceeded {cap} nodes", (cap,))
                if fd == f and target.dag(x) != x:
                    continue
                if fd in mm and mm[fd] != target.dag(x):
                    continue
                mm[f] = x
                if all(mm[gf] == target.comp(mm[g], mm[h]) for g, h, gf in checks[i]):
                    assign(i + 1)
                del mm[f]

        assign(0)
    return out


def enumerate_nats(F: DaggerFunctor, G: DaggerFunctor, component_filter: Callable[[str], bool] | None = None) -> list:
    C, D = F.source, F.target
    objs = list(C.objects)
    options = []
    for a in objs:
        cands = D.hom(F.ob(a), G.ob(a))
        if component_filter is not None:
            cands = [c for c in cands if component_filter(c)]
        options.append(cands)
    out = []
    for choice in product(*options):
        comps = dict(zip(objs, choice))
        if all(
            D.comp(comps[C.tgt(f)], F.mor(f)) == D.comp(G.mor(f), comps[C.src(f)])
            for f in C.mor_ids()
        ):
            out.append(NatTrans(F, G, comps))
    return out


def hom_category(A: FinDaggerCategory, D: FinDaggerCategory, cap: int = DEFAULT_CAP) -> FinDaggerCategory:
    """DagCat(A, D): dagger functors and natural transformations.

    Ids are the canonical keys of the functors / transformations; ``payload``
    maps each id back to its DaggerFunctor or NatTrans.
    """
    functors = enumerate_functors(A, D, cap=cap)
    payload: dict = {}
    objects, mors, ident, dag = [], {}, {}, {}
    by_pair: dict = {}
    for F in functors:
        objects.append(F.key)
        payload[F.key] = F
    for F, G in product(functors, repeat=2):
        nats = enumerate_nats(F, G)
        by_pair[(F.key, G.key)] = nats
        for n in nats:
            mors[n.key] = (F.key, G.key)
            payload[n.key] = n
    for F in functors:
        ident[F.key] = identity_nat(F).key
    for k, n in list(payload.items()):
        if isinstance(n, NatTrans):
            dag[k] = nat_dagger(n).key
    comp = {}
    for F, G, H in product(functors, repeat=3):
        for a in by_pair[(F.key, G.key)]:
            for b in by_pair[(G.key, H.key)]:
                comp[(b.key, a.key)] = nat_vcomp(b, a).key
    return make_category(objects, mors, ident, comp, dag, payload)
