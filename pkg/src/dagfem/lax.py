"""Dagger lax functors, dagger lax-natural transformations, dagger
modifications and dagger lax-limits between finite dagger 2-categories.

Conventions: γ_{f,g}: F(g)F(f) ⇒ F(gf) is stored under the key (f, g);
δ_A: 1_{FA} ⇒ F(1_A). A lax-natural α: F → G has τ_f: G(f) α_A ⇒ α_B F(f).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping

from .errors import (
    CoherenceFail,
    FrobeniusAxiomFail,
    HomMapNotDagger,
    LaxCoherenceFail,
    NotDaggerPreserving,
    SearchSpaceTooLarge,
    SourceNotTerminal,
    ValidationError,
    Verdict,
    fail,
)
from .fincat import FinDaggerCategory, make_category
from .functor import DaggerFunctor, validate_functor
from .two_cat.core import Dagger2Functor, FinDagger2Category, terminal_2category
from .two_cat.monads import Monad2, MonadCell2, MonadMorphism, validate_monad2

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class DaggerLaxFunctor:
    source: FinDagger2Category
    target: FinDagger2Category
    obj_map: Mapping[str, str]
    map1: Mapping[str, str]
    map2: Mapping[str, str]
    gamma: Mapping[tuple, str]
    delta: Mapping[str, str]

    __hash__ = None  # type: ignore[assignment]

    @property
    def hom_maps(self) -> dict:
        """Per pair of 0-cells, the hom map as a DaggerFunctor."""
        out = {}
        for (a, b), hc in self.source.hom.items():
            out[(a, b)] = DaggerFunctor(
                hc, self.target.hom[(self.obj_map[a], self.obj_map[b])],
                {f: self.map1[f] for f in hc.objects}, {x: self.map2[x] for x in hc.morphisms},
            )
        return out

    def table(self) -> tuple:
        return (dict(self.obj_map), dict(self.map1), dict(self.map2), dict(self.gamma), dict(self.delta))


@dataclass(frozen=True)
class DaggerLaxNat:
    F: DaggerLaxFunctor
    G: DaggerLaxFunctor
    components: Mapping[str, str]
    tau: Mapping[str, str]

    __hash__ = None  # type: ignore[assignment]

    @property
    def key(self) -> str:
        S = self.F.source
        comps = ",".join(f"{a}:{self.components[a]}" for a in S.cells0)
        taus = ",".join(f"{f}:{self.tau[f]}" for f in S.cells1())
        return "{" + comps + "}|{" + taus + "}"


@dataclass(frozen=True)
class DaggerModification:
    alpha: DaggerLaxNat
    beta: DaggerLaxNat
    Xi: Mapping[str, str]

    __hash__ = None  # type: ignore[assignment]

    @property
    def key(self) -> str:
        comps = ",".join(f"{a}:{self.Xi[a]}" for a in self.alpha.F.source.cells0)
        return f"{self.alpha.key}=>{self.beta.key}[{comps}]"


def _composable_pairs(S: FinDagger2Category):
    for f in S.cells1():
        b = S.ends1(f)[1]
        for c in S.cells0:
            for g in S.hom1(b, c):
                yield f, g


def _type2(T: FinDagger2Category, x, src: str, tgt: str) -> bool:
    return x is not None and T.is2(x) and T.homcat(x).morphisms[x] == (src, tgt)


def validate_lax_functor(
    source: FinDagger2Category,
    target: FinDagger2Category,
    obj_map: Mapping,
    map1: Mapping,
    map2: Mapping,
    gamma: Mapping,
    delta: Mapping,
) -> DaggerLaxFunctor:
    S, T = source, target
    for a in S.cells0:
        if obj_map.get(a) not in T.cells0:
            raise LaxCoherenceFail(f"0-cell {a} has no valid image", (a,))
    for (a, b), hc in sorted(S.hom.items()):
        try:
            validate_functor(
                hc, T.hom[(obj_map[a], obj_map[b])],
                {f: map1.get(f) for f in hc.objects}, {x: map2.get(x) for x in hc.morphisms},
            )
        except NotDaggerPreserving as e:
            raise HomMapNotDagger(f"hom map on ({a}, {b}) does not commute with daggers", e.witness) from e
        except ValidationError as e:
            raise LaxCoherenceFail(f"hom map on ({a}, {b}) is not a functor: {e}", e.witness) from e

    F1 = map1
    pairs = list(_composable_pairs(S))
    for f, g in pairs:
        if not _type2(T, gamma.get((f, g)), T.c1(F1[g], F1[f]), F1[S.c1(g, f)]):
            raise LaxCoherenceFail(f"γ_({f},{g}) missing or mistyped", (f, g))
    for a in S.cells0:
        if not _type2(T, delta.get(a), T.id1[obj_map[a]], F1[S.id1[a]]):
            raise LaxCoherenceFail(f"δ_{a} missing or mistyped", (a,))

    # naturality of γ in each variable
    for f, g in pairs:
        for x in _out2(S, f):
            f2 = S.tgt2(x)
            lhs = T.v(gamma[(f2, g)], T.lw(F1[g], map2[x]))
            rhs = T.v(map2[S.lw(g, x)], gamma[(f, g)])
            if lhs != rhs:
                raise LaxCoherenceFail(f"γ not natural in the first variable at {x}", (f, g, x))
        for y in _out2(S, g):
            lhs = T.v(gamma[(f, S.tgt2(y))], T.rw(map2[y], F1[f]))
            rhs = T.v(map2[S.rw(y, f)], gamma[(f, g)])
            if lhs != rhs:
                raise LaxCoherenceFail(f"γ not natural in the second variable at {y}", (f, g, y))

    triples = [(f, g, h) for f, g in pairs for h in _after(S, g)]
    for f, g, h in triples:
        lhs = T.v(gamma[(f, S.c1(h, g))], T.rw(gamma[(g, h)], F1[f]))
        rhs = T.v(gamma[(S.c1(g, f), h)], T.lw(F1[h], gamma[(f, g)]))
        if lhs != rhs:
            raise LaxCoherenceFail("γ associativity fails", (f, g, h))
    for f in S.cells1():
        a, b = S.ends1(f)
        one = T.id2(F1[f])
        if T.v(gamma[(S.id1[a], f)], T.lw(F1[f], delta[a])) != one:
            raise LaxCoherenceFail("right unit coherence fails", (f, a))
        if T.v(gamma[(f, S.id1[b])], T.rw(delta[b], F1[f])) != one:
            raise LaxCoherenceFail("left unit coherence fails", (f, b))

    for f, g, h in triples:
        lhs = T.v(T.rw(gamma[(g, h)], F1[f]), T.lw(F1[h], T.dag2(gamma[(f, g)])))
        rhs = T.v(T.dag2(gamma[(f, S.c1(h, g))]), gamma[(S.c1(g, f), h)])
        if lhs != rhs:
            raise FrobeniusAxiomFail("Frobenius axiom fails", (f, g, h))
    return DaggerLaxFunctor(
        S, T, dict(obj_map), {f: F1[f] for f in S.cells1()}, {x: map2[x] for x in S.cells2()},
        {k: gamma[k] for k in pairs}, {a: delta[a] for a in S.cells0},
    )


def _out2(S: FinDagger2Category, f: str) -> list:
    hc = S.hom[S.ends1(f)]
    return [x for x in hc.mor_ids() if hc.src(x) == f]


def _after(S: FinDagger2Category, g: str) -> list:
    c = S.ends1(g)[1]
    return [h for d in S.cells0 for h in S.hom1(c, d)]


def lax_from_2functor(F: Dagger2Functor) -> DaggerLaxFunctor:
    S, T = F.source, F.target
    gamma = {(f, g): T.id2(F.map1[S.c1(g, f)]) for f, g in _composable_pairs(S)}
    delta = {a: T.id2(T.id1[F.obj_map[a]]) for a in S.cells0}
    return validate_lax_functor(S, T, F.obj_map, F.map1, F.map2, gamma, delta)


def monad_to_lax(m: Monad2) -> DaggerLaxFunctor:
    K = m.host
    one = terminal_2category()
    return validate_lax_functor(
        one, K, {"*": m.D}, {"1": m.t}, {"1_1": K.id2(m.t)}, {("1", "1"): m.mu}, {"*": m.eta}
    )


def _is_terminal(S: FinDagger2Category) -> bool:
    return S.size == (1, 1, 1)


def lax_to_monad(L: DaggerLaxFunctor) -> Monad2:
    S = L.source
    if not _is_terminal(S):
        raise SourceNotTerminal("lax functor source is not the terminal 2-category", S.size)
    (a,) = S.cells0
    i = S.id1[a]
    return validate_monad2(L.target, L.obj_map[a], L.map1[i], L.gamma[(i, i)], L.delta[a])


def compose_lax(G: DaggerLaxFunctor, F: DaggerLaxFunctor) -> DaggerLaxFunctor:
    """γ^{GF}_{f,g} = G(γ^F_{f,g})·γ^G_{Ff,Fg}; δ^{GF}_A = G(δ^F_A)·δ^G_{FA}."""
    if F.target != G.source:
        raise LaxCoherenceFail("lax functors are not composable", None)
    S, M, T = F.source, F.target, G.target
    gamma = {
        (f, g): T.v(G.map2[F.gamma[(f, g)]], G.gamma[(F.map1[f], F.map1[g])])
        for f, g in _composable_pairs(S)
    }
    delta = {a: T.v(G.map2[F.delta[a]], G.delta[F.obj_map[a]]) for a in S.cells0}
    return validate_lax_functor(
        S, T,
        {a: G.obj_map[F.obj_map[a]] for a in S.cells0},
        {f: G.map1[F.map1[f]] for f in S.cells1()},
        {x: G.map2[F.map2[x]] for x in S.cells2()},
        gamma, delta,
    )


# -- lax-natural transformations -------------------------------------------------------


def validate_lax_nat(F: DaggerLaxFunctor, G: DaggerLaxFunctor, components: Mapping, tau: Mapping) -> DaggerLaxNat:
    S, T = F.source, F.target
    if G.source != S or G.target != T:
        raise CoherenceFail("lax functors are not parallel", None)
    for a in S.cells0:
        c = components.get(a)
        if c is None or not T.is1(c) or T.ends1(c) != (F.obj_map[a], G.obj_map[a]):
            raise CoherenceFail(f"component at {a} mistyped", (a, c))
    for f in S.cells1():
        a, b = S.ends1(f)
        if not _type2(T, tau.get(f), T.c1(G.map1[f], components[a]), T.c1(components[b], F.map1[f])):
            raise CoherenceFail(f"τ_{f} missing or mistyped", (f, tau.get(f)))
    # naturality in 2-cells
    for x in S.cells2():
        f, f2 = S.src2(x), S.tgt2(x)
        a, b = S.ends2(x)
        lhs = T.v(tau[f2], T.rw(G.map2[x], components[a]))
        rhs = T.v(T.lw(components[b], F.map2[x]), tau[f])
        if lhs != rhs:
            raise CoherenceFail("τ is not natural", (x,))
    for f, g in _composable_pairs(S):
        a, b = S.ends1(f)
        c = S.ends1(g)[1]
        gf = S.c1(g, f)
        lhs = T.v(tau[gf], T.rw(G.gamma[(f, g)], components[a]))
        rhs = T.v(
            T.lw(components[c], F.gamma[(f, g)]),
            T.rw(tau[g], F.map1[f]),
            T.lw(G.map1[g], tau[f]),
        )
        if lhs != rhs:
            raise CoherenceFail("composition coherence fails", (f, g))
    for a in S.cells0:
        i = S.id1[a]
        if T.v(tau[i], T.rw(G.delta[a], components[a])) != T.lw(components[a], F.delta[a]):
            raise CoherenceFail("unit coherence fails", (a,))
    for f, g in _composable_pairs(S):
        a, b = S.ends1(f)
        c = S.ends1(g)[1]
        gf = S.c1(g, f)
        lhs = T.v(T.rw(G.gamma[(f, g)], components[a]), T.lw(G.map1[g], T.dag2(tau[f])))
        rhs = T.v(
            T.dag2(tau[gf]),
            T.lw(components[c], F.gamma[(f, g)]),
            T.rw(tau[g], F.map1[f]),
        )
        if lhs != rhs:
            raise CoherenceFail("dagger coherence fails", (f, g))
    return DaggerLaxNat(F, G, {a: components[a] for a in S.cells0}, {f: tau[f] for f in S.cells1()})


def identity_lax_nat(F: DaggerLaxFunctor) -> DaggerLaxNat:
    T = F.target
    comps = {a: T.id1[F.obj_map[a]] for a in F.source.cells0}
    return validate_lax_nat(F, F, comps, {f: T.id2(F.map1[f]) for f in F.source.cells1()})


def vcomp_lax_nat(beta: DaggerLaxNat, alpha: DaggerLaxNat) -> DaggerLaxNat:
    """τ^δ_f = (1_{β_B} ∗ τ^α_f)·(τ^β_f ∗ 1_{α_A})."""
    S, T = alpha.F.source, alpha.F.target
    comps = {a: T.c1(beta.components[a], alpha.components[a]) for a in S.cells0}
    tau = {}
    for f in S.cells1():
        a, b = S.ends1(f)
        tau[f] = T.v(T.lw(beta.components[b], alpha.tau[f]), T.rw(beta.tau[f], alpha.components[a]))
    return validate_lax_nat(alpha.F, beta.G, comps, tau)


def monad_morphism_to_lax_nat(a: MonadMorphism) -> DaggerLaxNat:
    return validate_lax_nat(monad_to_lax(a.source), monad_to_lax(a.target), {"*": a.f}, {"1": a.sigma})


def lax_nat_to_monad_morphism(n: DaggerLaxNat) -> MonadMorphism:
    return MonadMorphism(lax_to_monad(n.F), lax_to_monad(n.G), n.components["*"], n.tau["1"])


# -- modifications ------------------------------------------------------------------------


def validate_modification(alpha: DaggerLaxNat, beta: DaggerLaxNat, Xi: Mapping) -> DaggerModification:
    S, T = alpha.F.source, alpha.F.target
    F, G = alpha.F, alpha.G
    for a in S.cells0:
        if not _type2(T, Xi.get(a), alpha.components[a], beta.components[a]):
            raise CoherenceFail(f"Ξ_{a} missing or mistyped", (a, Xi.get(a)))
    for f in S.cells1():
        a, b = S.ends1(f)
        lhs = T.v(beta.tau[f], T.lw(G.map1[f], Xi[a]))
        rhs = T.v(T.rw(Xi[b], F.map1[f]), alpha.tau[f])
        if lhs != rhs:
            raise CoherenceFail("modification square fails", (f,))
    for x in S.cells2():
        f, g = S.src2(x), S.tgt2(x)
        a, b = S.ends2(x)
        lhs = T.v(alpha.tau[f], T.h(T.dag2(G.map2[x]), T.dag2(Xi[a])))
        rhs = T.v(T.h(T.dag2(Xi[b]), T.dag2(F.map2[x])), beta.tau[g])
        if lhs != rhs:
            raise CoherenceFail("dagger modification square fails", (x,))
    return DaggerModification(alpha, beta, {a: Xi[a] for a in S.cells0})


def modification_dagger(m: DaggerModification) -> DaggerModification:
    T = m.alpha.F.target
    return validate_modification(m.beta, m.alpha, {a: T.dag2(x) for a, x in m.Xi.items()})


def vcomp_modification(n: DaggerModification, m: DaggerModification) -> DaggerModification:
    T = m.alpha.F.target
    return validate_modification(m.alpha, n.beta, {a: T.v(n.Xi[a], m.Xi[a]) for a in m.Xi})


def identity_modification(alpha: DaggerLaxNat) -> DaggerModification:
    T = alpha.F.target
    return DaggerModification(alpha, alpha, {a: T.id2(c) for a, c in alpha.components.items()})


def monad_cell_to_modification(c: MonadCell2) -> DaggerModification:
    return validate_modification(
        monad_morphism_to_lax_nat(c.source), monad_morphism_to_lax_nat(c.target), {"*": c.alpha}
    )


# -- lax limits ------------------------------------------------------------------------------


def constant_lax(S: FinDagger2Category, T: FinDagger2Category, C: str) -> DaggerLaxFunctor:
    i = T.id1[C]
    one = T.id2(i)
    return validate_lax_functor(
        S, T, {a: C for a in S.cells0}, {f: i for f in S.cells1()}, {x: one for x in S.cells2()},
        {k: one for k in _composable_pairs(S)}, {a: one for a in S.cells0},
    )


def enumerate_lax_nats(F: DaggerLaxFunctor, G: DaggerLaxFunctor, cap: int = DEFAULT_CAP) -> list:
    S, T = F.source, F.target
    objs, ones = list(S.cells0), S.cells1()
    out, count = [], 0
    for choice in product(*(T.hom1(F.obj_map[a], G.obj_map[a]) for a in objs)):
        comps = dict(zip(objs, choice))
        options = []
        for f in ones:
            a, b = S.ends1(f)
            options.append(T.hom2(T.c1(G.map1[f], comps[a]), T.c1(comps[b], F.map1[f])))
        for taus in product(*options):
            count += 1
            if count > cap:
                raise SearchSpaceTooLarge(f"lax-natural search exceeded {cap} candidates", (cap,))
            try:
                out.append(validate_lax_nat(F, G, comps, dict(zip(ones, taus))))
            except CoherenceFail:
                pass
    return out


def enumerate_modifications(alpha: DaggerLaxNat, beta: DaggerLaxNat) -> list:
    S, T = alpha.F.source, alpha.F.target
    objs = list(S.cells0)
    out = []
    for choice in product(*(T.hom2(alpha.components[a], beta.components[a]) for a in objs)):
        try:
            out.append(validate_modification(alpha, beta, dict(zip(objs, choice))))
        except CoherenceFail:
            pass
    return out


def daglax_hom(C: str, F: DaggerLaxFunctor, cap: int = DEFAULT_CAP) -> FinDaggerCategory:
    """Dagger lax-naturals Δ_C → F and dagger modifications between them."""
    D = constant_lax(F.source, F.target, C)
    nats = enumerate_lax_nats(D, F, cap)
    mods = {(a.key, b.key): enumerate_modifications(a, b) for a, b in product(nats, repeat=2)}
    mors, payload = {}, {n.key: n for n in nats}
    for ms in mods.values():
        for m in ms:
            mors[m.key] = (m.alpha.key, m.beta.key)
            payload[m.key] = m
    ident = {n.key: identity_modification(n).key for n in nats}
    comp, dag = {}, {}
    for a, b, c in product(nats, repeat=3):
        for m in mods[(a.key, b.key)]:
            for n in mods[(b.key, c.key)]:
                comp[(n.key, m.key)] = vcomp_modification(n, m).key
    for ms in mods.values():
        for m in ms:
            dag[m.key] = modification_dagger(m).key
    return make_category([n.key for n in nats], mors, ident, comp, dag, payload)


def check_dagger_lax_limit(F: DaggerLaxFunctor, L: str, pi: DaggerLaxNat) -> Verdict:
    """Composition with π, h ↦ π·Δ_h, is a strict isomorphism of dagger
    categories K(C, L) → DagLax[Δ_C, F] for every 0-cell C."""
    S, K = F.source, F.target
    if not _is_terminal(S):
        raise SourceNotTerminal("lax-limit check implemented for lax functors from the terminal 2-category", S.size)
    (a,) = S.cells0
    i = S.id1[a]
    DL = constant_lax(S, K, L)
    try:
        pi = validate_lax_nat(DL, F, pi.components, pi.tau)
    except CoherenceFail as e:
        return fail("π is not a dagger lax-natural transformation", ("pi", e.witness))
    for C in K.cells0:
        target = daglax_hom(C, F)
        om, mm = {}, {}
        for h in K.hom1(C, L):
            key = DaggerLaxNat(constant_lax(S, K, C), F, {a: K.c1(pi.components[a], h)}, {i: K.rw(pi.tau[i], h)}).key
            if key not in target.objects:
                return fail("π·Δ_h is not a dagger lax-natural transformation", (C, h))
            om[h] = key
        src = K.hom[(C, L)]
        for x in src.mor_ids():
            f, g = src.morphisms[x]
            mm[x] = f"{om[f]}=>{om[g]}[{a}:{K.lw(pi.components[a], x)}]"
        try:
            validate_functor(src, target, om, mm)
        except ValidationError as e:
            return fail("composition with π is not a dagger functor", (C, e.kind, e.witness))
        if sorted(set(om.values())) != sorted(target.objects) or len(set(om.values())) != len(om):
            return fail(
                f"not bijective on objects: {len(src.objects)} vs {len(target.objects)}", (C,)
            )
        if sorted(set(mm.values())) != sorted(target.morphisms) or len(set(mm.values())) != len(mm):
            return fail(
                f"not bijective on morphisms: {len(src.morphisms)} vs {len(target.morphisms)}", (C,)
            )
    return Verdict(True, L)
