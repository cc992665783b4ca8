"""The completions DFMnd(K), FK(K) and FEM(K) of a finite dagger
2-category, and the inclusion D ↦ (D, 1) into each.

All three share one assembler; they differ only in which pairs (f, σ)
count as 1-cells, which 2-cells α are admitted, and the formulas for
vertical composition, identities, dagger, composition and whiskering.
Cells are stored as MonadMorphism / MonadCell2 records in every case:

* DFMnd, FEM: (f, σ): (A, s) → (D, t), σ: t f ⇒ f s.
* FK:         (f, σ): (D, t) → (C, s), σ: f t ⇒ s f.
* DFMnd 2-cells α: f ⇒ g; FK 2-cells α: f ⇒ s g (s the target monad);
  FEM 2-cells α: f ⇒ g s (s the source monad).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

from ..errors import InternalClosureFailure, ValidationError, Verdict, fail
from ..fincat import make_category
from ..functor import validate_functor
from .core import Dagger2Functor, FinDagger2Category, make_2category, opposite_2category, validate_2functor
from .monads import (
    Monad2,
    MonadCell2,
    MonadMorphism,
    dfmnd_cells,
    dfmnd_morphisms,
    enumerate_frobenius_monads,
    identity_monad2,
)


@dataclass(frozen=True)
class _Ops:
    morphisms: Callable  # (m1, m2) -> [MonadMorphism]
    cells: Callable  # (a, b) -> [MonadCell2]
    id2: Callable  # a -> 2-cell
    vcomp: Callable  # (c2, c1) -> 2-cell
    dagger: Callable  # c -> 2-cell
    comp1: Callable  # (g, f) -> (f-cell, σ-cell)
    lw: Callable  # (g, c) -> 2-cell
    rw: Callable  # (c, f) -> 2-cell
    fk: bool = False


def completion_hom(K: FinDagger2Category, m1: Monad2, m2: Monad2, ops: "_Ops", what: str = "completion"):
    """One hom dagger category; returns (category, 1-cell records, 2-cell records)."""
    ms = ops.morphisms(m1, m2)
    mors, cells, twos = {}, {}, {}
    for a, b in product(ms, repeat=2):
        cs = ops.cells(a, b)
        cells[(a.id, b.id)] = cs
        for c in cs:
            mors[c.id] = (a.id, b.id)
            twos[c.id] = c
    ident = {a.id: MonadCell2(a, a, ops.id2(a)).id for a in ms}
    comp, dag = {}, {}
    for a, b, c in product(ms, repeat=3):
        for x in cells[(a.id, b.id)]:
            for y in cells[(b.id, c.id)]:
                comp[(y.id, x.id)] = MonadCell2(a, c, ops.vcomp(y, x)).id
    for cs in cells.values():
        for x in cs:
            dag[x.id] = MonadCell2(x.target, x.source, ops.dagger(x)).id
    try:
        hc = make_category([a.id for a in ms], mors, ident, comp, dag)
    except ValidationError as e:
        raise InternalClosureFailure(
            f"{what} hom ({m1.id}, {m2.id}) is not a dagger category: {e.kind}: {e}", e.witness
        ) from e
    return hc, {a.id: a for a in ms}, twos


def _assemble(K: FinDagger2Category, monads: list, ops: _Ops, what: str) -> FinDagger2Category:
    by_id = {m.id: m for m in monads}
    homs, ones, twos = {}, {}, {}
    for m1, m2 in product(monads, repeat=2):
        hc, o, t = completion_hom(K, m1, m2, ops, what)
        homs[(m1.id, m2.id)] = hc
        ones.update(o)
        twos.update(t)

    comp1, lw, rw = {}, {}, {}
    for m1, m2, m3 in product(monads, repeat=3):
        h12 = homs[(m1.id, m2.id)]
        h23 = homs[(m2.id, m3.id)]
        for fi in h12.objects:
            for gi in h23.objects:
                f, g = ones[fi], ones[gi]
                comp1[(gi, fi)] = MonadMorphism(m1, m3, *ops.comp1(g, f), fk=ops.fk).id
        for xi in h12.morphisms:
            x = twos[xi]
            for gi in h23.objects:
                g = ones[gi]
                src = ones[comp1[(gi, x.source.id)]]
                tgt = ones[comp1[(gi, x.target.id)]]
                lw[(gi, xi)] = MonadCell2(src, tgt, ops.lw(g, x)).id
        for yi in h23.morphisms:
            y = twos[yi]
            for fi in h12.objects:
                f = ones[fi]
                src = ones[comp1[(y.source.id, fi)]]
                tgt = ones[comp1[(y.target.id, fi)]]
                rw[(yi, fi)] = MonadCell2(src, tgt, ops.rw(y, f)).id
    id1 = {m.id: MonadMorphism(m, m, K.id1[m.D], K.id2(m.t), fk=ops.fk).id for m in monads}
    payload = {**by_id, **ones, **twos}
    try:
        return make_2category(list(by_id), homs, id1, comp1, lw, rw, payload=payload)
    except ValidationError as e:
        raise InternalClosureFailure(f"{what} failed 2-category validation: {e.kind}: {e}", e.witness) from e


def _frob(K: FinDagger2Category) -> list:
    return enumerate_frobenius_monads(K, frobenius_only=True)


def dfmnd_ops(K: FinDagger2Category) -> _Ops:
    return _Ops(
        morphisms=lambda m1, m2: dfmnd_morphisms(K, m1, m2),
        cells=lambda a, b: dfmnd_cells(K, a, b),
        id2=lambda a: K.id2(a.f),
        vcomp=lambda y, x: K.v(y.alpha, x.alpha),
        dagger=lambda x: K.dag2(x.alpha),
        # (g, γ)(f, σ) = (gf, gσ·γf)
        comp1=lambda g, f: (K.c1(g.f, f.f), K.v(K.lw(g.f, f.sigma), K.rw(g.sigma, f.f))),
        lw=lambda g, x: K.lw(g.f, x.alpha),
        rw=lambda x, f: K.rw(x.alpha, f.f),
    )


def build_dfmnd(K: FinDagger2Category) -> FinDagger2Category:
    return _assemble(K, _frob(K), dfmnd_ops(K), "DFMnd")


# -- FK ------------------------------------------------------------------------------


def is_fk_morphism(K: FinDagger2Category, src: Monad2, tgt: Monad2, f: str, sigma: str) -> str | None:
    """(f, σ): (D, t) → (C, s), σ: f t ⇒ s f."""
    t, s = src.t, tgt.t
    if K.ends1(f) != (src.D, tgt.D):
        return "f-type"
    if not K.is2(sigma) or K.homcat(sigma).morphisms[sigma] != (K.c1(f, t), K.c1(s, f)):
        return "sigma-type"
    # σ·(f μ^t) = (μ^s f)·(s σ)·(σ t)
    if K.v(sigma, K.lw(f, src.mu)) != K.v(K.rw(tgt.mu, f), K.lw(s, sigma), K.rw(sigma, t)):
        return "mult"
    sd = K.dag2(sigma)
    # σ†·(μ^s f)·(s σ) = (f μ^t)·(σ† t)
    if K.v(sd, K.rw(tgt.mu, f), K.lw(s, sigma)) != K.v(K.lw(f, src.mu), K.rw(sd, t)):
        return "dagger-mult"
    # σ·(f η^t) = η^s f
    if K.v(sigma, K.lw(f, src.eta)) != K.rw(tgt.eta, f):
        return "unit"
    return None


def fk_morphisms(K: FinDagger2Category, src: Monad2, tgt: Monad2) -> list:
    out = []
    for f in K.hom1(src.D, tgt.D):
        for sigma in K.hom2(K.c1(f, src.t), K.c1(tgt.t, f)):
            if is_fk_morphism(K, src, tgt, f, sigma) is None:
                out.append(MonadMorphism(src, tgt, f, sigma, fk=True))
    return out


def is_fk_cell(K: FinDagger2Category, a: MonadMorphism, b: MonadMorphism, alpha: str) -> bool:
    """α: f ⇒ s g with (μ^s g)(sα)σ = (μ^s g)(sγ)(αt)."""
    s, t = a.target, a.source
    g = b.f
    if K.homcat(alpha).morphisms[alpha] != (a.f, K.c1(s.t, g)):
        return False
    m = K.rw(s.mu, g)
    return K.v(m, K.lw(s.t, alpha), a.sigma) == K.v(m, K.lw(s.t, b.sigma), K.rw(alpha, t.t))


def fk_cells(K: FinDagger2Category, a: MonadMorphism, b: MonadMorphism) -> list:
    return [
        MonadCell2(a, b, x)
        for x in K.hom2(a.f, K.c1(a.target.t, b.f))
        if is_fk_cell(K, a, b, x)
    ]


def fk_dagger(K: FinDagger2Category, s: Monad2, alpha: str, g: str) -> str:
    """For α: f ⇒ s g, the 2-cell s α† · μ^{s†} g · η^s g : g ⇒ s f."""
    return K.v(K.lw(s.t, K.dag2(alpha)), K.rw(K.dag2(s.mu), g), K.rw(s.eta, g))


def fk_ops(K: FinDagger2Category) -> _Ops:
    def vcomp(y, x):
        s = x.source.target
        return K.v(K.rw(s.mu, y.target.f), K.lw(s.t, y.alpha), x.alpha)

    return _Ops(
        morphisms=lambda m1, m2: fk_morphisms(K, m1, m2),
        cells=lambda a, b: fk_cells(K, a, b),
        id2=lambda a: K.rw(a.target.eta, a.f),
        vcomp=vcomp,
        dagger=lambda x: fk_dagger(K, x.source.target, x.alpha, x.target.f),
        # (g, γ)(f, σ) = (gf, γf·gσ)
        comp1=lambda g, f: (K.c1(g.f, f.f), K.v(K.rw(g.sigma, f.f), K.lw(g.f, f.sigma))),
        # (h, ρ)∗α = (ρ f')·(h α)
        lw=lambda h, x: K.v(K.rw(h.sigma, x.target.f), K.lw(h.f, x.alpha)),
        rw=lambda x, e: K.rw(x.alpha, e.f),
        fk=True,
    )


def build_fk_completion(K: FinDagger2Category) -> FinDagger2Category:
    return _assemble(K, _frob(K), fk_ops(K), "FK")


# -- FEM -----------------------------------------------------------------------------


def is_fem_cell(K: FinDagger2Category, a: MonadMorphism, b: MonadMorphism, alpha: str) -> bool:
    """α: f ⇒ g t (t the source monad) with (g μ^t)(α t)σ = (g μ^t)(γ t)(s α)."""
    t, s = a.source, a.target
    g = b.f
    if K.homcat(alpha).morphisms[alpha] != (a.f, K.c1(g, t.t)):
        return False
    m = K.lw(g, t.mu)
    return K.v(m, K.rw(alpha, t.t), a.sigma) == K.v(m, K.rw(b.sigma, t.t), K.lw(s.t, alpha))


def fem_cells(K: FinDagger2Category, a: MonadMorphism, b: MonadMorphism) -> list:
    return [
        MonadCell2(a, b, x)
        for x in K.hom2(a.f, K.c1(b.f, a.source.t))
        if is_fem_cell(K, a, b, x)
    ]


def fem_ops(K: FinDagger2Category, Kop: FinDagger2Category | None = None) -> _Ops:
    Kop = Kop if Kop is not None else opposite_2category(K)

    def vcomp(y, x):
        t = x.source.source
        return K.v(K.lw(y.target.f, t.mu), K.rw(y.alpha, t.t), x.alpha)

    return _Ops(
        morphisms=lambda m1, m2: dfmnd_morphisms(K, m1, m2),
        cells=lambda a, b: fem_cells(K, a, b),
        id2=lambda a: K.lw(a.f, a.source.eta),
        vcomp=vcomp,
        # the dagger is the FK dagger evaluated in K^op
        dagger=lambda x: fk_dagger(Kop, x.source.source, x.alpha, x.target.f),
        comp1=lambda g, f: (K.c1(g.f, f.f), K.v(K.lw(g.f, f.sigma), K.rw(g.sigma, f.f))),
        lw=lambda g, x: K.lw(g.f, x.alpha),
        # α∗(h, ρ) = (f' ρ)·(α h)
        rw=lambda x, h: K.v(K.lw(x.target.f, h.sigma), K.rw(x.alpha, h.f)),
    )


def build_fem_completion(K: FinDagger2Category) -> FinDagger2Category:
    return _assemble(K, _frob(K), fem_ops(K), "FEM")


def fem_via_opposite(K: FinDagger2Category) -> FinDagger2Category:
    """FK(K^op)^op, the defining route for FEM(K)."""
    return opposite_2category(build_fk_completion(opposite_2category(K)))


# -- the inclusion D ↦ (D, 1) -----------------------------------------------------------


def inclusion(K: FinDagger2Category, C: FinDagger2Category) -> Dagger2Functor:
    """K → C for C any of the three completions of K."""
    idm = {D: identity_monad2(K, D) for D in K.cells0}
    fk = any(getattr(C.payload.get(f), "fk", False) for f in C.cells1())
    obj = {D: idm[D].id for D in K.cells0}
    map1, map2, lifted = {}, {}, {}
    for (A, B), hc in K.hom.items():
        for f in hc.objects:
            lifted[f] = MonadMorphism(idm[A], idm[B], f, K.id2(f), fk=fk)
            map1[f] = lifted[f].id
        for x in hc.morphisms:
            f, g = hc.morphisms[x]
            map2[x] = MonadCell2(lifted[f], lifted[g], x).id
    return validate_2functor(K, C, obj, map1, map2)


def check_fully_faithful(I: Dagger2Functor) -> Verdict:
    """Every hom map K(A, B) → C(IA, IB) is a strict dagger isomorphism."""
    K, C = I.source, I.target
    for (A, B), hc in sorted(K.hom.items()):
        target = C.hom[(I.obj_map[A], I.obj_map[B])]
        om = {f: I.map1[f] for f in hc.objects}
        mm = {x: I.map2[x] for x in hc.morphisms}
        try:
            validate_functor(hc, target, om, mm)
        except ValidationError as e:
            return fail("hom map is not a dagger functor", (A, B, e.kind, e.witness))
        if sorted(om.values()) != sorted(target.objects):
            missing = sorted(set(target.objects) - set(om.values()))
            return fail("hom map is not bijective on 1-cells", (A, B, missing[:1] or sorted(om.values())))
        if sorted(mm.values()) != sorted(target.morphisms):
            missing = sorted(set(target.morphisms) - set(mm.values()))
            return fail("hom map is not bijective on 2-cells", (A, B, missing[:1] or sorted(mm.values())))
    return Verdict(True)
