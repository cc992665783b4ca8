"""FEM objects inside a finite dagger 2-category and the constructions
that rest on them: the representability check, comparison 1-cells,
η-commutation, the (f, f̄) pairs correspondence and extension of
2-functors along D ↦ (D, 1)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..errors import (
    EtaCommutationRequired,
    MissingWitness,
    MonadMismatch,
    NoComparison,
    NonUnique,
    NotAdjunction,
    TheoremViolation,
    ValidationError,
    Verdict,
    WrongEndpoints,
    fail,
)
from ..functor import validate_functor
from .completions import (
    build_fem_completion,
    completion_hom,
    dfmnd_ops,
    fem_cells,
    fk_dagger,
    inclusion,
)
from .core import Dagger2Functor, FinDagger2Category, compose_2functors, opposite_2category, validate_2functor
from .monads import (
    Monad2,
    MonadCell2,
    MonadMorphism,
    dfmnd_morphisms,
    enumerate_frobenius_monads,
    identity_monad2,
    is_monad_morphism,
    validate_monad2,
)


@dataclass(frozen=True)
class FEMObjectWitness:
    monad: Monad2
    E: str
    u: str
    xi: str
    f_t: str
    eps_t: str

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class Adjunction2:
    """f ⊣ u in K with f: D → A, u: A → D, η: 1_D ⇒ u f, ε: f u ⇒ 1_A."""

    host: FinDagger2Category
    A: str
    D: str
    f: str
    u: str
    eta: str
    eps: str

    __hash__ = None  # type: ignore[assignment]


def _type2(K: FinDagger2Category, x: str, src: str, tgt: str) -> bool:
    return K.is2(x) and K.homcat(x).morphisms[x] == (src, tgt)


def validate_adjunction2(K: FinDagger2Category, A: str, D: str, f: str, u: str, eta: str, eps: str) -> Adjunction2:
    if not (K.is1(f) and K.ends1(f) == (D, A) and K.is1(u) and K.ends1(u) == (A, D)):
        raise WrongEndpoints("adjoint 1-cells mistyped", (f, u))
    if not _type2(K, eta, K.id1[D], K.c1(u, f)) or not _type2(K, eps, K.c1(f, u), K.id1[A]):
        raise WrongEndpoints("unit or counit mistyped", (eta, eps))
    if K.v(K.rw(eps, f), K.lw(f, eta)) != K.id2(f):
        raise NotAdjunction("(εf)·(fη) != 1_f", (f,))
    if K.v(K.lw(u, eps), K.rw(eta, u)) != K.id2(u):
        raise NotAdjunction("(uε)·(ηu) != 1_u", (u,))
    return Adjunction2(K, A, D, f, u, eta, eps)


def generated_monad(adj: Adjunction2) -> Monad2:
    K = adj.host
    return validate_monad2(K, adj.D, K.c1(adj.u, adj.f), K.lw(adj.u, K.rw(adj.eps, adj.f)), adj.eta)


def witness_typing(K: FinDagger2Category, m: Monad2, w: FEMObjectWitness) -> None:
    """Raise if the witness cells do not even have the right shapes."""
    if w.E not in K.cells0:
        raise MissingWitness(f"0-cell {w.E} unknown", (w.E,))
    if not (K.is1(w.u) and K.ends1(w.u) == (w.E, m.D)):
        raise WrongEndpoints("u is not a 1-cell E → D", (w.u,))
    if not (K.is1(w.f_t) and K.ends1(w.f_t) == (m.D, w.E)):
        raise WrongEndpoints("f^t is not a 1-cell D → E", (w.f_t,))
    if not _type2(K, w.xi, K.c1(m.t, w.u), w.u):
        raise WrongEndpoints("ξ is not a 2-cell t u ⇒ u", (w.xi,))
    if not _type2(K, w.eps_t, K.c1(w.f_t, w.u), K.id1[w.E]):
        raise WrongEndpoints("ε^t is not a 2-cell f^t u ⇒ 1", (w.eps_t,))


def witness_invariants(K: FinDagger2Category, m: Monad2, w: FEMObjectWitness) -> Verdict:
    witness_typing(K, m, w)
    if is_monad_morphism(K, identity_monad2(K, w.E), m, w.u, w.xi) is not None:
        return fail("(u, ξ) is not a monad morphism (E, 1) → (D, t)", (w.u, w.xi))
    if K.c1(w.u, w.f_t) != m.t:
        return fail("t != u f^t", (w.u, w.f_t))
    if K.rw(w.xi, w.f_t) != m.mu:
        return fail("μ != ξ f^t", (w.xi, w.f_t))
    if K.lw(w.u, w.eps_t) != w.xi:
        return fail("u ε^t != ξ", (w.u, w.eps_t))
    return Verdict(True)


def fem_object_check(K: FinDagger2Category, m: Monad2, w: FEMObjectWitness) -> Verdict:
    """For every A: K(A, E) → DFMnd((A, 1), (D, t)), f ↦ (uf, ξf), σ ↦ uσ,
    is a strict isomorphism of dagger categories."""
    witness_typing(K, m, w)
    if is_monad_morphism(K, identity_monad2(K, w.E), m, w.u, w.xi) is not None:
        return fail("(u, ξ) is not a monad morphism (E, 1) → (D, t)", (w.E, w.u, w.xi))
    ops = dfmnd_ops(K)
    for A in K.cells0:
        src = K.hom[(A, w.E)]
        idA = identity_monad2(K, A)
        tgt, ones, _ = completion_hom(K, idA, m, ops, "DFMnd")
        om, lifted = {}, {}
        for f in src.objects:
            lifted[f] = MonadMorphism(idA, m, K.c1(w.u, f), K.rw(w.xi, f))
            om[f] = lifted[f].id
            if om[f] not in ones:
                return fail(f"(u{f}, ξ{f}) is not a monad morphism", (A, f))
        mm = {}
        for x in src.mor_ids():
            f, g = src.morphisms[x]
            mm[x] = MonadCell2(lifted[f], lifted[g], K.lw(w.u, x)).id
        try:
            validate_functor(src, tgt, om, mm)
        except ValidationError as e:
            return fail("comparison is not a dagger functor", (A, e.kind, e.witness))
        if len(set(om.values())) != len(om) or set(om.values()) != set(tgt.objects):
            extra = sorted(set(tgt.objects) - set(om.values()))
            return fail(
                f"not bijective on 1-cells: {len(src.objects)} vs {len(tgt.objects)}",
                (A, extra[0] if extra else sorted(om)[0]),
            )
        if len(set(mm.values())) != len(mm) or set(mm.values()) != set(tgt.morphisms):
            extra = sorted(set(tgt.morphisms) - set(mm.values()))
            return fail(
                f"not bijective on 2-cells: {len(src.morphisms)} vs {len(tgt.morphisms)}",
                (A, extra[0] if extra else sorted(mm)[0]),
            )
    return Verdict(True, w.E)


def trivial_witness(K: FinDagger2Category, m: Monad2) -> FEMObjectWitness:
    i = K.id1[m.D]
    return FEMObjectWitness(m, m.D, i, K.id2(i), i, K.id2(i))


def find_fem_witness(K: FinDagger2Category, m: Monad2) -> FEMObjectWitness | None:
    """First witness (in id order) satisfying the invariants and the
    representability check; the trivial one is preferred for t = 1."""
    if m.t == K.id1[m.D]:
        w = trivial_witness(K, m)
        if witness_invariants(K, m, w) and fem_object_check(K, m, w):
            return w
    for E in K.cells0:
        for u in K.hom1(E, m.D):
            for f_t in K.hom1(m.D, E):
                if K.c1(u, f_t) != m.t:
                    continue
                for xi in K.hom2(K.c1(m.t, u), u):
                    if K.rw(xi, f_t) != m.mu:
                        continue
                    for eps in K.hom2(K.c1(f_t, u), K.id1[E]):
                        w = FEMObjectWitness(m, E, u, xi, f_t, eps)
                        if witness_invariants(K, m, w) and fem_object_check(K, m, w):
                            return w
    return None


def universal2_check(K: FinDagger2Category, adj: Adjunction2, w: FEMObjectWitness) -> Verdict:
    """Exactly one n: A → E with u^t n = u and ξ n = u ε; it also satisfies
    n f = f^t and n ε = ε^t n."""
    gen = generated_monad(adj)
    if gen.table() != w.monad.table():
        raise MonadMismatch("adjunction does not generate the witness monad", (gen.id, w.monad.id))
    target = K.lw(adj.u, adj.eps)
    sols = [
        n
        for n in K.hom1(adj.A, w.E)
        if K.c1(w.u, n) == adj.u and K.rw(w.xi, n) == target
    ]
    if not sols:
        raise NoComparison("no 1-cell n with u^t n = u and ξ n = u ε", (adj.A, w.E))
    if len(sols) > 1:
        raise NonUnique(f"{len(sols)} comparison 1-cells", tuple(sols))
    (n,) = sols
    if K.c1(n, adj.f) != w.f_t:
        raise NoComparison("n f != f^t", (n, adj.f))
    if K.lw(n, adj.eps) != K.rw(w.eps_t, n):
        raise NoComparison("n ε != ε^t n", (n,))
    return Verdict(True, n, f"unique n = {n}")


def eta_commutation_check(m: Monad2) -> bool:
    K = m.host
    return K.lw(m.t, m.eta) == K.rw(m.eta, m.t)


# -- pairs (f, f̄) --------------------------------------------------------------------


def lift_morphism(K: FinDagger2Category, f: str, sigma: str, wt: FEMObjectWitness, ws: FEMObjectWitness) -> list:
    """All f̄: E^t → E^s with u^s f̄ = f u^t and ξ^s f̄ = (f ξ^t)·(σ u^t)."""
    rhs = K.v(K.lw(f, wt.xi), K.rw(sigma, wt.u))
    fu = K.c1(f, wt.u)
    return [fb for fb in K.hom1(wt.E, ws.E) if K.c1(ws.u, fb) == fu and K.rw(ws.xi, fb) == rhs]


def pair_sigma(K: FinDagger2Category, f: str, fb: str, wt: FEMObjectWitness, ws: FEMObjectWitness) -> str:
    """σ = (ξ^s f̄ f^t)·(s f η^t)."""
    s = ws.monad.t
    return K.v(K.rw(ws.xi, K.c1(fb, wt.f_t)), K.lw(K.c1(s, f), wt.monad.eta))


def lift_cell(K: FinDagger2Category, a: MonadMorphism, alpha_bar: str, wt: FEMObjectWitness, ws: FEMObjectWitness) -> str:
    """ᾱ ↦ (u^s ᾱ f^t)·(f η^t)."""
    return K.v(K.lw(ws.u, K.rw(alpha_bar, wt.f_t)), K.lw(a.f, wt.monad.eta))


def fem_pairs_correspondence(
    K: FinDagger2Category,
    mt: Monad2,
    ms: Monad2,
    wt: FEMObjectWitness,
    ws: FEMObjectWitness,
) -> Verdict:
    """Monad morphisms (f, σ): (D, t) → (C, s) versus pairs (f, f̄) with
    f u^t = u^s f̄; plus, under η-commutation, the 2-cell bijection and
    its compatibility with the daggers."""
    morphisms = dfmnd_morphisms(K, mt, ms)
    pairs = [
        (f, fb)
        for f in K.hom1(mt.D, ms.D)
        for fb in K.hom1(wt.E, ws.E)
        if K.c1(f, wt.u) == K.c1(ws.u, fb)
    ]
    fwd = {}
    for a in morphisms:
        lifts = lift_morphism(K, a.f, a.sigma, wt, ws)
        if len(lifts) != 1:
            return fail(f"{len(lifts)} lifts of a monad morphism", (a.f, a.sigma, tuple(lifts)))
        fwd[(a.f, a.sigma)] = lifts[0]
    back = {}
    for f, fb in pairs:
        sigma = pair_sigma(K, f, fb, wt, ws)
        if is_monad_morphism(K, mt, ms, f, sigma) is not None:
            return fail("pair does not yield a monad morphism", (f, fb, sigma))
        back[(f, fb)] = sigma
    for (f, sigma), fb in fwd.items():
        if back.get((f, fb)) != sigma:
            return fail("(f, σ) ↦ (f, f̄) ↦ σ' with σ' != σ", (f, sigma, fb))
    for (f, fb), sigma in back.items():
        if fwd.get((f, sigma)) != fb:
            return fail("(f, f̄) ↦ σ ↦ f̄' with f̄' != f̄", (f, fb, sigma))
    detail = f"{len(fwd)} monad morphisms ↔ {len(back)} pairs"
    if not eta_commutation_check(mt):
        return Verdict(True, None, detail + "; 2-cells skipped (η does not commute)")

    Kop = opposite_2category(K)
    n2 = 0
    for a, b in product(morphisms, repeat=2):
        fa, fb_ = fwd[(a.f, a.sigma)], fwd[(b.f, b.sigma)]
        cells = {c.alpha for c in fem_cells(K, a, b)}
        image = {}
        for ab in K.hom2(fa, fb_):
            al = lift_cell(K, a, ab, wt, ws)
            if al not in cells:
                return fail("ᾱ does not map to a FEM 2-cell", (a.f, b.f, ab, al))
            image[ab] = al
        if sorted(set(image.values())) != sorted(cells) or len(set(image.values())) != len(image):
            return fail("2-cell correspondence is not bijective", (a.f, a.sigma, b.f, b.sigma))
        for ab, al in image.items():
            back_al = lift_cell(K, b, K.dag2(ab), wt, ws)
            if back_al != fk_dagger(Kop, mt, al, b.f):
                return fail("2-cell correspondence does not preserve the dagger", (ab, al))
        n2 += len(image)
    return Verdict(True, None, detail + f"; {n2} 2-cells, daggers preserved")


# -- extension along the inclusion ----------------------------------------------------


@dataclass(frozen=True)
class Extension:
    functor: Dagger2Functor
    fem_completion: FinDagger2Category
    witnesses: dict

    __hash__ = None  # type: ignore[assignment]


def image_monad(F: Dagger2Functor, m: Monad2) -> Monad2:
    C = F.target
    return validate_monad2(C, F.obj_map[m.D], F.map1[m.t], F.map2[m.mu], F.map2[m.eta])


def extend_2functor(F: Dagger2Functor, witnesses: dict | None = None) -> Extension:
    """F: K → C extended to F̄: FEM(K) → C with F̄ I = F.

    ``witnesses`` maps monad ids of C to FEM witnesses; monads without one
    are searched for, preferring the trivial witness on identity monads."""
    K, C = F.source, F.target
    witnesses = dict(witnesses or {})
    for m in enumerate_frobenius_monads(C, frobenius_only=True):
        if not eta_commutation_check(m):
            raise EtaCommutationRequired("target monad without η-commutation", (m.id,))
    FEM = build_fem_completion(K)
    chosen = {}
    for mid in FEM.cells0:
        im = image_monad(F, FEM.payload[mid])
        w = witnesses.get(im.id)
        if w is None:
            w = find_fem_witness(C, im)
        if w is None:
            raise MissingWitness("no FEM witness for an image monad", (mid, im.id))
        witnesses[im.id] = w
        chosen[mid] = w
    obj = {mid: chosen[mid].E for mid in FEM.cells0}
    map1 = {}
    for fid in FEM.cells1():
        a = FEM.payload[fid]
        wt, ws = chosen[a.source.id], chosen[a.target.id]
        lifts = lift_morphism(C, F.map1[a.f], F.map2[a.sigma], wt, ws)
        if len(lifts) != 1:
            raise (NoComparison if not lifts else NonUnique)(
                f"{len(lifts)} lifts of 1-cell {fid}", (fid, tuple(lifts))
            )
        map1[fid] = lifts[0]
    map2 = {}
    for xid in FEM.cells2():
        x = FEM.payload[xid]
        a, b = x.source, x.target
        wt, ws = chosen[a.source.id], chosen[a.target.id]
        Ff, Fa = F.map1[a.f], F.map2[x.alpha]
        sols = [
            c
            for c in C.hom2(map1[a.id], map1[b.id])
            if C.v(C.lw(ws.u, C.rw(c, wt.f_t)), C.lw(Ff, wt.monad.eta)) == Fa
        ]
        if len(sols) != 1:
            raise (NoComparison if not sols else NonUnique)(
                f"{len(sols)} lifts of 2-cell {xid}", (xid, tuple(sols))
            )
        map2[xid] = sols[0]
    try:
        Fbar = validate_2functor(FEM, C, obj, map1, map2)
    except ValidationError as e:
        raise TheoremViolation(f"extension is not a dagger 2-functor: {e.kind}: {e}", e.witness) from e
    FI = compose_2functors(Fbar, inclusion(K, FEM))
    if (FI.obj_map, FI.map1, FI.map2) != (dict(F.obj_map), dict(F.map1), dict(F.map2)):
        raise TheoremViolation("F̄ I != F", None)
    for mid, w in chosen.items():
        if not fem_object_check(C, w.monad, w):
            raise TheoremViolation("chosen witness fails the representability check", (mid, w.E))
    return Extension(Fbar, FEM, chosen)
