"""Kleisli categories of dagger Frobenius monads and the two
representability isomorphisms checked at finite scale."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import (
    InternalClosureFailure,
    NotFrobenius,
    TheoremViolation,
    ValidationError,
    Verdict,
    fail,
)
from .fincat import FinDaggerCategory, make_category
from .functor import (
    DaggerFunctor,
    NatTrans,
    compose_functors,
    hom_category,
    identity_functor,
    validate_functor,
    validate_nat,
    whisker_left,
    whisker_right,
)
from .monad import (
    Adjunction,
    FrobeniusMonad,
    build_fem_category,
    frobenius_witness,
    postcompose_monad,
    precompose_monad,
    validate_adjunction,
)


@dataclass(frozen=True)
class KleisliMorphism:
    src: str
    tgt: str
    underlying: str  # base morphism src → T(tgt)


@dataclass(frozen=True)
class KleisliResult:
    monad: FrobeniusMonad
    kl_cat: FinDaggerCategory
    F_T: DaggerFunctor
    U_T: DaggerFunctor
    adj: Adjunction

    __hash__ = None  # type: ignore[assignment]

    def counit_at(self, d: str) -> str:
        return self.adj.counit.at(d)


def kl_id(f: str, c: str, d: str) -> str:
    return f"{f}:{c}>{d}"


def build_kleisli(m: FrobeniusMonad) -> KleisliResult:
    if not m.frobenius:
        raise NotFrobenius("Kleisli dagger needs a Frobenius monad", frobenius_witness(m).witness)
    B, T, mu, eta = m.base, m.T, m.mu, m.eta
    objs = list(B.objects)
    homs = {(c, d): B.hom(c, T.ob(d)) for c in objs for d in objs}
    mors, payload = {}, {}
    for (c, d), fs in homs.items():
        for f in fs:
            k = kl_id(f, c, d)
            mors[k] = (c, d)
            payload[k] = KleisliMorphism(c, d, f)
    ident = {d: kl_id(eta.at(d), d, d) for d in objs}
    comp, dag = {}, {}
    for (b, c), fs in homs.items():
        for f in fs:
            for d in objs:
                for g in homs[(c, d)]:
                    gf = B.comp(mu.at(d), T.mor(g), f)
                    comp[(kl_id(g, c, d), kl_id(f, b, c))] = kl_id(gf, b, d)
            fd = B.comp(T.mor(B.dag(f)), B.dag(mu.at(c)), eta.at(c))
            dag[kl_id(f, b, c)] = kl_id(fd, c, b)
    try:
        kl = make_category(objs, mors, ident, comp, dag, payload)
        F_T = validate_functor(
            B, kl, {d: d for d in objs},
            {f: kl_id(B.comp(eta.at(B.tgt(f)), f), B.src(f), B.tgt(f)) for f in B.morphisms},
        )
        U_T = validate_functor(
            kl, B, {d: T.ob(d) for d in objs},
            {k: B.comp(mu.at(p.tgt), T.mor(p.underlying)) for k, p in payload.items()},
        )
        counit = {d: kl_id(B.id(T.ob(d)), T.ob(d), d) for d in objs}
        adj = validate_adjunction(
            F_T,
            U_T,
            validate_nat(identity_functor(B), compose_functors(U_T, F_T), eta.components),
            validate_nat(compose_functors(F_T, U_T), identity_functor(kl), counit),
        )
    except ValidationError as e:
        raise TheoremViolation(f"Kleisli construction failed: {e.kind}: {e}", e.witness) from e
    if not compose_functors(U_T, F_T).same_maps(T):
        raise InternalClosureFailure("U_T F_T != T", None)
    return KleisliResult(m, kl, F_T, U_T, adj)


def _check_mutually_inverse(
    C: FinDaggerCategory,
    D: FinDaggerCategory,
    phi: tuple,
    psi: tuple,
) -> Verdict:
    """phi = (obj map, mor map) C → D, psi likewise D → C."""
    try:
        P = validate_functor(C, D, *phi)
    except ValidationError as e:
        return fail(f"forward map is not a dagger functor: {e}", ("forward", e.kind, e.witness))
    try:
        Q = validate_functor(D, C, *psi)
    except ValidationError as e:
        return fail(f"backward map is not a dagger functor: {e}", ("backward", e.kind, e.witness))
    for x in C.objects:
        if Q.ob(P.ob(x)) != x:
            return fail("backward∘forward is not the identity on objects", (x,))
    for f in C.mor_ids():
        if Q.mor(P.mor(f)) != f:
            return fail("backward∘forward is not the identity on morphisms", (f,))
    for y in D.objects:
        if P.ob(Q.ob(y)) != y:
            return fail("forward∘backward is not the identity on objects", (y,))
    for g in D.mor_ids():
        if P.mor(Q.mor(g)) != g:
            return fail("forward∘backward is not the identity on morphisms", (g,))
    return Verdict(True, None, f"{len(C.objects)} objects, {len(C.morphisms)} morphisms")


def _fem_ids(fem_cat: FinDaggerCategory) -> tuple:
    """Reverse lookups (carrier, structure) → object id, (h, x, y) → morphism id."""
    objs = {fem_cat.payload[x]: x for x in fem_cat.objects}
    mors = {(fem_cat.payload[k],) + fem_cat.morphisms[k]: k for k in fem_cat.morphisms}
    return objs, mors


def check_fk_universal(m: FrobeniusMonad, X: FinDaggerCategory) -> Verdict:
    """DagCat(KL(T), X) ≅ FEM(DagCat(D, X), -∘T) via S' ↦ (S'F_T, S'ε)."""
    kl = build_kleisli(m)
    K = hom_category(kl.kl_cat, X)
    induced = precompose_monad(m, X)
    fem = build_fem_category(induced)
    E = fem.fem_cat
    H = induced.base
    objs, mors = _fem_ids(E)

    phi_o, phi_m = {}, {}
    for sk in K.objects:
        S = K.payload[sk]
        SF = compose_functors(S, kl.F_T)
        SFT = compose_functors(SF, m.T)
        try:
            phi = validate_nat(SFT, SF, {d: S.mor(kl.counit_at(d)) for d in m.base.objects})
        except ValidationError as e:
            return fail(f"S'ε is not natural for {sk}", (sk, e.witness))
        key = (SF.key, phi.key)
        if key not in objs:
            return fail("(S'F_T, S'ε) is not a FEM algebra", (sk,) + key)
        phi_o[sk] = objs[key]
    for tk in K.morphisms:
        th = K.payload[tk]
        a, b = K.morphisms[tk]
        thF = whisker_right(th, kl.F_T)
        key = (thF.key, phi_o[a], phi_o[b])
        if key not in mors:
            return fail("θF_T is not an algebra homomorphism", (tk,))
        phi_m[tk] = mors[key]

    kl_objs, kl_mors = {K.payload[k].key: k for k in K.objects}, {K.payload[k].key: k for k in K.morphisms}
    psi_o, psi_m = {}, {}
    for x in E.objects:
        sk, pk = E.payload[x]
        S, phi = H.payload[sk], H.payload[pk]
        Sbar_mor = {
            f: X.comp(phi.at(p.tgt), S.mor(p.underlying)) for f, p in kl.kl_cat.payload.items()
        }
        try:
            Sbar = validate_functor(kl.kl_cat, X, dict(S.obj_map), Sbar_mor)
        except ValidationError as e:
            return fail(f"φ∘S(-) is not a dagger functor on the Kleisli category for {x}", (x, e.kind, e.witness))
        if Sbar.key not in kl_objs:
            return fail("extension missing from the hom category", (x,))
        psi_o[x] = kl_objs[Sbar.key]
    for hk in E.morphisms:
        th = H.payload[E.payload[hk]]
        a, b = E.morphisms[hk]
        F, G = K.payload[psi_o[a]], K.payload[psi_o[b]]
        try:
            n = validate_nat(F, G, th.components)
        except ValidationError as e:
            return fail("homomorphism does not extend to a transformation", (hk, e.witness))
        psi_m[hk] = kl_mors[n.key]
    return _check_mutually_inverse(K, E, (phi_o, phi_m), (psi_o, psi_m))


def check_fem_representability(A: FinDaggerCategory, m: FrobeniusMonad) -> Verdict:
    """DagCat(A, FEM(T)) ≅ FEM(DagCat(A, D), T∘-) via F̄ ↦ (U^T F̄, ξF̄)."""
    fem = build_fem_category(m)
    K = hom_category(A, fem.fem_cat)
    induced = postcompose_monad(m, A)
    fem2 = build_fem_category(induced)
    E, H = fem2.fem_cat, induced.base
    objs, mors = _fem_ids(E)
    base_objs, base_mors = _fem_ids(fem.fem_cat)

    phi_o, phi_m = {}, {}
    for fk in K.objects:
        Fb = K.payload[fk]
        UF = compose_functors(fem.U, Fb)
        sigma = whisker_right(fem.counit_xi, Fb)
        key = (UF.key, sigma.key)
        if key not in objs:
            return fail("(U^T F̄, ξF̄) is not a FEM algebra", (fk,) + key)
        phi_o[fk] = objs[key]
    for tk in K.morphisms:
        a, b = K.morphisms[tk]
        key = (whisker_left(fem.U, K.payload[tk]).key, phi_o[a], phi_o[b])
        if key not in mors:
            return fail("U^T θ is not an algebra homomorphism", (tk,))
        phi_m[tk] = mors[key]

    k_objs, k_mors = {K.payload[k].key: k for k in K.objects}, {K.payload[k].key: k for k in K.morphisms}
    psi_o, psi_m = {}, {}
    for x in E.objects:
        fk, sk = E.payload[x]
        F, sigma = H.payload[fk], H.payload[sk]
        om, mm = {}, {}
        for a in A.objects:
            alg = (F.ob(a), sigma.at(a))
            if alg not in base_objs:
                return fail("pointwise algebra is not FEM", (x, a))
            om[a] = base_objs[alg]
        for f in A.mor_ids():
            key = (F.mor(f), om[A.src(f)], om[A.tgt(f)])
            if key not in base_mors:
                return fail("pointwise image is not a homomorphism", (x, f))
            mm[f] = base_mors[key]
        try:
            Fb = validate_functor(A, fem.fem_cat, om, mm)
        except ValidationError as e:
            return fail("lifted functor invalid", (x, e.kind, e.witness))
        psi_o[x] = k_objs[Fb.key]
    for hk in E.morphisms:
        th = H.payload[E.payload[hk]]
        a, b = E.morphisms[hk]
        F, G = K.payload[psi_o[a]], K.payload[psi_o[b]]
        comps = {}
        for o in A.objects:
            key = (th.at(o), F.ob(o), G.ob(o))
            if key not in base_mors:
                return fail("component is not a homomorphism", (hk, o))
            comps[o] = base_mors[key]
        try:
            n = validate_nat(F, G, comps)
        except ValidationError as e:
            return fail("lifted transformation invalid", (hk, e.witness))
        psi_m[hk] = k_mors[n.key]
    return _check_mutually_inverse(K, E, (phi_o, phi_m), (psi_o, psi_m))


def pointwise_fem_family(m: FrobeniusMonad, F: DaggerFunctor, sigma: Mapping) -> bool:
    """Each (F a, σ_a) is a FEM algebra for m."""
    from .monad import is_fem_algebra

    return all(is_fem_algebra(m, F.ob(a), sigma[a]) for a in F.source.objects)
