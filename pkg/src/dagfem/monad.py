"""Monads on finite dagger categories: the Frobenius law, (Frobenius-)
Eilenberg-Moore algebras, the FEM category with its free/forgetful
adjunction, monads generated by adjunctions, and the comparison functor."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import (
    AssocFail,
    InternalClosureFailure,
    MonadMismatch,
    NoComparison,
    NonUnique,
    NotAdjunction,
    NotDaggerEndofunctor,
    NotFrobenius,
    NotNatural,
    TheoremViolation,
    UnitFail,
    ValidationError,
    Verdict,
    WrongEndpoints,
    fail,
)
from .fincat import FinDaggerCategory, is_unitary, make_category
from .functor import (
    DaggerFunctor,
    NatTrans,
    compose_functors,
    enumerate_functors,
    enumerate_nats,
    hom_category,
    identity_functor,
    identity_nat,
    validate_functor,
    validate_nat,
    whisker_left,
    whisker_right,
)


@dataclass(frozen=True)
class FrobeniusMonad:
    base: FinDaggerCategory
    T: DaggerFunctor
    mu: NatTrans
    eta: NatTrans
    frobenius: bool = False

    __hash__ = None  # type: ignore[assignment]

    def table(self) -> tuple:
        return (
            dict(self.T.mor_map),
            dict(self.T.obj_map),
            dict(self.mu.components),
            dict(self.eta.components),
        )

    def table_equal(self, other: "FrobeniusMonad") -> bool:
        return self.base == other.base and self.table() == other.table()


@dataclass(frozen=True)
class EMAlgebra:
    monad: FrobeniusMonad
    carrier: str
    structure: str
    em: bool
    fem: bool

    @property
    def id(self) -> str:
        return f"{self.carrier}@{self.structure}"


@dataclass(frozen=True)
class Adjunction:
    """F ⊣ U with F: A → D; the generated monad lives on A."""

    F: DaggerFunctor
    U: DaggerFunctor
    unit: NatTrans
    counit: NatTrans

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class FEMCategoryResult:
    monad: FrobeniusMonad
    fem_cat: FinDaggerCategory
    U: DaggerFunctor
    F: DaggerFunctor
    adj: Adjunction
    counit_xi: NatTrans

    __hash__ = None  # type: ignore[assignment]


def check_frobenius(m: FrobeniusMonad) -> bool:
    """T(μ_D)∘μ†_{TD} = μ_{TD}∘T(μ†_D) at every object."""
    C, T, mu = m.base, m.T, m.mu
    for d in C.objects:
        td = T.ob(d)
        lhs = C.comp(T.mor(mu.at(d)), C.dag(mu.at(td)))
        rhs = C.comp(mu.at(td), T.mor(C.dag(mu.at(d))))
        if lhs != rhs:
            return False
    return True


def frobenius_witness(m: FrobeniusMonad) -> Verdict:
    C, T, mu = m.base, m.T, m.mu
    for d in C.objects:
        td = T.ob(d)
        lhs = C.comp(T.mor(mu.at(d)), C.dag(mu.at(td)))
        rhs = C.comp(mu.at(td), T.mor(C.dag(mu.at(d))))
        if lhs != rhs:
            return fail(f"Frobenius law fails at {d}: {lhs} != {rhs}", (d, lhs, rhs))
    return Verdict(True)


def validate_monad(base: FinDaggerCategory, T: DaggerFunctor, mu: NatTrans, eta: NatTrans) -> FrobeniusMonad:
    if T.source != base or T.target != base:
        raise NotDaggerEndofunctor("T is not an endofunctor of the base", None)
    TT = compose_functors(T, T)
    Id = identity_functor(base)
    if not (mu.F.same_maps(TT) and mu.G.same_maps(T)):
        raise WrongEndpoints("μ is not a transformation T∘T ⇒ T", None)
    if not (eta.F.same_maps(Id) and eta.G.same_maps(T)):
        raise WrongEndpoints("η is not a transformation Id ⇒ T", None)
    # re-validate naturality; a caller may have built the NatTrans by hand
    mu = validate_nat(TT, T, mu.components)
    eta = validate_nat(Id, T, eta.components)
    C = base
    for d in C.objects:
        td = T.ob(d)
        if C.comp(mu.at(d), T.mor(mu.at(d))) != C.comp(mu.at(d), mu.at(td)):
            raise AssocFail(f"associativity fails at {d}", (d,))
    for d in C.objects:
        td = T.ob(d)
        i = C.id(td)
        if C.comp(mu.at(d), T.mor(eta.at(d))) != i:
            raise UnitFail(f"μ∘Tη != id at {d}", (d,))
        if C.comp(mu.at(d), eta.at(td)) != i:
            raise UnitFail(f"μ∘ηT != id at {d}", (d,))
    m = FrobeniusMonad(base, T, mu, eta)
    return FrobeniusMonad(base, T, mu, eta, check_frobenius(m))


def make_monad(base: FinDaggerCategory, T_mor: Mapping, mu: Mapping, eta: Mapping, T_obj: Mapping | None = None) -> FrobeniusMonad:
    if T_obj is None:
        T_obj = {a: base.src(T_mor[base.id(a)]) for a in base.objects}
    T = validate_functor(base, base, T_obj, T_mor)
    TT = compose_functors(T, T)
    mu_n = validate_nat(TT, T, mu)
    eta_n = validate_nat(identity_functor(base), T, eta)
    return validate_monad(base, T, mu_n, eta_n)


def identity_monad(c: FinDaggerCategory) -> FrobeniusMonad:
    Id = identity_functor(c)
    n = identity_nat(Id)
    return validate_monad(c, Id, n, n)


def enumerate_monads(c: FinDaggerCategory) -> list:
    """Every monad on ``c`` (main path; the oracle has its own search)."""
    out = []
    Id = identity_functor(c)
    for T in enumerate_functors(c, c):
        TT = compose_functors(T, T)
        etas = enumerate_nats(Id, T)
        if not etas:
            continue
        for mu in enumerate_nats(TT, T):
            for eta in etas:
                try:
                    out.append(validate_monad(c, T, mu, eta))
                except (AssocFail, UnitFail):
                    pass
    return out


def is_em_algebra(m: FrobeniusMonad, d: str, delta: str) -> bool:
    C, T = m.base, m.T
    if C.morphisms.get(delta) != (T.ob(d), d):
        raise WrongEndpoints(f"{delta} is not T({d}) → {d}", (d, delta))
    return (
        C.comp(delta, m.eta.at(d)) == C.id(d)
        and C.comp(delta, T.mor(delta)) == C.comp(delta, m.mu.at(d))
    )


def is_fem_algebra(m: FrobeniusMonad, d: str, delta: str) -> bool:
    if not is_em_algebra(m, d, delta):
        return False
    C, T = m.base, m.T
    return C.comp(m.mu.at(d), T.mor(C.dag(delta))) == C.comp(T.mor(delta), C.dag(m.mu.at(d)))


def enumerate_algebras(m: FrobeniusMonad) -> list:
    out = []
    for d in m.base.objects:
        for delta in m.base.hom(m.T.ob(d), d):
            em = is_em_algebra(m, d, delta)
            out.append(EMAlgebra(m, d, delta, em, em and is_fem_algebra(m, d, delta)))
    return out


def is_algebra_hom(m: FrobeniusMonad, x: tuple, y: tuple, h: str) -> bool:
    """h: (D, δ) → (D', δ') satisfies h∘δ = δ'∘T(h)."""
    C = m.base
    (d, delta), (d2, delta2) = x, y
    return C.morphisms[h] == (d, d2) and C.comp(h, delta) == C.comp(delta2, m.T.mor(h))


def validate_adjunction(F: DaggerFunctor, U: DaggerFunctor, unit: NatTrans, counit: NatTrans) -> Adjunction:
    A, D = F.source, F.target
    if U.source != D or U.target != A:
        raise NotAdjunction("F and U are not opposed", None)
    UF, FU = compose_functors(U, F), compose_functors(F, U)
    unit = validate_nat(identity_functor(A), UF, unit.components)
    counit = validate_nat(FU, identity_functor(D), counit.components)
    for a in A.objects:
        if D.comp(counit.at(F.ob(a)), F.mor(unit.at(a))) != D.id(F.ob(a)):
            raise NotAdjunction(f"triangle εF∘Fη != 1 at {a}", (a,))
    for x in D.objects:
        if A.comp(U.mor(counit.at(x)), unit.at(U.ob(x))) != A.id(U.ob(x)):
            raise NotAdjunction(f"triangle Uε∘ηU != 1 at {x}", (x,))
    return Adjunction(F, U, unit, counit)


def identity_adjunction(c: FinDaggerCategory) -> Adjunction:
    Id = identity_functor(c)
    n = identity_nat(Id)
    return validate_adjunction(Id, Id, n, n)


def monad_from_adjunction(adj: Adjunction) -> FrobeniusMonad:
    """(UF, UεF, η). The result is always Frobenius; failure means a bug."""
    A = adj.F.source
    T = compose_functors(adj.U, adj.F)
    mu = {a: adj.U.mor(adj.counit.at(adj.F.ob(a))) for a in A.objects}
    m = validate_monad(A, T, validate_nat(compose_functors(T, T), T, mu), adj.unit)
    if not m.frobenius:
        raise TheoremViolation("monad generated by an adjunction is not Frobenius", frobenius_witness(m).witness)
    return m


def _alg_id(d: str, delta: str) -> str:
    return f"{d}@{delta}"


def _hom_id(h: str, x: str, y: str) -> str:
    return f"{h}:{x}>{y}"


def build_fem_category(m: FrobeniusMonad) -> FEMCategoryResult:
    if not m.frobenius:
        raise NotFrobenius("FEM category requested for a non-Frobenius monad", frobenius_witness(m).witness)
    C, T = m.base, m.T
    algs = [(a.carrier, a.structure) for a in enumerate_algebras(m) if a.fem]
    objects = [_alg_id(*x) for x in algs]
    payload: dict = {_alg_id(*x): x for x in algs}
    mors, ident = {}, {}
    homs: dict = {}
    for x in algs:
        for y in algs:
            hs = [h for h in C.hom(x[0], y[0]) if is_algebra_hom(m, x, y, h)]
            homs[(x, y)] = hs
            for h in hs:
                k = _hom_id(h, _alg_id(*x), _alg_id(*y))
                mors[k] = (_alg_id(*x), _alg_id(*y))
                payload[k] = h
    for x in algs:
        ident[_alg_id(*x)] = _hom_id(C.id(x[0]), _alg_id(*x), _alg_id(*x))
    comp, dag = {}, {}
    for (x, y), hs in homs.items():
        for h in hs:
            hd = C.dag(h)
            if hd not in homs[(y, x)]:
                raise InternalClosureFailure(f"dagger of homomorphism {h} is not a homomorphism", (h, _alg_id(*x), _alg_id(*y)))
            dag[_hom_id(h, _alg_id(*x), _alg_id(*y))] = _hom_id(hd, _alg_id(*y), _alg_id(*x))
            for z in algs:
                for g in homs[(y, z)]:
                    comp[(_hom_id(g, _alg_id(*y), _alg_id(*z)), _hom_id(h, _alg_id(*x), _alg_id(*y)))] = _hom_id(
                        C.comp(g, h), _alg_id(*x), _alg_id(*z)
                    )
    try:
        fem = make_category(objects, mors, ident, comp, dag, payload)
    except ValidationError as e:
        raise InternalClosureFailure(f"FEM category failed validation: {e}", e.witness) from e

    free = {d: (T.ob(d), m.mu.at(d)) for d in C.objects}
    for d, x in free.items():
        if x not in algs:
            raise InternalClosureFailure(f"free algebra on {d} is not FEM", (d,))
    try:
        U = validate_functor(fem, C, {k: payload[k][0] for k in objects}, {k: payload[k] for k in mors})
        F = validate_functor(
            C,
            fem,
            {d: _alg_id(*free[d]) for d in C.objects},
            {f: _hom_id(T.mor(f), _alg_id(*free[C.src(f)]), _alg_id(*free[C.tgt(f)])) for f in C.morphisms},
        )
        counit = {k: _hom_id(payload[k][1], _alg_id(*free[payload[k][0]]), k) for k in objects}
        FU = compose_functors(F, U)
        adj = validate_adjunction(
            F,
            U,
            validate_nat(identity_functor(C), compose_functors(U, F), m.eta.components),
            validate_nat(FU, identity_functor(fem), counit),
        )
    except ValidationError as e:
        raise InternalClosureFailure(f"free/forgetful adjunction failed validation: {e}", e.witness) from e
    xi = whisker_left(U, adj.counit)
    return FEMCategoryResult(m, fem, U, F, adj, xi)


def fem_adjunction(m: FrobeniusMonad) -> Adjunction:
    return build_fem_category(m).adj


def comparison_functor(adj: Adjunction, fem: FEMCategoryResult) -> DaggerFunctor:
    """The unique N with U^T N = U and ξN = Uε; uniqueness is certified by
    enumerating every dagger functor satisfying both equations."""
    gen = monad_from_adjunction(adj)
    if not gen.table_equal(fem.monad):
        raise MonadMismatch("adjunction does not generate the FEM category's monad", None)
    D = adj.F.target
    E = fem.fem_cat
    U, eps = adj.U, adj.counit

    def structure_at(y):
        return U.ob(y), U.mor(eps.at(y))

    obj_map = {}
    for y in D.objects:
        k = _alg_id(*structure_at(y))
        if k not in E.objects:
            raise NoComparison(f"(U{y}, Uε_{y}) is not a FEM algebra", (y, k))
        obj_map[y] = k
    mor_map = {}
    for g in D.mor_ids():
        k = _hom_id(U.mor(g), obj_map[D.src(g)], obj_map[D.tgt(g)])
        if k not in E.morphisms:
            raise NoComparison(f"U({g}) is not an algebra homomorphism", (g,))
        mor_map[g] = k
    try:
        N = validate_functor(D, E, obj_map, mor_map)
    except ValidationError as e:
        raise NoComparison(f"comparison is not a dagger functor: {e}", e.witness) from e

    # certification: all N' with U^T N' = U and ξN' = Uε
    sols = enumerate_functors(
        D,
        E,
        obj_candidates=lambda y: [x for x in E.objects if E.payload[x] == structure_at(y)],
        mor_candidates=lambda g: [h for h in E.morphisms if E.payload[h] == U.mor(g)],
    )
    if not sols:
        raise NoComparison("no functor satisfies the comparison equations", None)
    if len(sols) > 1:
        raise NonUnique(f"{len(sols)} functors satisfy the comparison equations", [s.key for s in sols])
    if not sols[0].same_maps(N):
        raise NoComparison("enumerated comparison differs from the constructed one", None)
    if not compose_functors(N, adj.F).same_maps(fem.F):
        raise NoComparison("N∘F != F^T", None)
    return N


def find_unitary_iso(F: DaggerFunctor, G: DaggerFunctor) -> NatTrans | None:
    C = F.target
    isos = enumerate_nats(F, G, component_filter=lambda c: is_unitary(C, c))
    return isos[0] if isos else None


def is_monadic(adj: Adjunction, fem: FEMCategoryResult) -> Verdict:
    """Search for M with unitary natural isomorphisms NM ≅ 1 and 1 ≅ MN."""
    N = comparison_functor(adj, fem)
    D, E = N.source, N.target
    for M in enumerate_functors(E, D):
        a = find_unitary_iso(compose_functors(N, M), identity_functor(E))
        if a is None:
            continue
        b = find_unitary_iso(identity_functor(D), compose_functors(M, N))
        if b is not None:
            return Verdict(True, M.key, "unitary equivalence found")
    return fail("no dagger functor M with unitary isomorphisms NM ≅ 1, 1 ≅ MN", N.key)


# -- monads induced on hom categories ------------------------------------------


def postcompose_monad(m: FrobeniusMonad, A: FinDaggerCategory) -> FrobeniusMonad:
    """DagCat(A, T) on DagCat(A, D): F ↦ TF, μF, ηF."""
    H = hom_category(A, m.base)
    T = m.T
    obj = {k: compose_functors(T, H.payload[k]).key for k in H.objects}
    mor = {k: whisker_left(T, H.payload[k]).key for k in H.morphisms}
    mu = {k: whisker_right(m.mu, H.payload[k]).key for k in H.objects}
    eta = {k: whisker_right(m.eta, H.payload[k]).key for k in H.objects}
    return make_monad(H, mor, mu, eta, obj)


def precompose_monad(m: FrobeniusMonad, X: FinDaggerCategory) -> FrobeniusMonad:
    """DagCat(T, X) on DagCat(D, X): S ↦ ST, Sμ, Sη."""
    H = hom_category(m.base, X)
    T = m.T
    obj = {k: compose_functors(H.payload[k], T).key for k in H.objects}
    mor = {k: whisker_right(H.payload[k], T).key for k in H.morphisms}
    mu = {k: whisker_left(H.payload[k], m.mu).key for k in H.objects}
    eta = {k: whisker_left(H.payload[k], m.eta).key for k in H.objects}
    return make_monad(H, mor, mu, eta, obj)


def ts_monad():
    """TS: identity functor on Z2 with μ = η = s."""
    from .fixtures import z2

    c = z2()
    return make_monad(c, {"1": "1", "s": "s"}, {"*": "s"}, {"*": "s"})


def non_monadic_adjunction() -> Adjunction:
    """F ⊣ U between ONE and P2_ZERO with F picking the zero object.

    The generated monad is the identity on ONE, so the comparison collapses
    P2_ZERO onto ONE; X is not unitarily isomorphic to 0, hence not monadic.
    """
    from .fixtures import one, p2_zero

    A, D = one(), p2_zero()
    F = validate_functor(A, D, {"*": "0"}, {"1": "10"})
    U = validate_functor(D, A, {"0": "*", "X": "*"}, {m: "1" for m in D.morphisms})
    unit = NatTrans(identity_functor(A), compose_functors(U, F), {"*": "1"})
    counit = NatTrans(compose_functors(F, U), identity_functor(D), {"0": "10", "X": "z"})
    return validate_adjunction(F, U, unit, counit)
