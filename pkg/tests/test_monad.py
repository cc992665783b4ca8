import pytest

from dagfem import oracle
from dagfem.errors import AssocFail, MonadMismatch, NotFrobenius, UnitFail
from dagfem.fixtures import CORPUS, category, p2_zero, unit_iso, z2
from dagfem.functor import hom_category
from dagfem.kleisli import build_kleisli, pointwise_fem_family
from dagfem.monad import (
    FrobeniusMonad,
    build_fem_category,
    check_frobenius,
    comparison_functor,
    enumerate_algebras,
    enumerate_monads,
    fem_adjunction,
    identity_adjunction,
    identity_monad,
    is_em_algebra,
    is_fem_algebra,
    is_monadic,
    make_monad,
    monad_from_adjunction,
    non_monadic_adjunction,
    postcompose_monad,
    ts_monad,
)


def test_identity_with_eta_s_violates_unit():
    with pytest.raises(UnitFail):
        make_monad(z2(), {"1": "1", "s": "s"}, {"*": "1"}, {"*": "s"})


def test_associativity_failure_is_reported():
    # on REL2, T keeps only the identity and the swap; μ = full relation, η = empty
    C = category("REL2")
    keep = {"R1001", "R0110"}
    T = {r: (r if r in keep else "R0000") for r in C.morphisms}
    with pytest.raises(AssocFail):
        make_monad(C, T, {"*": "R1111"}, {"*": "R0000"})


def test_ts_is_frobenius():
    m = ts_monad()
    assert m.frobenius and check_frobenius(m)


def test_ts_algebras():
    algs = enumerate_algebras(ts_monad())
    assert [(a.carrier, a.structure, a.em, a.fem) for a in algs] == [("*", "1", False, False), ("*", "s", True, True)]
    assert is_em_algebra(ts_monad(), "*", "s")
    assert is_fem_algebra(ts_monad(), "*", "s")


def test_fem_of_ts_is_z2():
    r = build_fem_category(ts_monad())
    assert r.fem_cat.size == (1, 2)
    assert oracle.iso_search_dagger(r.fem_cat, z2()) is not None


@pytest.mark.parametrize("name", CORPUS + ("P2_ZERO",))
def test_enumerate_monads_agrees_with_oracle(name):
    C = category(name)
    main = enumerate_monads(C)
    rep = oracle.enumerate_monads(C)
    assert len(main) == rep.count
    naive = sorted((sorted(i["T_morphisms"].items()), sorted(i["mu"].items()), sorted(i["eta"].items()), f["frobenius"]) for i, f in zip(rep.items, rep.flags))
    mine = sorted((sorted(m.T.mor_map.items()), sorted(m.mu.components.items()), sorted(m.eta.components.items()), m.frobenius) for m in main)
    assert mine == naive


def test_enumerate_algebras_agrees_with_oracle():
    for C in (z2(), unit_iso(), p2_zero()):
        for m in enumerate_monads(C):
            rep = oracle.enumerate_algebras(m)
            main = sorted((a.carrier, a.structure, a.fem) for a in enumerate_algebras(m) if a.em)
            naive = sorted((i["carrier"], i["structure"], f["fem"]) for i, f in zip(rep.items, rep.flags))
            assert main == naive


def test_fem_category_needs_frobenius():
    m = ts_monad()
    bad = FrobeniusMonad(m.base, m.T, m.mu, m.eta, False)
    with pytest.raises(NotFrobenius):
        build_fem_category(bad)


def test_round_trip_through_fem_adjunction():
    for C in (z2(), unit_iso(), p2_zero()):
        for m in enumerate_monads(C):
            assert monad_from_adjunction(fem_adjunction(m)).table_equal(m)


def test_comparison_for_fem_adjunction_is_identity_like():
    m = ts_monad()
    fem = build_fem_category(m)
    N = comparison_functor(fem.adj, fem)
    assert N.obj_map == {x: x for x in fem.fem_cat.objects}
    assert is_monadic(fem.adj, fem)


def test_comparison_from_kleisli():
    m = ts_monad()
    fem = build_fem_category(m)
    N = comparison_functor(build_kleisli(m).adj, fem)
    assert set(N.obj_map.values()) == set(fem.fem_cat.objects)


def test_kleisli_adjunction_of_ts_is_monadic():
    m = ts_monad()
    assert is_monadic(build_kleisli(m).adj, build_fem_category(m))


def test_identity_adjunction_is_monadic():
    adj = identity_adjunction(unit_iso())
    fem = build_fem_category(monad_from_adjunction(adj))
    assert is_monadic(adj, fem)


def test_non_monadic_adjunction():
    adj = non_monadic_adjunction()
    fem = build_fem_category(monad_from_adjunction(adj))
    N = comparison_functor(adj, fem)
    assert set(N.obj_map.values()) == {"*@1"}
    v = is_monadic(adj, fem)
    assert not v


def test_comparison_rejects_mismatched_monad():
    adj = non_monadic_adjunction()
    with pytest.raises(MonadMismatch):
        comparison_functor(adj, build_fem_category(identity_monad(z2())))


@pytest.mark.parametrize("A,D", [("ONE", "Z2"), ("Z2", "Z2"), ("UNIT_ISO", "Z2"), ("ONE", "P2_ZERO")])
def test_pointwise_transport_of_fem_algebras(A, D):
    # (F, σ) is FEM for T∘- on DagCat(A, D) iff every (F a, σ_a) is FEM for T
    A = category(A)
    for m in enumerate_monads(category(D)):
        if not m.frobenius:
            continue
        induced = postcompose_monad(m, A)
        H = induced.base
        seen = 0
        for fk in H.objects:
            for sk in H.hom(induced.T.ob(fk), fk):
                F, sigma = H.payload[fk], H.payload[sk]
                assert is_fem_algebra(induced, fk, sk) == pointwise_fem_family(m, F, sigma.components)
                seen += 1
        assert seen
