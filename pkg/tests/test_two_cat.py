import dataclasses

import pytest

from dagfem import oracle
from dagfem.errors import InterchangeFail, MissingWitness, MonadMismatch
from dagfem.fixtures import category, z2
from dagfem.functor import hom_category
from dagfem.monad import build_fem_category, comparison_functor, enumerate_monads, ts_monad
from dagfem.two_cat.completions import (
    build_dfmnd,
    build_fem_completion,
    build_fk_completion,
    check_fully_faithful,
    fem_via_opposite,
    inclusion,
)
from dagfem.two_cat.core import (
    cell_of,
    constant_2functor,
    functor_2category,
    identity_2functor,
    locally_discrete,
    make_2category,
    opposite_2category,
    sigma_z2,
    terminal_2category,
)
from dagfem.two_cat.monads import dfmnd_morphisms, enumerate_frobenius_monads, identity_monad2, validate_monad2
from dagfem.two_cat.universal import (
    FEMObjectWitness,
    eta_commutation_check,
    extend_2functor,
    fem_object_check,
    fem_pairs_correspondence,
    find_fem_witness,
    trivial_witness,
    universal2_check,
    validate_adjunction2,
)

BUILDERS = [build_dfmnd, build_fk_completion, build_fem_completion]


def test_locally_discrete_z2_is_valid():
    K = locally_discrete(z2())
    assert K.size == (1, 2, 2)


def test_sigma_z2_is_valid():
    K = sigma_z2()
    assert K.size == (1, 1, 2)
    assert K.h("s", "s") == "1"
    for y in ("1", "s"):
        for x in ("1", "s"):
            assert K.dag2(K.h(y, x)) == K.h(K.dag2(y), K.dag2(x))


def test_sigma_z2_with_bad_horizontal_composite():
    K = sigma_z2()
    hc = {(y, x): K.h(y, x) for y in ("1", "s") for x in ("1", "s")}
    hc[("s", "s")] = "s"
    with pytest.raises(InterchangeFail):
        make_2category(K.cells0, K.hom, K.id1, K.comp1, K.lwhisk, K.rwhisk, hc)


def test_monads_of_terminal_and_sigma():
    (m,) = enumerate_frobenius_monads(terminal_2category())
    assert m.t == "1" and m.mu == m.eta == "1_1"
    ms = enumerate_frobenius_monads(sigma_z2())
    assert [(m.mu, m.eta, m.frobenius) for m in ms] == [("1", "1", True), ("s", "s", True)]


def test_fixture_monads_match_monad_module(bundle):
    K = bundle.K
    by_d = {}
    for m in enumerate_frobenius_monads(K):
        by_d.setdefault(m.D, []).append(m)
    assert by_d["ONE"] and by_d["Z2"]
    cats = {"ONE": category("ONE"), "Z2": z2(), "FEM_TS": bundle.fem.fem_cat}
    for D, c in cats.items():
        main = enumerate_monads(c)
        assert len(by_d[D]) == len(main)
        assert sorted(m.frobenius for m in by_d[D]) == sorted(m.frobenius for m in main)


@pytest.mark.parametrize("build", BUILDERS, ids=lambda b: b.__name__)
def test_completions_of_terminal_are_trivial(build):
    C = build(terminal_2category())
    assert C.size == (1, 1, 1)
    assert check_fully_faithful(inclusion(terminal_2category(), C))


@pytest.mark.parametrize("build", BUILDERS, ids=lambda b: b.__name__)
def test_completions_of_sigma_z2(build):
    K = sigma_z2()
    C = build(K)
    assert len(C.cells0) == 2
    for (a, b), hc in C.hom.items():
        t = oracle.tab(hc)
        assert oracle.naive_category_violations(t.objects, t.mors, t.ident, t.comp, t.dag) == []
    assert check_fully_faithful(inclusion(K, C))


@pytest.mark.parametrize("K", [terminal_2category(), sigma_z2()], ids=["terminal", "sigma_z2"])
def test_fk_dagger_involutive_and_reversing(K):
    C = build_fk_completion(K)
    for hc in C.hom.values():
        for x in hc.morphisms:
            assert hc.dag(hc.dag(x)) == x
        for (y, x), yx in hc.compose.items():
            assert hc.dag(yx) == hc.comp(hc.dag(x), hc.dag(y))


@pytest.mark.parametrize("K", [terminal_2category(), sigma_z2()], ids=["terminal", "sigma_z2"])
def test_fem_completion_is_op_fk_op(K):
    a, b = build_fem_completion(K), fem_via_opposite(K)
    assert a == b


def test_dfmnd_homs_match_monad_morphism_oracle():
    K = sigma_z2()
    ms = enumerate_frobenius_monads(K)
    for s in ms:
        for t in ms:
            main = sorted((a.f, a.sigma) for a in dfmnd_morphisms(K, s, t))
            rep = oracle.enumerate_monad_morphisms(*({"D": x.D, "t": x.t, "mu": x.mu, "eta": x.eta} for x in (s, t)), K)
            assert main == sorted((i["f"], i["sigma"]) for i in rep.items)


def test_fem_object_check_identity_monad():
    K = sigma_z2()
    m = identity_monad2(K, "*")
    assert fem_object_check(K, m, trivial_witness(K, m))


def test_fem_object_check_ts(bundle):
    assert fem_object_check(bundle.K, bundle.ts, bundle.witness)


def test_fem_object_check_wrong_object(bundle):
    K, m = bundle.K, bundle.ts
    # well-typed (u, ξ) out of ONE; the hom cardinalities cannot match
    u = K.hom1("ONE", "Z2")[0]
    ft = K.hom1("Z2", "ONE")[0]
    eps = K.hom2(K.c1(ft, u), K.id1["ONE"])[0]
    verdicts = [fem_object_check(K, m, FEMObjectWitness(m, "ONE", u, xi, ft, eps)) for xi in K.hom2(K.c1(m.t, u), u)]
    assert verdicts and not any(verdicts)
    assert any("not bijective" in v.detail for v in verdicts)


def test_fem_witness_search_finds_the_fem_category(bundle):
    w = find_fem_witness(bundle.K, bundle.ts)
    assert w is not None and w.E == "FEM_TS"


def test_universal2_identity_adjunction():
    K = sigma_z2()
    i = K.id1["*"]
    adj = validate_adjunction2(K, "*", "*", i, i, "1", "1")
    m = identity_monad2(K, "*")
    v = universal2_check(K, adj, trivial_witness(K, m))
    assert v and v.witness == i


def test_universal2_fem_adjunction(bundle):
    v = universal2_check(bundle.K, bundle.fem_adj, bundle.witness)
    assert v.witness == bundle.K.id1["FEM_TS"]


def test_universal2_kleisli_adjunction(bundle_kl):
    B = bundle_kl
    w = dataclasses.replace(B.witness, monad=B.ts)
    v = universal2_check(B.K, B.kl_adj, w)
    N = comparison_functor(B.kl.adj, B.fem)
    assert v.witness == cell_of(B.K, N)


def test_universal2_monad_mismatch(bundle):
    K = bundle.K
    i = K.id1["ONE"]
    adj = validate_adjunction2(K, "ONE", "ONE", i, i, K.id2(i), K.id2(i))
    with pytest.raises(MonadMismatch):
        universal2_check(K, adj, bundle.witness)


def test_eta_commutation():
    K = sigma_z2()
    for m in enumerate_frobenius_monads(K):
        assert eta_commutation_check(m)
    ts = validate_monad2(K, "*", "t0", "s", "s")
    assert K.lw("t0", "s") == K.rw("s", "t0") == "s"
    assert eta_commutation_check(ts)


def test_pairs_identity_monad():
    K = sigma_z2()
    m = identity_monad2(K, "*")
    w = trivial_witness(K, m)
    v = fem_pairs_correspondence(K, m, m, w, w)
    n = len(K.hom1("*", "*"))
    assert v and v.detail.startswith(f"{n} monad morphisms ↔ {n} pairs")


def test_pairs_ts(bundle):
    K, m, w = bundle.K, bundle.ts, bundle.witness
    v = fem_pairs_correspondence(K, m, m, w, w)
    assert v, v.detail
    assert "daggers preserved" in v.detail


def test_extend_identity_on_fixture(bundle):
    ext = extend_2functor(identity_2functor(bundle.K))
    for mid, w in ext.witnesses.items():
        assert fem_object_check(bundle.K, w.monad, w)
    ts_id = bundle.ts.id
    assert ext.functor.obj_map[ts_id] == "FEM_TS"


def test_extend_from_terminal():
    T = terminal_2category()
    ext = extend_2functor(identity_2functor(T))
    assert ext.functor.obj_map == {m: "*" for m in ext.fem_completion.cells0}


def test_extend_constant_at_one(bundle):
    K = bundle.K
    F = constant_2functor(K, K, "ONE")
    ext = extend_2functor(F)
    assert set(ext.functor.obj_map.values()) == {"ONE"}
    assert set(ext.functor.map1.values()) == {K.id1["ONE"]}


@pytest.mark.parametrize("name", ["ONE", "Z2", "P2", "UNIT_ISO", "REL2", "P2_ZERO"])
def test_fixture_targets_satisfy_eta_commutation(name):
    # extend_2functor's precondition; a failure would surface as EtaCommutationRequired
    C = functor_2category({name: category(name)})
    ms = enumerate_frobenius_monads(C, frobenius_only=True)
    assert ms and all(eta_commutation_check(m) for m in ms)


@pytest.mark.parametrize("name", ["ONE", "Z2", "P2", "UNIT_ISO"])
def test_extend_identity_on_single_category(name):
    C = functor_2category({name: category(name)})
    ext = extend_2functor(identity_2functor(C))
    assert len(ext.witnesses) == len(enumerate_frobenius_monads(C, frobenius_only=True))


def test_extend_missing_witness():
    # the monad collapsing P2_ZERO onto 0 has FEM category ONE, which is not a 0-cell here
    C = functor_2category({"P2_ZERO": category("P2_ZERO")})
    with pytest.raises(MissingWitness):
        extend_2functor(identity_2functor(C))


def test_opposite_2category_is_involutive():
    K = sigma_z2()
    assert opposite_2category(opposite_2category(K)) == K


def test_fixture_hom_categories_are_functor_categories(bundle):
    K = bundle.K
    assert K.hom[("Z2", "Z2")].size == hom_category(z2(), z2()).size
    assert build_fem_category(ts_monad()).fem_cat.size == K.hom[("ONE", "FEM_TS")].size
