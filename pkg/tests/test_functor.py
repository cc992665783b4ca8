import pytest

from dagfem import oracle
from dagfem.errors import DanglingReference, NotDaggerPreserving, NotFunctorial, NotNatural
from dagfem.fincat import opposite
from dagfem.fixtures import one, p2, unit_iso, z2
from dagfem.functor import (
    compose_functors,
    enumerate_functors,
    enumerate_nats,
    hom_category,
    identity_functor,
    identity_nat,
    nat_dagger,
    nat_hcomp,
    nat_vcomp,
    validate_functor,
    validate_nat,
    whisker_left,
    whisker_right,
)


def test_collapse_unit_iso_to_one():
    F = validate_functor(unit_iso(), one(), {"a": "*", "b": "*"}, {m: "1" for m in unit_iso().morphisms})
    assert F.mor("u") == "1"


def test_not_dagger_preserving():
    mm = {"1a": "1", "1b": "1", "u": "s", "ud": "1"}
    with pytest.raises((NotDaggerPreserving, NotFunctorial)) as e:
        validate_functor(unit_iso(), z2(), {"a": "*", "b": "*"}, mm)
    # u† = ud must map to s† = s; the dagger check runs before composition
    assert isinstance(e.value, NotDaggerPreserving)


def test_functor_not_functorial_and_dangling():
    with pytest.raises(NotFunctorial):
        validate_functor(z2(), z2(), {"*": "*"}, {"1": "s", "s": "1"})
    with pytest.raises(DanglingReference):
        validate_functor(z2(), z2(), {"*": "*"}, {"1": "1"})


def test_z2_automorphisms_agree_with_oracle():
    main = enumerate_functors(z2(), z2())
    rep = oracle.enumerate_dagger_functors(z2(), z2())
    assert rep.count == len(main) == 2
    assert sorted(f.mor_map["s"] for f in main) == ["1", "s"]


@pytest.mark.parametrize("a,b", [("ONE", "Z2"), ("Z2", "P2"), ("UNIT_ISO", "Z2"), ("UNIT_ISO", "UNIT_ISO"), ("P2", "REL2")])
def test_enumerate_functors_matches_oracle(a, b):
    from dagfem.fixtures import category

    A, B = category(a), category(b)
    main = sorted((sorted(F.obj_map.items()), sorted(F.mor_map.items())) for F in enumerate_functors(A, B))
    naive = sorted((sorted(i["objects"].items()), sorted(i["morphisms"].items())) for i in oracle.enumerate_dagger_functors(A, B).items)
    assert main == naive


def test_natural_transformations():
    I = identity_functor(z2())
    assert len(enumerate_nats(I, I)) == 2
    a = validate_nat(I, I, {"*": "s"})
    assert nat_vcomp(a, a).components == {"*": "1"}
    assert nat_dagger(a).components == {"*": "s"}


def test_not_natural():
    # the constant functor at 1 and the identity on P2: p is not natural from 1 to p
    P = p2()
    I = identity_functor(P)
    K = validate_functor(P, P, {"*": "*"}, {"1": "1", "p": "1"})
    with pytest.raises(NotNatural):
        validate_nat(K, I, {"*": "1"})
    assert validate_nat(K, I, {"*": "p"}).components == {"*": "p"}


def test_hom_category_z2_z2():
    H = hom_category(z2(), z2())
    assert H.size == (2, 4)
    for k in H.morphisms:
        assert H.dag(H.dag(k)) == k


def test_hom_category_agrees_with_oracle_counts():
    A, D = unit_iso(), z2()
    H = hom_category(A, D)
    fs = oracle.enumerate_dagger_functors(A, D)
    assert len(H.objects) == fs.count
    t = oracle.tab(H)
    assert oracle.naive_category_violations(t.objects, t.mors, t.ident, t.comp, t.dag) == []


def test_whiskering_and_interchange():
    C = z2()
    I = identity_functor(C)
    S = validate_functor(C, C, {"*": "*"}, {"1": "1", "s": "s"})
    a = validate_nat(I, I, {"*": "s"})
    b = validate_nat(S, S, {"*": "s"})
    assert whisker_left(S, a).components == {"*": "s"}
    assert whisker_right(a, S).components == {"*": "s"}
    # (b'·b) ∗ (a'·a) = (b' ∗ a')·(b ∗ a)
    lhs = nat_hcomp(nat_vcomp(b, b), nat_vcomp(a, a))
    rhs = nat_vcomp(nat_hcomp(b, a), nat_hcomp(b, a))
    assert lhs.components == rhs.components


def test_compose_with_identity():
    F = validate_functor(unit_iso(), z2(), {"a": "*", "b": "*"}, {"1a": "1", "1b": "1", "u": "s", "ud": "s"})
    assert compose_functors(identity_functor(z2()), F).same_maps(F)
    assert compose_functors(F, identity_functor(unit_iso())).same_maps(F)
    assert identity_nat(F).components == {"a": "1", "b": "1"}


def test_opposite_of_hom_category_is_isomorphic():
    H = hom_category(unit_iso(), z2())
    assert oracle.iso_search_dagger(opposite(H), H) is not None
