import pytest

from dagfem import oracle
from dagfem.errors import NotFrobenius
from dagfem.fixtures import category, one, p2_zero, unit_iso, z2
from dagfem.kleisli import build_kleisli, check_fem_representability, check_fk_universal
from dagfem.monad import (
    FrobeniusMonad,
    build_fem_category,
    comparison_functor,
    enumerate_monads,
    identity_monad,
    monad_from_adjunction,
    ts_monad,
)


def _frobenius_monads():
    out = [("TS", ts_monad())]
    for name in ("UNIT_ISO", "P2_ZERO"):
        out += [(f"{name}#{i}", m) for i, m in enumerate(enumerate_monads(category(name))) if m.frobenius]
    return out


MONADS = _frobenius_monads()


@pytest.mark.parametrize("label,m", MONADS, ids=[l for l, _ in MONADS])
def test_kleisli_is_a_dagger_category(label, m):
    kl = build_kleisli(m).kl_cat
    t = oracle.tab(kl)
    assert oracle.naive_category_violations(t.objects, t.mors, t.ident, t.comp, t.dag) == []


@pytest.mark.parametrize("label,m", MONADS, ids=[l for l, _ in MONADS])
def test_kleisli_adjunction_generates_the_monad(label, m):
    assert monad_from_adjunction(build_kleisli(m).adj).table_equal(m)


def test_ts_kleisli_is_z2():
    kl = build_kleisli(ts_monad()).kl_cat
    assert kl.size == (1, 2)
    assert oracle.iso_search_dagger(kl, z2()) is not None


def test_identity_monad_kleisli_is_the_base():
    kl = build_kleisli(identity_monad(unit_iso())).kl_cat
    assert oracle.iso_search_dagger(kl, unit_iso()) is not None


def test_kleisli_needs_frobenius():
    m = ts_monad()
    with pytest.raises(NotFrobenius):
        build_kleisli(FrobeniusMonad(m.base, m.T, m.mu, m.eta, False))


def test_kleisli_comparison_is_fully_faithful():
    for _, m in MONADS:
        fem = build_fem_category(m)
        N = comparison_functor(build_kleisli(m).adj, fem)
        K, E = N.source, N.target
        for a in K.objects:
            for b in K.objects:
                imgs = [N.mor(f) for f in K.hom(a, b)]
                assert sorted(imgs) == sorted(E.hom(N.ob(a), N.ob(b)))


@pytest.mark.parametrize("X", ["ONE", "Z2", "P2"])
def test_fk_universal_property(X):
    v = check_fk_universal(ts_monad(), category(X))
    assert v, v.detail


@pytest.mark.parametrize("A", ["ONE", "Z2", "UNIT_ISO"])
def test_fem_representability(A):
    v = check_fem_representability(category(A), ts_monad())
    assert v, v.detail


def test_fem_representability_non_trivial_monad():
    ms = [m for m in enumerate_monads(p2_zero()) if m.frobenius]
    for m in ms:
        assert check_fem_representability(one(), m)
        assert check_fk_universal(m, one())
