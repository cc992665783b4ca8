"""Acceptance criteria 1-10, each at its stated time limit. One line per
criterion is printed in the terminal summary (see conftest.py); running
this file directly prints the same lines."""

import json
import time

import pytest

from dagfem import oracle
from dagfem.cli import execute
from dagfem.errors import ValidationError
from dagfem.fincat import validate_category
from dagfem.fixtures import CATEGORIES, category, one, z2
from dagfem.kleisli import build_kleisli, check_fem_representability, check_fk_universal
from dagfem.monad import (
    build_fem_category,
    check_frobenius,
    comparison_functor,
    enumerate_algebras,
    enumerate_monads,
    fem_adjunction,
    identity_adjunction,
    identity_monad,
    is_algebra_hom,
    monad_from_adjunction,
    ts_monad,
)
from dagfem.two_cat.completions import (
    build_dfmnd,
    build_fem_completion,
    build_fk_completion,
    check_fully_faithful,
    fem_via_opposite,
    inclusion,
)
from dagfem.two_cat.core import cell_of, sigma_z2, terminal_2category
from dagfem.two_cat.fixture import fixture_2category
from dagfem.two_cat.universal import fem_object_check, universal2_check
from dagfem.lax import check_dagger_lax_limit, constant_lax, enumerate_lax_nats, monad_to_lax, validate_lax_nat
from tables import description, random_tables

RESULTS: dict = {}
SEED = 20261016


def _monad_key(T_mor, mu, eta) -> str:
    return json.dumps([T_mor, mu, eta], sort_keys=True)


def _naive_ok(c) -> bool:
    t = oracle.tab(c)
    return oracle.naive_category_violations(t.objects, t.mors, t.ident, t.comp, t.dag) == []


def criterion(n: int, limit: float | None = None):
    """Run the body, time it and record one result line."""

    def wrap(fn):
        def test():
            t0 = time.perf_counter()
            ok, note = False, ""
            try:
                note = fn() or ""
                ok = True
            except AssertionError as e:
                note = str(e).splitlines()[0] if str(e) else "assertion failed"
                raise
            finally:
                dt = time.perf_counter() - t0
                if limit is not None and dt >= limit:
                    ok = False
                    note = f"took {dt:.1f}s, limit {limit:.0f}s"
                RESULTS[n] = (ok, f"{dt:.2f}s", note)
            assert limit is None or dt < limit, f"criterion {n} took {dt:.1f}s (limit {limit}s)"

        test.__name__ = fn.__name__
        test.__doc__ = fn.__doc__
        return test

    return wrap


def frobenius_monads_on_fixtures():
    return [(n, m) for n in CATEGORIES for m in enumerate_monads(category(n)) if m.frobenius]


@criterion(1, 10)
def test_criterion_1_validator_soundness():
    """validate_category agrees with the naive evaluator on 1,000 seeded tables."""
    tables = random_tables(1000, SEED)
    valid = 0
    for parts in tables:
        assert len(parts[0]) <= 3 and len(parts[1]) <= 8
        try:
            validate_category(description(parts))
            ok = True
        except ValidationError:
            ok = False
        naive = oracle.naive_category_violations(*parts)
        assert ok == (naive == []), f"disagreement on {parts!r}: {naive[:1]}"
        valid += ok
    assert 0 < valid < len(tables)
    return f"{valid} valid, {len(tables) - valid} invalid"


@criterion(2, 120)
def test_criterion_2_frobenius_agreement():
    """check_frobenius matches the oracle's pointwise evaluation flag for flag."""
    total = 0
    for name in ("ONE", "Z2", "P2", "UNIT_ISO", "REL2"):
        C = category(name)
        rep = oracle.enumerate_monads(C)
        naive = {_monad_key(i["T_morphisms"], i["mu"], i["eta"]): f["frobenius"] for i, f in zip(rep.items, rep.flags)}
        main = {
            _monad_key(dict(m.T.mor_map), dict(m.mu.components), dict(m.eta.components)): check_frobenius(m)
            for m in enumerate_monads(C)
        }
        assert main == naive, name
        total += len(main)
    return f"{total} monads"


@criterion(3)
def test_criterion_3_fem_iff_dagger_homomorphism():
    """fem(δ) ⇔ δ† is a homomorphism (D, δ) → (TD, μ_D), on every algebra."""
    checked = 0
    for name, m in frobenius_monads_on_fixtures():
        C, T = m.base, m.T
        rep = oracle.enumerate_algebras(m)
        for i, f in zip(rep.items, rep.flags):
            assert f["fem"] == f["dagger_is_hom"], (name, i)
        for a in enumerate_algebras(m):
            if a.em:
                d = a.carrier
                assert a.fem == is_algebra_hom(m, (d, a.structure), (T.ob(d), m.mu.at(d)), C.dag(a.structure)), (name, a.id)
                checked += 1
    assert checked
    return f"{checked} algebras, 0 exceptions"


@criterion(4, 60)
def test_criterion_4_fem_representability():
    for A in (one(), z2()):
        for m in (identity_monad(z2()), ts_monad()):
            v = check_fem_representability(A, m)
            assert v, v.detail


@criterion(5, 60)
def test_criterion_5_kleisli():
    n = 0
    for name, m in frobenius_monads_on_fixtures():
        kl = build_kleisli(m).kl_cat
        validate_category(kl.describe())
        assert _naive_ok(kl), name
        n += 1
    for m, X in ((ts_monad(), z2()), (identity_monad(z2()), z2()), (identity_monad(one()), one())):
        v = check_fk_universal(m, X)
        assert v, v.detail
    return f"{n} Kleisli categories"


@criterion(6)
def test_criterion_6_generated_monads():
    ms = [m for m in enumerate_monads(z2()) if m.frobenius]
    assert ms
    for m in ms:
        for adj, expected in (
            (identity_adjunction(m.base), identity_monad(m.base)),
            (fem_adjunction(m), m),
            (build_kleisli(m).adj, m),
        ):
            g = monad_from_adjunction(adj)
            assert check_frobenius(g)
            assert g.table_equal(expected)


@criterion(7)
def test_criterion_7_comparison_uniqueness():
    B = fixture_2category(with_kleisli=True)
    fem = build_fem_category(ts_monad())
    v = universal2_check(B.K, B.fem_adj, B.witness)
    assert v.witness == cell_of(B.K, comparison_functor(B.fem.adj, fem))
    v = universal2_check(B.K, B.kl_adj, B.witness)
    assert v.witness == cell_of(B.K, comparison_functor(B.kl.adj, fem))


@criterion(8)
def test_criterion_8_completions():
    for K in (terminal_2category(), sigma_z2()):
        for build in (build_dfmnd, build_fk_completion, build_fem_completion):
            C = build(K)
            assert all(_naive_ok(hc) for hc in C.hom.values())
            assert check_fully_faithful(inclusion(K, C))
        fk = build_fk_completion(K)
        for hc in fk.hom.values():
            assert all(hc.dag(hc.dag(x)) == x for x in hc.morphisms)
        assert build_fem_completion(K) == fem_via_opposite(K)


@criterion(9)
def test_criterion_9_lax_limit():
    B = fixture_2category()
    K, m, w = B.K, B.ts, B.witness
    F = monad_to_lax(m)
    pi = validate_lax_nat(constant_lax(F.source, K, w.E), F, {"*": w.u}, {"1": w.xi})
    v = check_dagger_lax_limit(F, w.E, pi)
    assert v and bool(v) == bool(fem_object_check(K, m, w))
    D = constant_lax(F.source, K, "ONE")
    pis = enumerate_lax_nats(D, F)
    assert pis
    for p in pis:
        bad = check_dagger_lax_limit(F, "ONE", p)
        assert not bad and bad.witness
    return bad.detail


@criterion(10)
def test_criterion_10_determinism():
    for name in CATEGORIES:
        C = category(name)
        a = oracle.enumerate_monads(C, jobs=1).to_json()
        assert a == oracle.enumerate_monads(C, jobs=1).to_json() == oracle.enumerate_monads(C, jobs=4).to_json(), name
        b = oracle.enumerate_dagger_functors(C, C, jobs=1).to_json()
        assert b == oracle.enumerate_dagger_functors(C, C, jobs=4).to_json(), name
    for m in (ts_monad(), identity_monad(category("UNIT_ISO"))):
        assert oracle.enumerate_algebras(m).to_json() == oracle.enumerate_algebras(m).to_json()
    for argv in (
        ["enumerate", "monads", "fixture:REL2"],
        ["enumerate", "functors", "fixture:UNIT_ISO", "fixture:Z2"],
        ["check", "lax-limit", "fixture:TS"],
        ["build", "fem-completion", "fixture:SIGMA_Z2"],
    ):
        one_ = execute(argv).to_json(with_timing=False)
        assert one_ == execute(argv).to_json(with_timing=False)
        assert one_ == execute(argv + ["--jobs", "4"]).to_json(with_timing=False)


def summary_lines() -> list:
    lines = []
    for n in range(1, 11):
        if n not in RESULTS:
            lines.append(f"NOT RUN criterion {n}")
            continue
        ok, dt, note = RESULTS[n]
        lines.append(f"{'PASS' if ok else 'FAIL'} criterion {n} ({dt}){': ' + note if note else ''}")
    return lines


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(summary_lines()))
