import pytest

from dagfem import oracle
from dagfem.errors import SearchSpaceTooLarge
from dagfem.fixtures import CATEGORIES, category, p2, z2
from dagfem.functor import identity_functor
from dagfem.monad import build_fem_category, check_frobenius, enumerate_monads, identity_monad, ts_monad
from dagfem.two_cat.core import sigma_z2, terminal_2category
from dagfem.two_cat.monads import enumerate_frobenius_monads


@pytest.mark.parametrize("name,count", [("ONE", 1), ("Z2", 2), ("P2", 1), ("UNIT_ISO", 4), ("REL2", 2), ("P2_ZERO", 2)])
def test_monad_counts(name, count):
    rep = oracle.enumerate_monads(category(name))
    assert rep.count == count
    assert all(f["frobenius"] for f in rep.flags)


def test_z2_monads():
    rep = oracle.enumerate_monads(z2())
    assert sorted((i["mu"]["*"], i["eta"]["*"]) for i in rep.items) == [("1", "1"), ("s", "s")]


def test_frobenius_flags_match_main_path():
    for name in CATEGORIES:
        main = [check_frobenius(m) for m in enumerate_monads(category(name))]
        assert sorted(main) == sorted(f["frobenius"] for f in oracle.enumerate_monads(category(name)).flags)


def test_golden_rel2_is_current():
    rep = oracle.golden_report("REL2")
    text = (oracle.GOLDEN_DIR / oracle.GOLDEN_FILES["REL2"]).read_text(encoding="utf-8")
    assert text == rep.to_json()
    assert oracle.load_golden("REL2")["count"] == rep.count


def test_write_golden_roundtrip(tmp_path):
    (p,) = oracle.write_golden(tmp_path)
    assert p.read_text(encoding="utf-8") == oracle.golden_report("REL2").to_json()


@pytest.mark.parametrize("name", ["Z2", "UNIT_ISO", "REL2", "P2_ZERO"])
def test_serial_and_parallel_reports_identical(name):
    c = category(name)
    assert oracle.enumerate_monads(c, jobs=1).to_json() == oracle.enumerate_monads(c, jobs=3).to_json()
    assert oracle.enumerate_dagger_functors(c, c, jobs=1).to_json() == oracle.enumerate_dagger_functors(c, c, jobs=3).to_json()


def test_reruns_identical():
    c = category("REL2")
    assert oracle.enumerate_monads(c).to_json() == oracle.enumerate_monads(c).to_json()


def test_cap_is_honoured():
    with pytest.raises(SearchSpaceTooLarge):
        oracle.enumerate_monads(category("REL2"), cap=100)
    with pytest.raises(SearchSpaceTooLarge):
        oracle.enumerate_dagger_functors(category("REL2"), category("REL2"), cap=10)


def test_functor_and_nat_enumeration():
    assert oracle.enumerate_dagger_functors(z2(), z2()).count == 2
    I = identity_functor(z2())
    assert oracle.enumerate_nat(I, I).count == 2


def test_algebras_of_ts():
    rep = oracle.enumerate_algebras(ts_monad())
    assert rep.count == 1 and rep.candidates == 2
    assert rep.items[0]["structure"] == "s"
    assert rep.flags[0]["fem"] and rep.flags[0]["dagger_is_hom"]


def test_no_em_algebra_that_is_not_fem_on_fixtures():
    assert oracle.find_em_not_fem({n: category(n) for n in CATEGORIES}) == []


def test_iso_search():
    F, G = oracle.iso_search_dagger(z2(), z2())
    assert F.mor_map == {"1": "1", "s": "s"}
    assert oracle.iso_search_dagger(z2(), p2()) is None
    assert oracle.iso_search_dagger(build_fem_category(ts_monad()).fem_cat, z2()) is not None


def test_monads2_agree_with_main_path():
    for K in (terminal_2category(), sigma_z2()):
        rep = oracle.enumerate_monads2(K)
        main = enumerate_frobenius_monads(K)
        assert sorted((i["D"], i["t"], i["mu"], i["eta"]) for i in rep.items) == sorted(m.table() for m in main)
        assert all(f["frobenius"] == f["middle"] for f in rep.flags)


def test_identity_monad_morphisms_are_the_1_cells():
    K = sigma_z2()
    m = {"D": "*", "t": "t0", "mu": "1", "eta": "1"}
    rep = oracle.enumerate_monad_morphisms(m, m, K)
    assert sorted((i["f"], i["sigma"]) for i in rep.items) == [("t0", "1")]


def test_naive_evaluator_reports_violations():
    t = oracle.tab(z2())
    dag = dict(t.dag)
    dag["s"] = "1"
    assert oracle.naive_category_violations(t.objects, t.mors, t.ident, t.comp, dag)


def test_report_shape():
    d = oracle.enumerate_monads(category("ONE")).to_dict()
    assert list(d) == ["space", "candidates", "count", "items"]
    assert oracle.enumerate_monads(category("ONE")).to_json().endswith("}\n")


def test_identity_monad_flags():
    m = identity_monad(category("UNIT_ISO"))
    rep = oracle.enumerate_algebras(m)
    assert all(f["fem"] and f["dagger_is_hom"] for f in rep.flags)
