import pytest

from dagfem import oracle
from dagfem.errors import (
    BadComposite,
    BadIdentity,
    DaggerNotFunctorial,
    DaggerNotInvolutive,
    DaggerWrongEndpoints,
    DanglingReference,
    MissingComposite,
    NonAssociative,
    UnknownMorphism,
)
from dagfem.fincat import (
    CategoryDescription,
    discrete,
    disjoint_union,
    is_unitary,
    make_category,
    opposite,
    relabel,
    unitaries,
    validate_category,
)
from dagfem.fixtures import CATEGORIES, CORPUS, category, one, p2, unit_iso, z2


def z2_desc(**changes):
    d = dict(
        objects=["*"],
        morphisms={"1": ("*", "*"), "s": ("*", "*")},
        identity={"*": "1"},
        compose={("1", "1"): "1", ("1", "s"): "s", ("s", "1"): "s", ("s", "s"): "1"},
        dagger={"1": "1", "s": "s"},
    )
    d.update(changes)
    return CategoryDescription(**d)


@pytest.mark.parametrize("name", sorted(CATEGORIES))
def test_fixtures_validate_and_agree_with_naive_evaluator(name):
    c = category(name)
    t = oracle.tab(c)
    assert oracle.naive_category_violations(t.objects, t.mors, t.ident, t.comp, t.dag) == []


def test_one_and_z2_valid():
    assert one().size == (1, 1)
    c = validate_category(z2_desc())
    assert c.comp("s", "s") == "1"
    assert c.dag("s") == "s"


def test_z2_with_dagger_s_to_1_is_not_involutive():
    with pytest.raises(DaggerNotInvolutive) as e:
        validate_category(z2_desc(dagger={"1": "1", "s": "1"}))
    assert e.value.witness == ("s", "1")


def test_missing_composite_names_pair():
    comp = {("1", "1"): "1", ("1", "s"): "s", ("s", "1"): "s"}
    with pytest.raises(MissingComposite) as e:
        validate_category(z2_desc(compose=comp))
    assert e.value.witness == ("s", "s")


def test_dangling_reference():
    with pytest.raises(DanglingReference):
        validate_category(z2_desc(identity={"*": "x"}))


def test_bad_identity():
    comp = {("1", "1"): "1", ("1", "s"): "1", ("s", "1"): "s", ("s", "s"): "1"}
    with pytest.raises(BadIdentity):
        validate_category(z2_desc(compose=comp))


def test_non_associative():
    # three-element magma with a unit but a non-associative product
    mors = {m: ("*", "*") for m in ("e", "a", "b")}
    comp = {("e", x): x for x in mors} | {(x, "e"): x for x in mors}
    comp |= {("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "a"}
    with pytest.raises(NonAssociative):
        validate_category(CategoryDescription(["*"], mors, {"*": "e"}, comp, {m: m for m in mors}))


def test_composite_wrong_endpoints():
    c = unit_iso()
    comp = dict(c.compose)
    comp[("u", "1a")] = "1b"
    with pytest.raises(BadComposite):
        validate_category(CategoryDescription(list(c.objects), dict(c.morphisms), dict(c.identity), comp, dict(c.dagger)))


def test_dagger_wrong_endpoints_and_not_functorial():
    c = unit_iso()
    d = dict(c.dagger)
    d["u"] = "u"
    with pytest.raises(DaggerWrongEndpoints):
        validate_category(CategoryDescription(list(c.objects), dict(c.morphisms), dict(c.identity), dict(c.compose), d))
    # left-zero monoid: a∘b = a, so the identity dagger reverses nothing it should
    mors = {m: ("*", "*") for m in ("e", "a", "b")}
    comp = {("e", x): x for x in mors} | {(x, "e"): x for x in mors}
    comp |= {(x, y): x for x in "ab" for y in "ab"}
    with pytest.raises(DaggerNotFunctorial):
        validate_category(CategoryDescription(["*"], mors, {"*": "e"}, comp, {m: m for m in mors}))


def test_empty_category_is_legal():
    c = make_category([], {}, {}, {}, {})
    assert c.size == (0, 0)
    assert opposite(c) == c


def test_opposite():
    assert opposite(one()) == one()
    assert opposite(opposite(z2())) == z2()
    iso = oracle.iso_search_dagger(opposite(unit_iso()), unit_iso())
    assert iso is not None
    F, G = iso
    assert F.obj_map == {"a": "a", "b": "b"}
    assert F.mor_map["u"] == "ud" and F.mor_map["ud"] == "u"


@pytest.mark.parametrize("name", CORPUS)
def test_opposite_is_involution(name):
    c = category(name)
    assert opposite(opposite(c)) == c


def test_is_unitary():
    assert is_unitary(z2(), "s")
    assert is_unitary(z2(), "1")
    assert not is_unitary(p2(), "p")
    with pytest.raises(UnknownMorphism):
        is_unitary(z2(), "q")


@pytest.mark.parametrize("name", sorted(CATEGORIES))
def test_unitaries_closed(name):
    c = category(name)
    us = set(unitaries(c))
    assert set(c.identity.values()) <= us
    for f in us:
        assert c.dag(f) in us
    for (g, f), gf in c.compose.items():
        if g in us and f in us:
            assert gf in us


def test_small_constructions():
    d = discrete(["a", "b"])
    assert d.size == (2, 2)
    u = disjoint_union({"L": z2(), "R": one()})
    assert u.size == (2, 3)
    r = relabel(z2(), {"*": "x"}, {"1": "e", "s": "t"})
    assert r.comp("t", "t") == "e"
