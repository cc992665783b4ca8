"""JSON ingestion and emission.

A reference to a structure is one of: an inline JSON object, a string
holding inline JSON, ``fixture:NAME``, or a path to a JSON file (relative
paths inside a file resolve against that file's directory). Every file or
inline document read is recorded with its sha256 for the report.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

from ..fincat import CategoryDescription, FinDaggerCategory, validate_category
from ..fixtures import CATEGORIES
from ..functor import DaggerFunctor, NatTrans, compose_functors, identity_functor, validate_functor
from ..kleisli import build_kleisli
from ..lax import DaggerLaxFunctor, monad_to_lax, validate_lax_functor
from ..monad import (
    Adjunction,
    FrobeniusMonad,
    fem_adjunction,
    identity_adjunction,
    identity_monad,
    make_monad,
    non_monadic_adjunction,
    ts_monad,
    validate_adjunction,
)
from ..two_cat.core import (
    FinDagger2Category,
    locally_discrete,
    make_2category,
    sigma_z2,
    terminal_2category,
)
from ..two_cat.fixture import fixture_2category
from ..two_cat.monads import Monad2, validate_monad2
from ..two_cat.universal import Adjunction2, FEMObjectWitness, validate_adjunction2


class InputError(Exception):
    """Malformed or unreadable input document."""


class Loader:
    def __init__(self):
        self.inputs: list = []

    def _record(self, path: str, data: bytes) -> None:
        entry = {"path": path, "sha256": hashlib.sha256(data).hexdigest()}
        if entry not in self.inputs:
            self.inputs.append(entry)

    def document(self, ref: Any, base: Path | None = None) -> tuple:
        """(document or fixture name, directory for nested references)."""
        if isinstance(ref, dict):
            return ref, base
        if not isinstance(ref, str):
            raise InputError(f"cannot read a reference of type {type(ref).__name__}")
        if ref.startswith("fixture:"):
            self._record(ref, ref.encode())
            return ref[len("fixture:"):], base
        if ref.lstrip().startswith("{"):
            self._record("<inline>", ref.encode())
            return _parse(ref, "<inline>"), base
        p = Path(ref)
        if base is not None and not p.is_absolute():
            p = base / p
        try:
            data = p.read_bytes()
        except OSError as e:
            raise InputError(f"cannot read {p}: {e.strerror}") from e
        self._record(str(p), data)
        return _parse(data.decode("utf-8"), str(p)), p.parent

    # -- categories and functors
    def category(self, ref, base=None) -> FinDaggerCategory:
        doc, base = self.document(ref, base)
        if isinstance(doc, str):
            if doc not in CATEGORIES:
                raise InputError(f"unknown category fixture {doc}; known: {', '.join(sorted(CATEGORIES))}")
            return CATEGORIES[doc]()
        return validate_category(category_description(doc))

    def functor(self, ref, base=None) -> DaggerFunctor:
        doc, base = self.document(ref, base)
        if isinstance(doc, str):
            if doc.startswith("ID_"):
                return identity_functor(self.category("fixture:" + doc[3:]))
            raise InputError(f"unknown functor fixture {doc}")
        A = self.category(_get(doc, "source"), base)
        B = self.category(_get(doc, "target"), base)
        return validate_functor(A, B, _get(doc, "objects"), _get(doc, "morphisms"))

    def monad(self, ref, base=None) -> FrobeniusMonad:
        doc, base = self.document(ref, base)
        if isinstance(doc, str):
            if doc == "TS":
                return ts_monad()
            if doc.startswith("ID_"):
                return identity_monad(self.category("fixture:" + doc[3:]))
            raise InputError(f"unknown monad fixture {doc}; known: TS, ID_<category>")
        C = self.category(_get(doc, "category"), base)
        T = _get(doc, "endofunctor")
        if "morphisms" in T:
            return make_monad(C, T["morphisms"], _get(doc, "mu"), _get(doc, "eta"), T.get("objects"))
        return make_monad(C, T, _get(doc, "mu"), _get(doc, "eta"))

    def adjunction(self, ref, base=None) -> Adjunction:
        doc, base = self.document(ref, base)
        if isinstance(doc, str):
            if doc == "FEM_TS":
                return fem_adjunction(ts_monad())
            if doc == "KL_TS":
                return build_kleisli(ts_monad()).adj
            if doc == "NON_MONADIC":
                return non_monadic_adjunction()
            if doc.startswith("ID_"):
                return identity_adjunction(self.category("fixture:" + doc[3:]))
            raise InputError(f"unknown adjunction fixture {doc}; known: FEM_TS, KL_TS, NON_MONADIC, ID_<category>")
        F = self.functor(_get(doc, "F"), base)
        U = self.functor(_get(doc, "U"), base)
        unit = NatTrans(identity_functor(F.source), compose_functors(U, F), _get(doc, "unit"))
        counit = NatTrans(compose_functors(F, U), identity_functor(F.target), _get(doc, "counit"))
        return validate_adjunction(F, U, unit, counit)

    # -- 2-level structures
    def two_category(self, ref, base=None) -> FinDagger2Category:
        doc, base = self.document(ref, base)
        if isinstance(doc, str):
            return _fixture_2cat(doc)
        homs = {}
        for h in _get(doc, "homs"):
            homs[(h["src"], h["tgt"])] = category_description(h["category"]) if isinstance(h["category"], dict) else self.category(h["category"], base)
        return make_2category(
            _get(doc, "cells0"),
            homs,
            _get(doc, "id1"),
            {(g, f): gf for g, f, gf in _get(doc, "comp1")},
            {(g, x): gx for g, x, gx in _get(doc, "lwhisk")},
            {(x, f): xf for x, f, xf in _get(doc, "rwhisk")},
        )

    def monad2(self, ref, base=None) -> Monad2:
        doc, base = self.document(ref, base)
        if isinstance(doc, str):
            if doc == "TS":
                return fixture_2category().ts
            if doc == "TS_SIGMA":
                return validate_monad2(sigma_z2(), "*", "t0", "s", "s")
            raise InputError(f"unknown 2-monad fixture {doc}; known: TS, TS_SIGMA")
        K = self.two_category(_get(doc, "host"), base)
        return validate_monad2(K, _get(doc, "D"), _get(doc, "t"), _get(doc, "mu"), _get(doc, "eta"))

    def witness(self, ref, m: Monad2, base=None) -> FEMObjectWitness:
        doc, base = self.document(ref, base)
        if isinstance(doc, str):
            if doc == "FEM_TS":
                return fixture_2category().witness
            raise InputError(f"unknown witness fixture {doc}; known: FEM_TS")
        return FEMObjectWitness(m, _get(doc, "E"), _get(doc, "u"), _get(doc, "xi"), _get(doc, "f_t"), _get(doc, "eps_t"))

    def adjunction2(self, ref, base=None) -> Adjunction2:
        doc, base = self.document(ref, base)
        if isinstance(doc, str):
            B = fixture_2category(with_kleisli=True)
            if doc == "FEM_TS":
                return B.fem_adj
            if doc == "KL_TS":
                return B.kl_adj
            raise InputError(f"unknown 2-adjunction fixture {doc}; known: FEM_TS, KL_TS")
        K = self.two_category(_get(doc, "host"), base)
        return validate_adjunction2(K, *(_get(doc, k) for k in ("A", "D", "f", "u", "eta", "eps")))

    def lax_functor(self, ref, base=None) -> DaggerLaxFunctor:
        doc, base = self.document(ref, base)
        if isinstance(doc, str):
            if doc == "TS":
                return monad_to_lax(fixture_2category().ts)
            if doc == "TS_SIGMA":
                return monad_to_lax(self.monad2("fixture:TS_SIGMA"))
            raise InputError(f"unknown lax functor fixture {doc}; known: TS, TS_SIGMA")
        S = self.two_category(_get(doc, "source"), base)
        T = self.two_category(_get(doc, "target"), base)
        return validate_lax_functor(
            S, T, _get(doc, "objects"), _get(doc, "map1"), _get(doc, "map2"),
            {(f, g): x for f, g, x in _get(doc, "gamma")}, _get(doc, "delta"),
        )


def _fixture_2cat(name: str) -> FinDagger2Category:
    if name == "SIGMA_Z2":
        return sigma_z2()
    if name == "TERMINAL":
        return terminal_2category()
    if name == "FIXTURE":
        return fixture_2category().K
    if name == "FIXTURE_KL":
        return fixture_2category(with_kleisli=True).K
    if name.startswith("LD_") and name[3:] in CATEGORIES:
        return locally_discrete(CATEGORIES[name[3:]]())
    raise InputError(f"unknown 2-category fixture {name}; known: SIGMA_Z2, TERMINAL, FIXTURE, FIXTURE_KL, LD_<category>")


def _parse(text: str, where: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{where}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from e


def _get(doc: dict, key: str) -> Any:
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"document is missing the field {key!r}")
    return doc[key]


def category_description(doc: dict) -> CategoryDescription:
    try:
        mors = {m["id"]: (m["src"], m["tgt"]) for m in doc["morphisms"]}
        comp = {}
        for entry in doc["composition"]:
            g, f, gf = entry
            comp[(g, f)] = gf
        return CategoryDescription(list(doc["objects"]), mors, dict(doc["identities"]), comp, dict(doc["dagger"]))
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"malformed category document: {e!r}") from e


# -- emission ---------------------------------------------------------------------------------


def category_doc(c: FinDaggerCategory) -> dict:
    return {
        "objects": list(c.objects),
        "morphisms": [{"id": m, "src": c.morphisms[m][0], "tgt": c.morphisms[m][1]} for m in c.mor_ids()],
        "identities": dict(c.identity),
        "composition": [[g, f, gf] for (g, f), gf in sorted(c.compose.items())],
        "dagger": dict(c.dagger),
    }


def functor_doc(F: DaggerFunctor) -> dict:
    return {"objects": dict(F.obj_map), "morphisms": dict(F.mor_map)}


def two_category_doc(K: FinDagger2Category) -> dict:
    return {
        "cells0": list(K.cells0),
        "homs": [{"src": a, "tgt": b, "category": category_doc(c)} for (a, b), c in sorted(K.hom.items())],
        "id1": dict(K.id1),
        "comp1": [[g, f, gf] for (g, f), gf in sorted(K.comp1.items())],
        "lwhisk": [[g, x, gx] for (g, x), gx in sorted(K.lwhisk.items())],
        "rwhisk": [[x, f, xf] for (x, f), xf in sorted(K.rwhisk.items())],
    }


def monad_doc(m: FrobeniusMonad) -> dict:
    return {
        "endofunctor": functor_doc(m.T),
        "mu": dict(m.mu.components),
        "eta": dict(m.eta.components),
        "frobenius": m.frobenius,
    }


def jsonable(x: Any) -> Any:
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    if hasattr(x, "key"):
        return x.key
    if hasattr(x, "id"):
        return x.id
    return repr(x)
