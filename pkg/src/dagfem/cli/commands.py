"""One handler per subcommand. A handler fills ``report`` in place and
returns nothing; exceptions are mapped to verdicts by the dispatcher."""

from __future__ import annotations

import json
from pathlib import Path

from .. import oracle
from ..errors import Verdict
from ..functor import enumerate_functors
from ..kleisli import build_kleisli, check_fem_representability, check_fk_universal
from ..lax import check_dagger_lax_limit, constant_lax, enumerate_lax_nats, lax_to_monad, validate_lax_nat
from ..monad import (
    build_fem_category,
    comparison_functor,
    enumerate_algebras,
    enumerate_monads,
    frobenius_witness,
    is_em_algebra,
    is_fem_algebra,
    is_monadic,
    monad_from_adjunction,
)
from ..two_cat.completions import build_dfmnd, build_fem_completion, build_fk_completion
from ..two_cat.universal import (
    eta_commutation_check,
    fem_object_check,
    fem_pairs_correspondence,
    find_fem_witness,
    generated_monad,
    universal2_check,
)
from .inputs import Loader, category_doc, functor_doc, monad_doc, two_category_doc
from .report import FAIL, Report, witness


def _verdict(report: Report, check: str, v: Verdict) -> None:
    if not v:
        report.verdict = FAIL
        report.witnesses.append(witness(check, v.detail, v.witness))


def _agree(report: Report, check: str, main: list, naive: list) -> None:
    """Main-path and oracle listings must coincide as sets of items."""
    key = lambda x: json.dumps(x, sort_keys=True)
    a, b = sorted(map(key, main)), sorted(map(key, naive))
    if a != b:
        only = sorted(set(a) ^ set(b))
        report.verdict = FAIL
        report.witnesses.append(witness(check, "main path and oracle disagree", [json.loads(only[0])]))


# -- validate -----------------------------------------------------------------------------


def validate_category(args, ld: Loader, report: Report) -> None:
    c = ld.category(args.input)
    report.result = {"objects": list(c.objects), "morphisms": len(c.morphisms)}


def validate_functor(args, ld: Loader, report: Report) -> None:
    report.result = functor_doc(ld.functor(args.input))


def validate_monad(args, ld: Loader, report: Report) -> None:
    report.result = monad_doc(ld.monad(args.input))


def validate_2category(args, ld: Loader, report: Report) -> None:
    K = ld.two_category(args.input)
    report.result = {"size": list(K.size), "cells0": list(K.cells0)}


def validate_laxfunctor(args, ld: Loader, report: Report) -> None:
    L = ld.lax_functor(args.input)
    report.result = {
        "objects": dict(L.obj_map),
        "map1": dict(L.map1),
        "gamma": [[f, g, x] for (f, g), x in sorted(L.gamma.items())],
        "delta": dict(L.delta),
    }


# -- enumerate ------------------------------------------------------------------------------


def _golden_check(args, report: Report, rep: oracle.EnumerationReport) -> None:
    ref = args.input
    if not (isinstance(ref, str) and ref.startswith("fixture:")):
        return
    name = ref[len("fixture:"):]
    if name not in oracle.GOLDEN_FILES:
        return
    p = Path(args.golden_dir) / oracle.GOLDEN_FILES[name]
    if not p.exists():
        return
    if p.read_text(encoding="utf-8") != rep.to_json():
        report.verdict = FAIL
        report.witnesses.append(witness("golden", "oracle report differs from the golden file", [str(p)]))


def enumerate_monads_cmd(args, ld: Loader, report: Report) -> None:
    c = ld.category(args.input)
    rep = oracle.enumerate_monads(c, args.max_search, args.jobs)
    main = [
        {"T_objects": dict(m.T.obj_map), "T_morphisms": dict(m.T.mor_map), "mu": dict(m.mu.components),
         "eta": dict(m.eta.components), "frobenius": m.frobenius}
        for m in enumerate_monads(c)
    ]
    naive = [dict(i, frobenius=f["frobenius"]) for i, f in zip(rep.items, rep.flags)]
    _agree(report, "oracle", main, naive)
    _golden_check(args, report, rep)
    report.result = rep.to_dict()


def enumerate_functors_cmd(args, ld: Loader, report: Report) -> None:
    A, B = ld.category(args.source), ld.category(args.target)
    rep = oracle.enumerate_dagger_functors(A, B, args.max_search, args.jobs)
    main = [functor_doc(F) for F in enumerate_functors(A, B, cap=args.max_search)]
    _agree(report, "oracle", main, rep.items)
    report.result = rep.to_dict()


def enumerate_algebras_cmd(args, ld: Loader, report: Report) -> None:
    m = ld.monad(args.input)
    rep = oracle.enumerate_algebras(m, args.max_search)
    main = [{"carrier": a.carrier, "structure": a.structure, "fem": a.fem} for a in enumerate_algebras(m) if a.em]
    naive = [dict(i, fem=f["fem"]) for i, f in zip(rep.items, rep.flags)]
    _agree(report, "oracle", main, naive)
    report.result = rep.to_dict()


# -- build --------------------------------------------------------------------------------------


def build_fem(args, ld: Loader, report: Report) -> None:
    r = build_fem_category(ld.monad(args.input))
    report.result = {"category": category_doc(r.fem_cat), "algebras": {k: list(v) for k, v in r.fem_cat.payload.items() if k in r.fem_cat.objects}}


def build_kleisli_cmd(args, ld: Loader, report: Report) -> None:
    r = build_kleisli(ld.monad(args.input))
    report.result = {"category": category_doc(r.kl_cat)}


def _build2(fn):
    def handler(args, ld: Loader, report: Report) -> None:
        C = fn(ld.two_category(args.input))
        report.result = {"size": list(C.size), "two_category": two_category_doc(C)}

    return handler


# -- check --------------------------------------------------------------------------------------


def check_frobenius(args, ld: Loader, report: Report) -> None:
    m = ld.monad(args.input)
    v = frobenius_witness(m)
    t = oracle.tab(m.base)
    naive = oracle.frobenius_pointwise(t, dict(m.T.obj_map), dict(m.T.mor_map), dict(m.mu.components))
    if bool(v) != naive:
        report.verdict = FAIL
        report.witnesses.append(witness("oracle", "main path and oracle disagree on the Frobenius law", [bool(v), naive]))
    _verdict(report, "frobenius", v)
    report.result = {"frobenius": bool(v)}


def check_fem_algebra(args, ld: Loader, report: Report) -> None:
    m = ld.monad(args.input)
    em = is_em_algebra(m, args.carrier, args.structure)
    fem = em and is_fem_algebra(m, args.carrier, args.structure)
    if not em:
        _verdict(report, "em-algebra", Verdict(False, (args.carrier, args.structure), "not an EM algebra"))
    elif not fem:
        _verdict(report, "fem-algebra", Verdict(False, (args.carrier, args.structure), "Frobenius law fails"))
    report.result = {"em": em, "fem": fem}


def check_th1(args, ld: Loader, report: Report) -> None:
    v = check_fem_representability(ld.category(args.arg_category), ld.monad(args.monad))
    _verdict(report, "fem-representability", v)
    report.result = {"holds": bool(v)}


def check_fk_universal_cmd(args, ld: Loader, report: Report) -> None:
    v = check_fk_universal(ld.monad(args.monad), ld.category(args.arg_category))
    _verdict(report, "fk-universal", v)
    report.result = {"holds": bool(v)}


def check_comparison(args, ld: Loader, report: Report) -> None:
    adj = ld.adjunction(args.input)
    N = comparison_functor(adj, build_fem_category(monad_from_adjunction(adj)))
    report.result = {"comparison": functor_doc(N)}


def check_monadic(args, ld: Loader, report: Report) -> None:
    adj = ld.adjunction(args.input)
    v = is_monadic(adj, build_fem_category(monad_from_adjunction(adj)))
    _verdict(report, "monadic", v)
    report.result = {"monadic": bool(v)}


def _witness_for(ld: Loader, ref, m):
    if ref is not None:
        return ld.witness(ref, m)
    return find_fem_witness(m.host, m)


def check_fem_object(args, ld: Loader, report: Report) -> None:
    m = ld.monad2(args.input)
    w = _witness_for(ld, args.witness, m)
    if w is None:
        _verdict(report, "fem-object", Verdict(False, (m.id,), "no FEM object witness exists"))
        return
    v = fem_object_check(m.host, m, w)
    _verdict(report, "fem-object", v)
    report.result = {"E": w.E, "u": w.u, "xi": w.xi, "holds": bool(v)}


def check_universal2(args, ld: Loader, report: Report) -> None:
    adj = ld.adjunction2(args.input)
    m = generated_monad(adj)
    w = _witness_for(ld, args.witness, m)
    if w is None:
        _verdict(report, "universal2", Verdict(False, (m.id,), "no FEM object witness exists"))
        return
    v = universal2_check(adj.host, adj, w)
    report.result = {"n": v.witness, "E": w.E}


def check_eta_commutation(args, ld: Loader, report: Report) -> None:
    m = ld.monad2(args.input)
    ok = eta_commutation_check(m)
    _verdict(report, "eta-commutation", Verdict(ok, (m.t, m.eta), "" if ok else "tη != ηt"))
    report.result = {"commutes": ok}


def check_pairs(args, ld: Loader, report: Report) -> None:
    mt, ms = ld.monad2(args.source), ld.monad2(args.target)
    wt, ws = _witness_for(ld, None, mt), _witness_for(ld, None, ms)
    if wt is None or ws is None:
        _verdict(report, "pairs", Verdict(False, (mt.id, ms.id), "a monad has no FEM object witness"))
        return
    v = fem_pairs_correspondence(mt.host, mt, ms, wt, ws)
    _verdict(report, "pairs", v)
    report.result = {"detail": v.detail}


def check_lax_limit(args, ld: Loader, report: Report) -> None:
    """With no ``--limit``, the FEM object of the corresponding monad is
    tried with its (u, ξ); with no ``--pi``, every π: Δ_L → F is tried."""
    F = ld.lax_functor(args.input)
    K, S = F.target, F.source
    (a,), (i,) = S.cells0, S.cells1()
    limit, pis = args.limit, None
    if limit is None:
        w = find_fem_witness(K, lax_to_monad(F))
        if w is None:
            _verdict(report, "lax-limit", Verdict(False, (F.obj_map[a],), "no limit given and no FEM object found"))
            return
        limit, pis = w.E, [({a: w.u}, {i: w.xi})]
    if args.pi is not None:
        doc, _ = ld.document(args.pi)
        pis = [(doc["components"], doc["tau"])]
    D = constant_lax(S, K, limit)
    if pis is None:
        pis = [(n.components, n.tau) for n in enumerate_lax_nats(D, F, args.max_search)]
    if not pis:
        _verdict(report, "lax-limit", Verdict(False, (limit,), "no dagger lax-natural Δ_L → F"))
        return
    first = None
    for comps, tau in pis:
        v = check_dagger_lax_limit(F, limit, validate_lax_nat(D, F, comps, tau))
        if v:
            report.result = {"limit": limit, "pi": {"components": dict(comps), "tau": dict(tau)}}
            return
        first = first or v
    _verdict(report, "lax-limit", first)
    report.result = {"limit": limit, "candidates": len(pis)}


# -- oracle -------------------------------------------------------------------------------------


def oracle_regen_golden(args, ld: Loader, report: Report) -> None:
    d = Path(args.golden_dir)
    if args.check:
        drift = []
        for name, fname in sorted(oracle.GOLDEN_FILES.items()):
            p = d / fname
            fresh = oracle.golden_report(name, args.max_search, args.jobs).to_json()
            if not p.exists() or p.read_text(encoding="utf-8") != fresh:
                drift.append(str(p))
        if drift:
            _verdict(report, "golden", Verdict(False, tuple(drift), "golden files out of date"))
        report.result = {"checked": sorted(oracle.GOLDEN_FILES.values())}
        return
    written = oracle.write_golden(d, args.max_search, args.jobs)
    report.result = {"written": [p.name for p in written]}
