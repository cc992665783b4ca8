from __future__ import annotations

import argparse
import sys
import time

from .. import oracle
from ..errors import MathCheckFailure, SearchSpaceTooLarge, ValidationError
from ..two_cat.completions import build_dfmnd, build_fem_completion, build_fk_completion
from . import commands as cmd
from .inputs import InputError, Loader
from .report import ERROR, FAIL, Report, emit, witness


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--max-search", type=int, default=oracle.DEFAULT_CAP, metavar="N",
                   help="cap on candidates examined by exhaustive searches")
    p.add_argument("--golden-dir", default=str(oracle.GOLDEN_DIR), metavar="PATH",
                   help="directory holding golden enumeration reports")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for oracle searches")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="dagfem", description="Finite dagger categories, Frobenius monads and their constructions.")
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def leaf(sub, name, handler, help_, *positional):
        p = sub.add_parser(name, parents=[common], help=help_)
        for arg in positional:
            p.add_argument(arg)
        p.set_defaults(handler=handler, command=f"{sub.group_name} {name}")
        return p

    def group(name, help_):
        sub = groups.add_parser(name, help=help_).add_subparsers(dest="what", required=True, parser_class=_Parser)
        sub.group_name = name
        return sub

    g = group("validate", "validate an input document")
    leaf(g, "category", cmd.validate_category, "dagger category axioms", "input")
    leaf(g, "functor", cmd.validate_functor, "dagger functor", "input")
    leaf(g, "monad", cmd.validate_monad, "monad laws (Frobenius law reported, not required)", "input")
    leaf(g, "2category", cmd.validate_2category, "dagger 2-category axioms", "input")
    leaf(g, "laxfunctor", cmd.validate_laxfunctor, "dagger lax functor axioms", "input")

    g = group("enumerate", "exhaustive enumeration, cross-checked against the oracle")
    leaf(g, "monads", cmd.enumerate_monads_cmd, "all monads on a category", "input")
    leaf(g, "functors", cmd.enumerate_functors_cmd, "all dagger functors A → B", "source", "target")
    leaf(g, "algebras", cmd.enumerate_algebras_cmd, "EM algebras of a monad with FEM flags", "input")

    g = group("build", "construct a category or 2-category")
    leaf(g, "fem", cmd.build_fem, "FEM category of a Frobenius monad", "input")
    leaf(g, "kleisli", cmd.build_kleisli_cmd, "dagger Kleisli category", "input")
    leaf(g, "dfmnd", cmd._build2(build_dfmnd), "DFMnd completion", "input")
    leaf(g, "fk-completion", cmd._build2(build_fk_completion), "FK completion", "input")
    leaf(g, "fem-completion", cmd._build2(build_fem_completion), "FEM completion", "input")

    g = group("check", "verify a law or universal property")
    leaf(g, "frobenius", cmd.check_frobenius, "Frobenius law of a monad", "input")
    p = leaf(g, "fem-algebra", cmd.check_fem_algebra, "is (D, δ) a FEM algebra", "input")
    p.add_argument("--carrier", required=True)
    p.add_argument("--structure", required=True)
    p = leaf(g, "th1", cmd.check_th1, "FEM(T) represents FEM-algebras in DagCat(A, -)")
    p.add_argument("--arg-category", required=True)
    p.add_argument("--monad", required=True)
    p = leaf(g, "fk-universal", cmd.check_fk_universal_cmd, "Kleisli category is the FK object")
    p.add_argument("--arg-category", required=True)
    p.add_argument("--monad", required=True)
    leaf(g, "comparison", cmd.check_comparison, "unique comparison functor of an adjunction", "input")
    leaf(g, "monadic", cmd.check_monadic, "comparison functor is a dagger equivalence", "input")
    p = leaf(g, "fem-object", cmd.check_fem_object, "FEM object of a monad in a 2-category", "input")
    p.add_argument("--witness", help="FEM object witness (searched for when omitted)")
    p = leaf(g, "universal2", cmd.check_universal2, "unique comparison 1-cell of a 2-adjunction", "input")
    p.add_argument("--witness", help="FEM object witness (searched for when omitted)")
    leaf(g, "eta-commutation", cmd.check_eta_commutation, "tη = ηt", "input")
    p = leaf(g, "pairs", cmd.check_pairs, "monad morphisms versus pairs (f, f̄)")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p = leaf(g, "lax-limit", cmd.check_lax_limit, "dagger lax-limit of a lax functor from 1", "input")
    p.add_argument("--limit", help="0-cell L (default: the FEM object of the monad)")
    p.add_argument("--pi", help="lax-natural {components, tau} Δ_L → F (default: try all)")

    g = group("oracle", "oracle maintenance")
    p = leaf(g, "regen-golden", cmd.oracle_regen_golden, "rewrite golden enumeration reports")
    p.add_argument("--check", action="store_true", help="compare instead of writing; fail on drift")
    return parser


def execute(argv) -> Report:
    args = build_parser().parse_args(argv)
    ld = Loader()
    report = Report(args.command)
    t0 = time.perf_counter()
    try:
        args.handler(args, ld, report)
    except (InputError, ValidationError, SearchSpaceTooLarge) as e:
        report.verdict = ERROR
        kind = getattr(e, "kind", "InputError")
        report.witnesses.append(witness(kind, str(e), getattr(e, "witness", None)))
    except MathCheckFailure as e:
        report.verdict = FAIL
        report.witnesses.append(witness(e.kind, str(e), e.witness))
    report.inputs = ld.inputs
    report.timing = {"seconds": round(time.perf_counter() - t0, 6)}
    return report


def run(argv=None) -> int:
    """Parse, dispatch, emit; the exit code is 0 pass, 1 fail, 2 error."""
    try:
        report = execute(sys.argv[1:] if argv is None else list(argv))
    except SystemExit as e:
        return int(e.code or 0)
    emit(report)
    return report.exit_code


def main() -> None:
    sys.exit(run())
