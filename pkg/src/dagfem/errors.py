"""Exception hierarchy and the check verdict type.

Three families matter to callers (and to the CLI exit-code contract):

* ``ValidationError`` -- the input tables do not describe the claimed
  structure (exit code 2).
* ``MathCheckFailure`` -- a mathematical check ran and failed, or a
  construction that should always succeed did not (exit code 1).
* ``SearchSpaceTooLarge`` -- an exhaustive search would exceed its cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


class DagFemError(Exception):
    """Base class. ``witness`` names the first offending cells by id."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness

    @property
    def kind(self) -> str:
        return type(self).__name__


class ValidationError(DagFemError):
    pass


# -- category tables ----------------------------------------------------------
class DanglingReference(ValidationError):
    pass


class MissingComposite(ValidationError):
    pass


class BadComposite(ValidationError):
    """Composition entry for a non-composable pair, or with wrong endpoints."""


class NonAssociative(ValidationError):
    pass


class BadIdentity(ValidationError):
    pass


class DaggerWrongEndpoints(ValidationError):
    pass


class DaggerNotInvolutive(ValidationError):
    pass


class DaggerNotFunctorial(ValidationError):
    pass


class UnknownMorphism(ValidationError):
    pass


# -- functors and transformations ---------------------------------------------
class NotFunctorial(ValidationError):
    pass


class NotDaggerPreserving(ValidationError):
    pass


class NotNatural(ValidationError):
    pass


class WrongEndpoints(ValidationError):
    pass


class NotComposable(ValidationError):
    pass


# -- monads and adjunctions -----------------------------------------------------
class NotDaggerEndofunctor(ValidationError):
    pass


class AssocFail(ValidationError):
    pass


class UnitFail(ValidationError):
    pass


class NotFrobenius(ValidationError):
    pass


class NotAdjunction(ValidationError):
    pass


class MonadMismatch(ValidationError):
    pass


# -- 2-categories ---------------------------------------------------------------
class Assoc1Fail(ValidationError):
    pass


class Unit1Fail(ValidationError):
    pass


class WhiskerFail(ValidationError):
    pass


class InterchangeFail(ValidationError):
    pass


class DaggerHorizontalFail(ValidationError):
    pass


class EtaCommutationRequired(ValidationError):
    pass


class MissingWitness(ValidationError):
    pass


# -- lax structures ---------------------------------------------------------------
class LaxCoherenceFail(ValidationError):
    pass


class FrobeniusAxiomFail(ValidationError):
    pass


class HomMapNotDagger(ValidationError):
    pass


class SourceNotTerminal(ValidationError):
    pass


class CoherenceFail(ValidationError):
    pass


# -- failed checks ------------------------------------------------------------------
class MathCheckFailure(DagFemError):
    pass


class CheckFailed(MathCheckFailure):
    pass


class TheoremViolation(MathCheckFailure):
    """A construction the theory guarantees has failed: an implementation bug."""


class InternalClosureFailure(TheoremViolation):
    pass


class NoComparison(TheoremViolation):
    pass


class NonUnique(TheoremViolation):
    pass


class SearchSpaceTooLarge(DagFemError):
    pass


@dataclass(frozen=True)
class Verdict:
    """Outcome of a boolean check. Falsy when the check failed."""

    ok: bool
    witness: Any = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def raise_if_failed(self) -> "Verdict":
        if not self.ok:
            raise CheckFailed(self.detail, self.witness)
        return self


PASS = Verdict(True)


def fail(detail: str, witness: Any = None) -> Verdict:
    return Verdict(False, witness, detail)
