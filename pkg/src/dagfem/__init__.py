"""Finite dagger categories as explicit tables, Frobenius monads on them,
their Eilenberg-Moore and Kleisli constructions, and the 2-categorical
versions, each checked by exhaustive evaluation."""

from .errors import DagFemError, MathCheckFailure, SearchSpaceTooLarge, ValidationError, Verdict
from .fincat import CategoryDescription, FinDaggerCategory, make_category, validate_category
from .functor import DaggerFunctor, NatTrans, validate_functor, validate_nat
from .monad import FrobeniusMonad, make_monad, validate_monad

__version__ = "0.1.0"

__all__ = [
    "CategoryDescription",
    "DagFemError",
    "DaggerFunctor",
    "FinDaggerCategory",
    "FrobeniusMonad",
    "MathCheckFailure",
    "NatTrans",
    "SearchSpaceTooLarge",
    "ValidationError",
    "Verdict",
    "make_category",
    "make_monad",
    "validate_category",
    "validate_functor",
    "validate_monad",
    "validate_nat",
]
