"""Finite dagger 2-categories: monads in them, the DFMnd / FK / FEM
completions, FEM objects and dagger lax-limits' 2-categorical side."""

from .core import (
    Dagger2Functor,
    FinDagger2Category,
    TwoCategoryDescription,
    functor_2category,
    locally_discrete,
    make_2category,
    sigma_z2,
    suspension,
    terminal_2category,
    validate_2category,
)
from .monads import Monad2, MonadCell2, MonadMorphism, validate_monad2

__all__ = [
    "Dagger2Functor",
    "FinDagger2Category",
    "Monad2",
    "MonadCell2",
    "MonadMorphism",
    "TwoCategoryDescription",
    "functor_2category",
    "locally_discrete",
    "make_2category",
    "sigma_z2",
    "suspension",
    "terminal_2category",
    "validate_2category",
    "validate_monad2",
]
