"""Monads, monad morphisms and their 2-cells inside a finite dagger
2-category."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..errors import AssocFail, UnitFail, ValidationError, WrongEndpoints
from .core import FinDagger2Category


@dataclass(frozen=True)
class Monad2:
    host: FinDagger2Category
    D: str
    t: str
    mu: str
    eta: str
    frobenius: bool = False

    __hash__ = None  # type: ignore[assignment]

    @property
    def id(self) -> str:
        return f"<{self.D},{self.t},{self.mu},{self.eta}>"

    def table(self) -> tuple:
        return (self.D, self.t, self.mu, self.eta)


def monad_laws_hold(K: FinDagger2Category, D: str, t: str, mu: str, eta: str) -> str | None:
    """Name of the first failing law, or None."""
    tt, i = K.c1(t, t), K.id1[D]
    HD = K.hom[(D, D)]
    if HD.morphisms.get(mu) != (tt, t):
        return "mu-type"
    if HD.morphisms.get(eta) != (i, t):
        return "eta-type"
    if K.v(mu, K.lw(t, mu)) != K.v(mu, K.rw(mu, t)):
        return "assoc"
    one = K.id2(t)
    if K.v(mu, K.lw(t, eta)) != one or K.v(mu, K.rw(eta, t)) != one:
        return "unit"
    return None


def frobenius_holds(K: FinDagger2Category, t: str, mu: str) -> bool:
    """(μt)·(tμ†) = (tμ)·(μ†t)."""
    md = K.dag2(mu)
    return K.v(K.rw(mu, t), K.lw(t, md)) == K.v(K.lw(t, mu), K.rw(md, t))


def validate_monad2(K: FinDagger2Category, D: str, t: str, mu: str, eta: str) -> Monad2:
    if K.ends1(t) != (D, D):
        raise WrongEndpoints(f"{t} is not an endo-1-cell of {D}", (t, D))
    bad = monad_laws_hold(K, D, t, mu, eta)
    if bad in ("mu-type", "eta-type"):
        raise WrongEndpoints(f"{bad} mismatch", (mu, eta))
    if bad == "assoc":
        raise AssocFail("μ·tμ != μ·μt", (D, t, mu))
    if bad == "unit":
        raise UnitFail("unit law fails", (D, t, mu, eta))
    return Monad2(K, D, t, mu, eta, frobenius_holds(K, t, mu))


def identity_monad2(K: FinDagger2Category, D: str) -> Monad2:
    i = K.id1[D]
    return validate_monad2(K, D, i, K.id2(i), K.id2(i))


def enumerate_frobenius_monads(K: FinDagger2Category, frobenius_only: bool = False) -> list:
    """Every monad of K, Frobenius-flagged, ordered by (D, t, μ, η)."""
    out = []
    for D in K.cells0:
        i = K.id1[D]
        for t in K.hom1(D, D):
            tt = K.c1(t, t)
            for mu, eta in product(K.hom2(tt, t), K.hom2(i, t)):
                if monad_laws_hold(K, D, t, mu, eta) is None:
                    m = Monad2(K, D, t, mu, eta, frobenius_holds(K, t, mu))
                    if m.frobenius or not frobenius_only:
                        out.append(m)
    return out


# -- DFMnd cells ------------------------------------------------------------------


@dataclass(frozen=True)
class MonadMorphism:
    """(f, σ): (A, s) → (D, t) with σ: t f ⇒ f s.

    ``fk`` marks the Kleisli-side reading (σ: f s ⇒ t f); its id lists the
    monads target-first so that FK(K^op)^op and FEM(K) name cells alike.
    """

    source: Monad2
    target: Monad2
    f: str
    sigma: str
    fk: bool = False

    __hash__ = None  # type: ignore[assignment]

    @property
    def id(self) -> str:
        a, b = self.source.id, self.target.id
        if self.fk:
            a, b = b, a
        return f"({self.f},{self.sigma})[{a}~{b}]"


@dataclass(frozen=True)
class MonadCell2:
    source: MonadMorphism
    target: MonadMorphism
    alpha: str

    __hash__ = None  # type: ignore[assignment]

    @property
    def id(self) -> str:
        return f"[{self.alpha}]:{self.source.id}=>{self.target.id}"


def is_monad_morphism(K: FinDagger2Category, src: Monad2, tgt: Monad2, f: str, sigma: str) -> str | None:
    """First failing condition of the three monad-morphism diagrams, or None."""
    s, t = src.t, tgt.t
    if K.ends1(f) != (src.D, tgt.D):
        return "f-type"
    ms, mt = src.mu, tgt.mu
    if not K.is2(sigma) or K.homcat(sigma).morphisms[sigma] != (K.c1(t, f), K.c1(f, s)):
        return "sigma-type"
    # σ·(μ^t f) = (f μ^s)·(σ s)·(t σ)
    if K.v(sigma, K.rw(mt, f)) != K.v(K.lw(f, ms), K.rw(sigma, s), K.lw(t, sigma)):
        return "mult"
    # σ†·(f μ^s)·(σ s) = (μ^t f)·(t σ†)
    sd = K.dag2(sigma)
    if K.v(sd, K.lw(f, ms), K.rw(sigma, s)) != K.v(K.rw(mt, f), K.lw(t, sd)):
        return "dagger-mult"
    # σ·(η^t f) = f η^s
    if K.v(sigma, K.rw(tgt.eta, f)) != K.lw(f, src.eta):
        return "unit"
    return None


def is_monad_cell(K: FinDagger2Category, a: MonadMorphism, b: MonadMorphism, alpha: str) -> str | None:
    s, t = a.source.t, a.target.t
    if not K.is2(alpha) or K.homcat(alpha).morphisms[alpha] != (a.f, b.f):
        return "alpha-type"
    # γ·(tα) = (αs)·σ
    if K.v(b.sigma, K.lw(t, alpha)) != K.v(K.rw(alpha, s), a.sigma):
        return "square"
    ad = K.dag2(alpha)
    # σ·(tα†) = (α†s)·γ
    if K.v(a.sigma, K.lw(t, ad)) != K.v(K.rw(ad, s), b.sigma):
        return "dagger-square"
    return None


def validate_monad_morphism(K, src: Monad2, tgt: Monad2, f: str, sigma: str) -> MonadMorphism:
    bad = is_monad_morphism(K, src, tgt, f, sigma)
    if bad is not None:
        raise ValidationError(f"({f}, {sigma}) fails the {bad} condition", (f, sigma, bad))
    return MonadMorphism(src, tgt, f, sigma)


def dfmnd_morphisms(K: FinDagger2Category, src: Monad2, tgt: Monad2) -> list:
    out = []
    for f in K.hom1(src.D, tgt.D):
        for sigma in K.hom2(K.c1(tgt.t, f), K.c1(f, src.t)):
            if is_monad_morphism(K, src, tgt, f, sigma) is None:
                out.append(MonadMorphism(src, tgt, f, sigma))
    return out


def dfmnd_cells(K: FinDagger2Category, a: MonadMorphism, b: MonadMorphism) -> list:
    return [MonadCell2(a, b, x) for x in K.hom2(a.f, b.f) if is_monad_cell(K, a, b, x) is None]
