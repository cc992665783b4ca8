"""The fixture 2-category: ONE, Z2 and FEM(TS) (optionally KL(TS)) as
0-cells with homs DagCat(-, -), plus the TS monad, its FEM witness and
the FEM / Kleisli adjunctions located inside it."""

from __future__ import annotations

from dataclasses import dataclass

from ..fixtures import one, z2
from ..kleisli import KleisliResult, build_kleisli
from ..monad import FEMCategoryResult, build_fem_category, ts_monad
from .core import FinDagger2Category, cell_of, functor_2category
from .monads import Monad2, validate_monad2
from .universal import Adjunction2, FEMObjectWitness, validate_adjunction2


@dataclass(frozen=True)
class FixtureBundle:
    K: FinDagger2Category
    ts: Monad2
    witness: FEMObjectWitness
    fem_adj: Adjunction2
    kl_adj: Adjunction2 | None
    fem: FEMCategoryResult
    kl: KleisliResult | None

    __hash__ = None  # type: ignore[assignment]


def fixture_2category(with_kleisli: bool = False) -> FixtureBundle:
    m = ts_monad()
    fem = build_fem_category(m)
    cats = {"ONE": one(), "Z2": z2(), "FEM_TS": fem.fem_cat}
    kl = None
    if with_kleisli:
        kl = build_kleisli(m)
        cats["KL_TS"] = kl.kl_cat
    K = functor_2category(cats)

    t = K.id1["Z2"]
    if cell_of(K, m.T) != t:
        raise AssertionError("TS endofunctor should be the identity 1-cell")
    ts = validate_monad2(K, "Z2", t, cell_of(K, m.mu), cell_of(K, m.eta))
    u, f_t = cell_of(K, fem.U), cell_of(K, fem.F)
    eps = cell_of(K, fem.adj.counit)
    w = FEMObjectWitness(ts, "FEM_TS", u, cell_of(K, fem.counit_xi), f_t, eps)
    fem_adj = validate_adjunction2(K, "FEM_TS", "Z2", f_t, u, cell_of(K, fem.adj.unit), eps)
    kl_adj = None
    if kl is not None:
        kl_adj = validate_adjunction2(
            K, "KL_TS", "Z2", cell_of(K, kl.F_T), cell_of(K, kl.U_T),
            cell_of(K, kl.adj.unit), cell_of(K, kl.adj.counit),
        )
    return FixtureBundle(K, ts, w, fem_adj, kl_adj, fem, kl)

