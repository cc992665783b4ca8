"""Independent brute-force enumerators used as ground truth.

Nothing here calls the law-checking code of the other modules: every
structure is read as raw tables (dicts of ids) and every diagram is
re-evaluated pointwise with local helpers. Searches walk the declared
choice sequence in order (objects sorted, then morphisms sorted, candidate
images sorted), so item order is lexicographic in that sequence and does
not depend on the number of worker processes.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from pathlib import Path
from typing import Any

from .errors import SearchSpaceTooLarge
from .functor import DaggerFunctor

DEFAULT_CAP = 10**7
GOLDEN_DIR = Path(__file__).parent / "golden"
GOLDEN_FILES = {"REL2": "rel2_monads.json"}


@dataclass
class EnumerationReport:
    space: str
    candidates: int
    items: list = field(default_factory=list)
    flags: list = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.items)

    def to_dict(self) -> dict:
        return {
            "space": self.space,
            "candidates": self.candidates,
            "count": self.count,
            "items": [{"item": i, "flags": f} for i, f in zip(self.items, self.flags)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"


# -- raw tables ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Tab:
    objects: tuple
    mors: dict  # id -> (src, tgt)
    ident: dict
    comp: dict  # (g, f) -> g∘f
    dag: dict

    def hom(self, a, b) -> list:
        return sorted(m for m, st in self.mors.items() if st == (a, b))

    def c(self, *fs):
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.comp[(g, out)]
        return out


def tab(c: Any) -> Tab:
    """Raw tables of a category object or of a JSON-style dict."""
    if isinstance(c, Tab):
        return c
    if isinstance(c, dict):
        return Tab(
            tuple(sorted(c["objects"])),
            {m["id"]: (m["src"], m["tgt"]) for m in c["morphisms"]},
            dict(c["identities"]),
            {(g, f): gf for g, f, gf in c["composition"]},
            dict(c["dagger"]),
        )
    return Tab(
        tuple(sorted(c.objects)),
        {m: tuple(st) for m, st in c.morphisms.items()},
        dict(c.identity),
        dict(c.compose),
        dict(c.dagger),
    )


def naive_category_violations(objects, morphisms, identity, compose, dagger) -> list:
    """Every failed axiom instance, as (axiom, cells...) tuples."""
    out = []
    objs = set(objects)
    mors = {m: tuple(st) for m, st in morphisms.items()}
    for m, (s, t) in sorted(mors.items()):
        if s not in objs or t not in objs:
            out.append(("endpoint", m))
    for a in sorted(objs):
        i = identity.get(a)
        if i not in mors or mors[i] != (a, a):
            out.append(("identity-typed", a))
    for a in sorted(identity):
        if a not in objs:
            out.append(("identity-typed", a))
    pairs = [(g, f) for g in sorted(mors) for f in sorted(mors) if mors[f][1] == mors[g][0]]
    for k in compose:
        if k not in pairs:
            out.append(("composite-not-composable", k))
    for g, f in pairs:
        gf = compose.get((g, f))
        if gf not in mors or mors[gf] != (mors[f][0], mors[g][1]):
            out.append(("composite", g, f))
    if out:
        return out
    for f in sorted(mors):
        s, t = mors[f]
        if compose[(f, identity[s])] != f or compose[(identity[t], f)] != f:
            out.append(("unit", f))
    for h in sorted(mors):
        for g in sorted(mors):
            for f in sorted(mors):
                if mors[f][1] == mors[g][0] and mors[g][1] == mors[h][0]:
                    if compose[(h, compose[(g, f)])] != compose[(compose[(h, g)], f)]:
                        out.append(("assoc", h, g, f))
    for f in sorted(mors):
        d = dagger.get(f)
        if d not in mors or mors[d] != (mors[f][1], mors[f][0]):
            out.append(("dagger-typed", f))
    if out:
        return out
    for f in sorted(mors):
        if dagger[dagger[f]] != f:
            out.append(("dagger-involutive", f))
    for a in sorted(objs):
        if dagger[identity[a]] != identity[a]:
            out.append(("dagger-identity", a))
    for g, f in pairs:
        if dagger[compose[(g, f)]] != compose[(dagger[f], dagger[g])]:
            out.append(("dagger-contravariant", g, f))
    return out


# -- functor search ------------------------------------------------------------------------


class _Counter:
    def __init__(self, cap: int):
        self.n, self.cap = 0, cap

    def tick(self) -> None:
        self.n += 1
        if self.n > self.cap:
            raise SearchSpaceTooLarge(f"search exceeded {self.cap} candidates", (self.cap,))


def _functor_constraints(A: Tab) -> tuple:
    order = sorted(A.mors)
    pos = {m: i for i, m in enumerate(order)}
    checks = [[] for _ in order]
    idents = set(A.ident.values())
    for f in order:
        if f in idents:
            checks[pos[f]].append(("id", f))
        checks[max(pos[f], pos[A.dag[f]])].append(("dag", f))
    for (g, f), gf in A.comp.items():
        checks[max(pos[g], pos[f], pos[gf])].append(("comp", g, f, gf))
    return order, checks


def _functor_search(A: Tab, B: Tab, ob: dict, order, checks, prefix: tuple, counter: _Counter) -> list:
    out = []
    img: dict = dict(zip(order, prefix))
    cands = [B.hom(ob[A.mors[f][0]], ob[A.mors[f][1]]) for f in order]

    def ok(i):
        for chk in checks[i]:
            if chk[0] == "id":
                if img[chk[1]] != B.ident[ob[A.mors[chk[1]][0]]]:
                    return False
            elif chk[0] == "dag":
                if img[A.dag[chk[1]]] != B.dag[img[chk[1]]]:
                    return False
            else:
                _, g, f, gf = chk
                if img[gf] != B.comp[(img[g], img[f])]:
                    return False
        return True

    for i in range(len(prefix)):
        if not ok(i):
            return out

    def go(i):
        if i == len(order):
            out.append((dict(ob), {f: img[f] for f in order}))
            return
        for x in cands[i]:
            counter.tick()
            img[order[i]] = x
            if ok(i):
                go(i + 1)
        img.pop(order[i], None)

    go(len(prefix))
    return out


def _functor_task(args) -> tuple:
    A, B, ob, order, checks, prefix, cap = args
    c = _Counter(cap)
    return _functor_search(A, B, ob, order, checks, prefix, c), c.n


def _functor_tasks(A: Tab, B: Tab, cap: int) -> list:
    order, checks = _functor_constraints(A)
    tasks = []
    for choice in product(B.objects, repeat=len(A.objects)):
        ob = dict(zip(A.objects, choice))
        if order:
            f = order[0]
            for x in B.hom(ob[A.mors[f][0]], ob[A.mors[f][1]]):
                tasks.append((A, B, ob, order, checks, (x,), cap))
        else:
            tasks.append((A, B, ob, order, checks, (), cap))
    return tasks


def _run(fn, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, tasks))


def _functors(A: Tab, B: Tab, cap: int, jobs: int) -> tuple:
    tasks = _functor_tasks(A, B, cap)
    results = _run(_functor_task, tasks, jobs)
    n = len(tasks) + sum(r[1] for r in results)
    if n > cap:
        raise SearchSpaceTooLarge(f"search exceeded {cap} candidates", (cap,))
    return [x for r in results for x in r[0]], n


def enumerate_dagger_functors(A, B, cap: int = DEFAULT_CAP, jobs: int = 1) -> EnumerationReport:
    TA, TB = tab(A), tab(B)
    found, n = _functors(TA, TB, cap, jobs)
    return EnumerationReport(
        "dagger functors: object images then morphism images, in id order",
        n,
        [{"objects": ob, "morphisms": mm} for ob, mm in found],
        [{} for _ in found],
    )


# -- natural transformations --------------------------------------------------------------


def _fmaps(F) -> tuple:
    if isinstance(F, dict):
        return F["objects"], F["morphisms"]
    return dict(F.obj_map), dict(F.mor_map)


def _natural(C: Tab, D: Tab, Fo, Fm, Go, Gm, comps) -> bool:
    for f, (a, b) in C.mors.items():
        if D.comp[(comps[b], Fm[f])] != D.comp[(Gm[f], comps[a])]:
            return False
    return True


def enumerate_nat(F, G, C=None, D=None, cap: int = DEFAULT_CAP) -> EnumerationReport:
    """Natural transformations F ⇒ G (dagger functors C → D)."""
    C = tab(C if C is not None else F.source)
    D = tab(D if D is not None else F.target)
    Fo, Fm = _fmaps(F)
    Go, Gm = _fmaps(G)
    counter = _Counter(cap)
    items = []
    for choice in product(*(D.hom(Fo[a], Go[a]) for a in C.objects)):
        counter.tick()
        comps = dict(zip(C.objects, choice))
        if _natural(C, D, Fo, Fm, Go, Gm, comps):
            items.append({"components": comps})
    return EnumerationReport("components per object, in id order", counter.n, items, [{} for _ in items])


# -- monads ----------------------------------------------------------------------------------------


def frobenius_pointwise(C: Tab, To: dict, Tm: dict, mu: dict) -> bool:
    """T(μ_a)∘μ_{Ta}† = μ_{Ta}∘T(μ_a†) at every object a."""
    for a in C.objects:
        ta = To[a]
        lhs = C.comp[(Tm[mu[a]], C.dag[mu[ta]])]
        rhs = C.comp[(mu[ta], Tm[C.dag[mu[a]]])]
        if lhs != rhs:
            return False
    return True


def _monad_task(args) -> tuple:
    C, To, Tm, cap = args
    counter = _Counter(cap)
    Id_o = {a: a for a in C.objects}
    Id_m = {f: f for f in C.mors}
    TTo = {a: To[To[a]] for a in C.objects}
    TTm = {f: Tm[Tm[f]] for f in C.mors}
    mus, etas = [], []
    for choice in product(*(C.hom(TTo[a], To[a]) for a in C.objects)):
        counter.tick()
        comps = dict(zip(C.objects, choice))
        if _natural(C, C, TTo, TTm, To, Tm, comps):
            mus.append(comps)
    for choice in product(*(C.hom(a, To[a]) for a in C.objects)):
        counter.tick()
        comps = dict(zip(C.objects, choice))
        if _natural(C, C, Id_o, Id_m, To, Tm, comps):
            etas.append(comps)
    out = []
    for mu in mus:
        for eta in etas:
            counter.tick()
            good = True
            for a in C.objects:
                ta = To[a]
                if C.comp[(mu[a], Tm[mu[a]])] != C.comp[(mu[a], mu[ta])]:
                    good = False
                if C.comp[(mu[a], eta[ta])] != C.ident[ta] or C.comp[(mu[a], Tm[eta[a]])] != C.ident[ta]:
                    good = False
            if good:
                out.append((mu, eta, frobenius_pointwise(C, To, Tm, mu)))
    return out, counter.n


def enumerate_monads(C, cap: int = DEFAULT_CAP, jobs: int = 1) -> EnumerationReport:
    """All (T, μ, η) on C, each flagged Frobenius by pointwise evaluation."""
    T = tab(C)
    functors, n = _functors(T, T, cap, jobs)
    results = _run(_monad_task, [(T, ob, mm, cap) for ob, mm in functors], jobs)
    n += sum(r[1] for r in results)
    if n > cap:
        raise SearchSpaceTooLarge(f"monad search exceeded {cap} candidates", (cap,))
    items, flags = [], []
    for (ob, mm), (found, _) in zip(functors, results):
        for mu, eta, frob in found:
            items.append({"T_objects": ob, "T_morphisms": mm, "mu": mu, "eta": eta})
            flags.append({"frobenius": frob})
    return EnumerationReport(
        "endofunctor (object images, morphism images), then mu, then eta components, in id order",
        n, items, flags,
    )


def _monad_data(m) -> tuple:
    """(Tab, T objects, T morphisms, mu, eta) from a monad object or report item."""
    if isinstance(m, tuple):
        C, item = m
        return tab(C), item["T_objects"], item["T_morphisms"], item["mu"], item["eta"]
    return tab(m.base), dict(m.T.obj_map), dict(m.T.mor_map), dict(m.mu.components), dict(m.eta.components)


def enumerate_algebras(m, cap: int = DEFAULT_CAP) -> EnumerationReport:
    """EM algebras (D, δ); flags: fem law, and δ† a homomorphism into (TD, μ_D)."""
    C, To, Tm, mu, eta = _monad_data(m)
    counter = _Counter(cap)
    items, flags = [], []
    for d in C.objects:
        for delta in C.hom(To[d], d):
            counter.tick()
            if C.comp[(delta, eta[d])] != C.ident[d]:
                continue
            if C.comp[(delta, Tm[delta])] != C.comp[(delta, mu[d])]:
                continue
            dd = C.dag[delta]
            fem = C.comp[(mu[d], Tm[dd])] == C.comp[(Tm[delta], C.dag[mu[d]])]
            hom = C.comp[(dd, delta)] == C.comp[(mu[d], Tm[dd])]
            items.append({"carrier": d, "structure": delta})
            flags.append({"fem": fem, "dagger_is_hom": hom})
    return EnumerationReport("carrier, then structure map, in id order", counter.n, items, flags)


def find_em_not_fem(categories: dict, cap: int = DEFAULT_CAP) -> list:
    """(category, monad index, carrier, structure) for every EM algebra that
    is not FEM, over every monad on the given categories."""
    out = []
    for name in sorted(categories):
        rep = enumerate_monads(categories[name], cap)
        for i, item in enumerate(rep.items):
            algs = enumerate_algebras((categories[name], item), cap)
            for a, f in zip(algs.items, algs.flags):
                if not f["fem"]:
                    out.append((name, i, a["carrier"], a["structure"]))
    return out


# -- 2-categories -------------------------------------------------------------------------------


class Tab2:
    """Raw tables of a dagger 2-category."""

    def __init__(self, K):
        self.cells0 = tuple(K.cells0)
        self.homs = {k: tab(c) for k, c in K.hom.items()}
        self.id1 = dict(K.id1)
        self.comp1 = dict(K.comp1)
        self.lwh = dict(K.lwhisk)
        self.rwh = dict(K.rwhisk)
        self.where1, self.where2 = {}, {}
        for k, c in self.homs.items():
            for f in c.objects:
                self.where1[f] = k
            for x in c.mors:
                self.where2[x] = k

    def hom1(self, a, b) -> tuple:
        return self.homs[(a, b)].objects

    def st(self, x) -> tuple:
        return self.homs[self.where2[x]].mors[x]

    def ones(self) -> list:
        return sorted(self.where1)

    def hom2(self, f, g) -> list:
        return self.homs[self.where1[f]].hom(f, g)

    def v(self, *xs):
        return self.homs[self.where2[xs[-1]]].c(*xs)

    def one(self, f):
        return self.homs[self.where1[f]].ident[f]

    def dag(self, x):
        return self.homs[self.where2[x]].dag[x]

    def c1(self, g, f):
        return self.comp1[(g, f)]

    def hz(self, y, x):
        # y∗x = (y f')·(g x)
        return self.v(self.rwh[(y, self.st(x)[1])], self.lwh[(self.st(y)[0], x)])


def _monad2_data(m) -> tuple:
    if isinstance(m, dict):
        return m["D"], m["t"], m["mu"], m["eta"]
    return m.D, m.t, m.mu, m.eta


def enumerate_monads2(K, cap: int = DEFAULT_CAP) -> EnumerationReport:
    """Monads (D, t, μ, η) in a dagger 2-category, flagged with the
    Frobenius law and the stronger equation (μt)·(tμ†) = μ†·μ."""
    T = Tab2(K)
    counter = _Counter(cap)
    items, flags = [], []
    for D in T.cells0:
        i = T.id1[D]
        for t in T.hom1(D, D):
            tt = T.c1(t, t)
            for mu in T.hom2(tt, t):
                for eta in T.hom2(i, t):
                    counter.tick()
                    if T.v(mu, T.rwh[(mu, t)]) != T.v(mu, T.lwh[(t, mu)]):
                        continue
                    if T.v(mu, T.rwh[(eta, t)]) != T.one(t) or T.v(mu, T.lwh[(t, eta)]) != T.one(t):
                        continue
                    md = T.dag(mu)
                    lhs = T.v(T.rwh[(mu, t)], T.lwh[(t, md)])
                    items.append({"D": D, "t": t, "mu": mu, "eta": eta})
                    flags.append({
                        "frobenius": lhs == T.v(T.lwh[(t, mu)], T.rwh[(md, t)]),
                        "middle": lhs == T.v(md, mu),
                    })
    return EnumerationReport("0-cell, endo-1-cell, mu, eta, in id order", counter.n, items, flags)


def enumerate_monad_morphisms(m, m2, K, cap: int = DEFAULT_CAP) -> EnumerationReport:
    """Pairs (f, σ): (A, s) → (D, t), σ: t f ⇒ f s, satisfying the monad
    morphism diagrams (multiplication, its dagger, unit)."""
    T = Tab2(K)
    A, s, ms, es = _monad2_data(m)
    D, t, mt, et = _monad2_data(m2)
    counter = _Counter(cap)
    items = []
    for f in T.hom1(A, D):
        for sigma in T.hom2(T.c1(t, f), T.c1(f, s)):
            counter.tick()
            if T.v(sigma, T.rwh[(mt, f)]) != T.v(T.lwh[(f, ms)], T.rwh[(sigma, s)], T.lwh[(t, sigma)]):
                continue
            sd = T.dag(sigma)
            if T.v(sd, T.lwh[(f, ms)], T.rwh[(sigma, s)]) != T.v(T.rwh[(mt, f)], T.lwh[(t, sd)]):
                continue
            if T.v(sigma, T.rwh[(et, f)]) != T.lwh[(f, es)]:
                continue
            items.append({"f": f, "sigma": sigma})
    return EnumerationReport("1-cell, then sigma, in id order", counter.n, items, [{} for _ in items])


def naive_lax_violations(S, K, obj_map, map1, map2, gamma, delta) -> list:
    """Every failed instance of the dagger lax functor axioms, evaluated on
    raw tables; γ keyed by (f, g) with γ: F(g)F(f) ⇒ F(gf)."""
    A, T = Tab2(S), Tab2(K)
    out = []
    for f in A.ones():
        a, b = A.where1[f]
        if map1.get(f) not in T.where1 or T.where1[map1[f]] != (obj_map[a], obj_map[b]):
            out.append(("map1", f))
    for x in sorted(A.where2):
        f, g = A.st(x)
        y = map2.get(x)
        if y not in T.where2 or T.st(y) != (map1[f], map1[g]):
            out.append(("map2", x))
    if out:
        return out
    for k, hc in A.homs.items():
        for f in hc.objects:
            if map2[hc.ident[f]] != T.one(map1[f]):
                out.append(("hom-identity", f))
        for (y, x), yx in hc.comp.items():
            if map2[yx] != T.v(map2[y], map2[x]):
                out.append(("hom-composition", y, x))
        for x in hc.mors:
            if map2[hc.dag[x]] != T.dag(map2[x]):
                out.append(("hom-dagger", x))
    pairs = [(f, g) for f in A.ones() for g in A.ones() if A.where1[f][1] == A.where1[g][0]]
    for f, g in pairs:
        x = gamma.get((f, g))
        if x not in T.where2 or T.st(x) != (T.c1(map1[g], map1[f]), map1[A.c1(g, f)]):
            out.append(("gamma-typed", f, g))
    for a in A.cells0:
        x = delta.get(a)
        if x not in T.where2 or T.st(x) != (T.id1[obj_map[a]], map1[A.id1[a]]):
            out.append(("delta-typed", a))
    if out:
        return out
    for f, g in pairs:
        for x in sorted(A.where2):
            f1, f2 = A.st(x)
            if f1 == f:
                if T.v(gamma[(f2, g)], T.lwh[(map1[g], map2[x])]) != T.v(map2[A.lwh[(g, x)]], gamma[(f, g)]):
                    out.append(("gamma-natural-1", f, g, x))
            if f1 == g:
                if T.v(gamma[(f, f2)], T.rwh[(map2[x], map1[f])]) != T.v(map2[A.rwh[(x, f)]], gamma[(f, g)]):
                    out.append(("gamma-natural-2", f, g, x))
    triples = [(f, g, h) for f, g in pairs for h in A.ones() if A.where1[h][0] == A.where1[g][1]]
    for f, g, h in triples:
        hg, gf = A.c1(h, g), A.c1(g, f)
        if T.v(gamma[(f, hg)], T.rwh[(gamma[(g, h)], map1[f])]) != T.v(gamma[(gf, h)], T.lwh[(map1[h], gamma[(f, g)])]):
            out.append(("assoc", f, g, h))
        lhs = T.v(T.rwh[(gamma[(g, h)], map1[f])], T.lwh[(map1[h], T.dag(gamma[(f, g)]))])
        if lhs != T.v(T.dag(gamma[(f, hg)]), gamma[(gf, h)]):
            out.append(("frobenius", f, g, h))
    for f in A.ones():
        a, b = A.where1[f]
        if T.v(gamma[(A.id1[a], f)], T.lwh[(map1[f], delta[a])]) != T.one(map1[f]):
            out.append(("unit-right", f))
        if T.v(gamma[(f, A.id1[b])], T.rwh[(delta[b], map1[f])]) != T.one(map1[f]):
            out.append(("unit-left", f))
    return out


def enumerate_lax_data(S, K, cap: int = DEFAULT_CAP) -> EnumerationReport:
    """Every assignment of lax functor data S → K (0-cell, 1-cell and 2-cell
    maps, then γ, then δ), flagged with whether all axioms hold."""
    A, T = Tab2(S), Tab2(K)
    counter = _Counter(cap)
    items, flags = [], []
    ones, twos = A.ones(), sorted(A.where2)
    pairs = [(f, g) for f in ones for g in ones if A.where1[f][1] == A.where1[g][0]]
    for oc in product(T.cells0, repeat=len(A.cells0)):
        om = dict(zip(A.cells0, oc))
        c1 = [T.hom1(om[A.where1[f][0]], om[A.where1[f][1]]) for f in ones]
        for m1c in product(*c1):
            m1 = dict(zip(ones, m1c))
            c2 = [T.hom2(m1[A.st(x)[0]], m1[A.st(x)[1]]) for x in twos]
            for m2c in product(*c2):
                m2 = dict(zip(twos, m2c))
                cg = [T.hom2(T.c1(m1[g], m1[f]), m1[A.c1(g, f)]) for f, g in pairs]
                cd = [T.hom2(T.id1[om[a]], m1[A.id1[a]]) for a in A.cells0]
                for gc in product(*cg):
                    for dc in product(*cd):
                        counter.tick()
                        gamma, delta = dict(zip(pairs, gc)), dict(zip(A.cells0, dc))
                        bad = naive_lax_violations(S, K, om, m1, m2, gamma, delta)
                        items.append({"obj_map": om, "map1": m1, "map2": m2, "gamma": gamma, "delta": delta})
                        flags.append({"lax": not bad, "first_violation": bad[0][0] if bad else None})
    return EnumerationReport("0-cell, 1-cell, 2-cell images, then gamma, then delta", counter.n, items, flags)


# -- isomorphism search ------------------------------------------------------------------


def iso_search_dagger(C, D, cap: int = DEFAULT_CAP):
    """A strict dagger isomorphism C → D as (F, G) DaggerFunctors, or None."""
    TC, TD = tab(C), tab(D)
    if len(TC.objects) != len(TD.objects) or len(TC.mors) != len(TD.mors):
        return None
    counter = _Counter(cap)
    order = sorted(TC.mors)
    for perm in permutations(TD.objects):
        ob = dict(zip(TC.objects, perm))
        img: dict = {}
        used: set = set()

        def consistent(f):
            x = img[f]
            s, t = TC.mors[f]
            if TC.ident[s] == f and TD.ident[ob[s]] != x:
                return False
            if TD.ident[ob[s]] == x and TC.ident[s] != f:
                return False
            d = TC.dag[f]
            if d in img and img[d] != TD.dag[x]:
                return False
            for (g, h), gh in TC.comp.items():
                if g in img and h in img and gh in img and TD.comp[(img[g], img[h])] != img[gh]:
                    return False
            return True

        def go(i):
            if i == len(order):
                return True
            f = order[i]
            s, t = TC.mors[f]
            for x in TD.hom(ob[s], ob[t]):
                if x in used:
                    continue
                counter.tick()
                img[f] = x
                used.add(x)
                if consistent(f) and go(i + 1):
                    return True
                used.discard(x)
                del img[f]
            return False

        if go(0):
            inv_ob = {v: k for k, v in ob.items()}
            inv = {v: k for k, v in img.items()}
            return DaggerFunctor(C, D, ob, dict(img)), DaggerFunctor(D, C, inv_ob, inv)
    return None


# -- golden data ------------------------------------------------------------------------------


def golden_report(name: str = "REL2", cap: int = DEFAULT_CAP, jobs: int = 1) -> EnumerationReport:
    from .fixtures import category

    return enumerate_monads(category(name), cap, jobs)


def write_golden(directory: Path | str = GOLDEN_DIR, cap: int = DEFAULT_CAP, jobs: int = 1) -> list:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, fname in sorted(GOLDEN_FILES.items()):
        p = directory / fname
        p.write_text(golden_report(name, cap, jobs).to_json(), encoding="utf-8")
        written.append(p)
    return written


def load_golden(name: str = "REL2", directory: Path | str = GOLDEN_DIR) -> dict:
    return json.loads((Path(directory) / GOLDEN_FILES[name]).read_text(encoding="utf-8"))
