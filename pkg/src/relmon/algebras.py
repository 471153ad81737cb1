"""Relative EM-algebras, their category and the EM relative adjunction.

An algebra for ``T`` over ``I: X0 -> X`` is a carrier ``M`` in ``X`` with an
action taking ``h: Ia -> M`` to ``act(a, h): Ta -> M``.  Algebras found by
enumeration store the action as a table keyed by ``(a, mor_key(h))``.
"""

from __future__ import annotations

import itertools
from typing import Callable

from .core import FiniteCategory, Functor, NatTrans, _cap, _key
from .errors import ResourceError, StructuralError
from .operators import check_relative_adjunction
from .relmonad import RelativeMonad, compare_relmonads, relmonad_from_adjunction
from .report import LawReport
from .sampling import max_enum, product_sample


class RelAlgebra:
    def __init__(self, monad: RelativeMonad, carrier, act: Callable, name="A"):
        self.monad = monad
        self.carrier = carrier
        self.act = act
        self.name = name

    def __repr__(self):
        return f"RelAlgebra({self.name} on {self.carrier})"


class RelAlgebraMorphism:
    def __init__(self, src: RelAlgebra, dst: RelAlgebra, f):
        self.src = src
        self.dst = dst
        self.f = f


def free_algebra(T: RelativeMonad, a) -> RelAlgebra:
    """``(Ta, (-)^dagger)``."""
    return RelAlgebra(T, T.on_obj(a), lambda b, h: T.ext(b, a, h), f"F({a})")


def table_algebra(T: RelativeMonad, carrier, table: dict, name="A") -> RelAlgebra:
    """An algebra whose action is looked up in ``{(a, mor_key(h)): g}``."""
    C = T.C

    def act(a, h):
        try:
            return table[_key(a), C.mor_key(h)]
        except KeyError:
            raise StructuralError(f"{name}: action undefined at arity {a!r}") from None
    alg = RelAlgebra(T, carrier, act, name)
    alg.table = table
    return alg


def _act(alg, a, h):
    g = alg.act(a, h)
    C = alg.monad.C
    if g is None or C.dom(g) != alg.monad.on_obj(a) or C.cod(g) != alg.carrier:
        raise StructuralError(f"{alg.name}: action at arity {a!r} has the wrong type")
    return g


def check_rel_algebra(alg: RelAlgebra, cap=None, arities=None) -> LawReport:
    """Unit and associativity laws over the declared arities."""
    T = alg.monad
    C, I, M = T.C, T.base.on_obj, alg.carrier
    cap = _cap(cap)
    arities = list(T.C0.objects() if arities is None else arities)
    rep = LawReport(f"algebra {alg.name}")
    rep.stat("unit")
    rep.stat("associativity")
    for a in arities:
        inst, total = product_sample([C.hom(I(a), M)], cap, f"au:{a}")
        rep.declare("unit", total, len(inst))
        for (h,) in inst:
            rep.expect_equal(C, "unit", C.compose(_act(alg, a, h), T.unit(a)), h, a=a, h=h)
    for a, b in itertools.product(arities, repeat=2):
        inst, total = product_sample([C.hom(I(a), T.on_obj(b)), C.hom(I(b), M)], cap,
                                     f"aa:{a}:{b}")
        rep.declare("associativity", total, len(inst))
        for k, h in inst:
            hb = _act(alg, b, h)
            lhs = C.compose(hb, T.ext(a, b, k))
            rhs = _act(alg, a, C.compose(hb, k))
            rep.expect_equal(C, "associativity", lhs, rhs, a=a, b=b, k=k, h=h)
    return rep


def check_algebra_morphism(m: RelAlgebraMorphism, cap=None, arities=None) -> LawReport:
    T = m.src.monad
    C, I = T.C, T.base.on_obj
    arities = list(T.C0.objects() if arities is None else arities)
    rep = LawReport("algebra morphism")
    rep.stat("morphism")
    for a in arities:
        inst, total = product_sample([C.hom(I(a), m.src.carrier)], _cap(cap), f"am:{a}")
        rep.declare("morphism", total, len(inst))
        for (h,) in inst:
            rep.expect_equal(C, "morphism", C.compose(m.f, m.src.act(a, h)),
                             m.dst.act(a, C.compose(m.f, h)), a=a, h=h)
    return rep


def _require_complete(C, a, b, what):
    if not C.hom_complete(a, b):
        raise ResourceError(f"{what}: hom({a}, {b}) is not completely enumerable")


def enumerate_algebras(T: RelativeMonad, carrier, arities=None) -> list[RelAlgebra]:
    """All algebra structures on ``carrier`` lawful on the declared arities.

    Backtracking over the action values, with the unit law as a candidate
    filter and associativity checked as soon as both sides are assigned.
    """
    C, I = T.C, T.base.on_obj
    arities = list(T.C0.objects() if arities is None else arities)
    variables = []
    cands = {}
    for a in arities:
        _require_complete(C, I(a), carrier, "algebra enumeration")
        _require_complete(C, T.on_obj(a), carrier, "algebra enumeration")
        ta = T.unit(a)
        for h in C.hom(I(a), carrier):
            var = (_key(a), C.mor_key(h))
            variables.append((a, h, var))
            cands[var] = [g for g in C.hom(T.on_obj(a), carrier)
                          if C.mor_eq(C.compose(g, ta), h)]
    links = {}
    for b in arities:
        for a in arities:
            _require_complete(C, I(a), T.on_obj(b), "algebra enumeration")
            links[_key(a), _key(b)] = [(k, T.ext(a, b, k)) for k in C.hom(I(a), T.on_obj(b))]
    by_var = {var: (a, h) for a, h, var in variables}
    assignment = {}
    found = []
    budget = [max_enum()]

    def consistent(var):
        b, h = by_var[var]
        g = assignment[var]
        for a in arities:
            for k, kdag in links[_key(a), _key(b)]:
                hv = (_key(a), C.mor_key(C.compose(g, k)))
                if hv in assignment and not C.mor_eq(assignment[hv], C.compose(g, kdag)):
                    return False
        for ov, og in assignment.items():
            ob, _ = by_var[ov]
            for k, kdag in links.get((var[0], _key(ob)), ()):
                if (var[0], C.mor_key(C.compose(og, k))) == var:
                    if not C.mor_eq(g, C.compose(og, kdag)):
                        return False
        return True

    def search(i):
        budget[0] -= 1
        if budget[0] < 0:
            raise ResourceError(f"algebra search on {carrier} exceeded RELMON_MAX_ENUM nodes")
        if i == len(variables):
            found.append(dict(assignment))
            return
        var = variables[i][2]
        for g in cands[var]:
            assignment[var] = g
            if consistent(var):
                search(i + 1)
            del assignment[var]

    search(0)
    return [table_algebra(T, carrier, tab, f"{carrier}#{j}") for j, tab in enumerate(found)]


def tabulate(alg: RelAlgebra, arities) -> RelAlgebra:
    """Freeze an algebra's action on the declared arities into a table."""
    T = alg.monad
    C, I = T.C, T.base.on_obj
    table = {}
    for a in arities:
        _require_complete(C, I(a), alg.carrier, "tabulate")
        for h in C.hom(I(a), alg.carrier):
            table[_key(a), C.mor_key(h)] = alg.act(a, h)
    return table_algebra(T, alg.carrier, table, alg.name)


def _same_algebra(C, t1, t2):
    return t1.keys() == t2.keys() and all(C.mor_eq(t1[k], t2[k]) for k in t1)


class EMCategory(FiniteCategory):
    """Algebras on a carrier pool with all algebra morphisms between them.

    Objects are labels ``"A0", "A1", ...``; morphism names are
    ``(src, dst, mor_key(f))`` and ``underlying[name]`` is the map ``f``.
    """

    def __init__(self, T, algebras, arities, *args, **kw):
        super().__init__(*args, **kw)
        self.monad = T
        self.algebras = algebras
        self.arities = arities
        self.underlying = {}

    def label_of(self, alg_table):
        C = self.monad.C
        for lab, alg in self.algebras.items():
            if alg.carrier == alg_table.carrier and _same_algebra(C, alg.table, alg_table.table):
                return lab
        raise StructuralError(f"algebra {alg_table.name} is not in the category")


def em_category(T: RelativeMonad, pool, arities=None) -> EMCategory:
    """All algebras with carriers in ``pool`` (lawful on ``arities``) and their morphisms."""
    C, I = T.C, T.base.on_obj
    arities = list(T.C0.objects() if arities is None else arities)
    algs = {}
    for carrier in pool:
        for alg in enumerate_algebras(T, carrier, arities):
            algs[f"A{len(algs)}"] = alg
    for lab, alg in algs.items():
        alg.name = lab
    morphisms, underlying = {}, {}
    for (la, A), (lb, B) in itertools.product(algs.items(), repeat=2):
        _require_complete(C, A.carrier, B.carrier, "em_category")
        for f in C.hom(A.carrier, B.carrier):
            ok = all(C.mor_eq(C.compose(f, A.act(a, h)), B.act(a, C.compose(f, h)))
                     for a in arities for h in C.hom(I(a), A.carrier))
            if ok:
                name = (la, lb, C.mor_key(f))
                morphisms[name] = (la, lb)
                underlying[name] = f
    identities = {}
    for lab, alg in algs.items():
        identities[lab] = (lab, lab, C.mor_key(C.identity(alg.carrier)))
    composition = {}
    for f, (a, b) in morphisms.items():
        for g, (b2, c) in morphisms.items():
            if b2 == b:
                h = C.compose(underlying[g], underlying[f])
                composition[g, f] = (a, c, C.mor_key(h))
    em = EMCategory(T, algs, arities, list(algs), morphisms, identities, composition,
                    f"EM({T.name})")
    em.underlying = underlying
    return em


def em_forgetful(em: EMCategory) -> Functor:
    return Functor(em, em.monad.C, lambda lab: em.algebras[lab].carrier,
                   lambda m: em.underlying[m], "U")


def em_free(em: EMCategory, domain) -> Functor:
    """``J: X0 -> EM`` on a test domain whose free algebras lie in the pool."""
    T = em.monad
    C = T.C
    labels = {}

    def obj(a):
        k = _key(a)
        if k not in labels:
            labels[k] = em.label_of(tabulate(free_algebra(T, a), em.arities))
        return labels[k]

    def mor(u):
        src, dst = obj(T.C0.dom(u)), obj(T.C0.cod(u))
        name = (src, dst, C.mor_key(T.fmap(u)))
        if name not in em.morphisms:
            raise StructuralError(f"T({u!r}) is not an algebra morphism")
        return name
    return Functor(domain, em, obj, mor, "J")


def check_em_relative_adjunction(T: RelativeMonad, pool, arities=None, cap=None) -> LawReport:
    """``J -|_I U`` for the EM category on ``pool``, and recovery of ``T``.

    Free algebras whose carrier is outside the pool are left out of the
    domain of ``J``; the report then carries a coverage note.
    """
    from .core import with_test_objects
    em = em_category(T, pool, arities)
    arities = em.arities
    C, I = T.C, T.base.on_obj
    rep = LawReport(f"EM relative adjunction of {T.name}")
    domain = []
    for a in arities:
        if T.on_obj(a) in pool:
            domain.append(a)
        else:
            rep.note(f"free algebra on {a} has carrier {T.on_obj(a)} outside the pool; skipped")
    if len(domain) < len(arities) or len(arities) < len(T.C0.objects()):
        rep.note("pool-restricted EM category: partial coverage")
    if not domain:
        rep.note("no free algebra lies in the pool")
        return rep
    X0 = with_test_objects(T.C0, domain)
    J = em_free(em, X0)
    U = em_forgetful(em)
    t = NatTrans(Functor(X0, C, T.base.on_obj, T.base.on_mor, T.base.name),
                 Functor(X0, C, lambda a: U.on_obj(J.on_obj(a)),
                         lambda u: U.on_mor(J.on_mor(u)), "UJ"),
                 T.unit, "t")
    for a in domain:
        rep.record("UJ=T.obj", U.on_obj(J.on_obj(a)) == T.on_obj(a), {"a": a},
                   U.on_obj(J.on_obj(a)), T.on_obj(a))
    rep.merge(check_relative_adjunction(J, U, t, cap))
    for a in domain:
        ta = T.unit(a)
        for lab in em.objects():
            N = em.algebras[lab]
            for name in em.hom(J.on_obj(a), lab):
                fbar = em.underlying[name]
                rep.expect_equal(C, "transpose.inverse.left",
                                 N.act(a, C.compose(fbar, ta)), fbar, a=a, N=lab, f=fbar)
            for f in C.hom(I(a), N.carrier):
                g = N.act(a, f)
                rep.expect_equal(C, "transpose.inverse.right", C.compose(g, ta), f,
                                 a=a, N=lab, f=f)
                ok = (J.on_obj(a), lab, C.mor_key(g)) in em.morphisms
                rep.record("transpose.is_morphism", ok, {"a": a, "N": lab, "f": f}, g, None)

    def transpose(x, y, k):
        return (J.on_obj(x), J.on_obj(y), C.mor_key(T.ext(x, y, k)))
    recovered = relmonad_from_adjunction(J, U, t, transpose, f"UJ[{T.name}]")
    sub = RelativeMonad(t.src, T.on_obj, T.unit, T.ext, T.name)
    compare_relmonads(sub, recovered, rep, "recovers.", cap)
    return rep
