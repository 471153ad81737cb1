"""Compatible monad pairs, relative distributive laws and their Beck forms.

Setting: a relative monad ``T`` over ``I: X0 -> X``, a monad ``(S, m, s)``
on ``X`` and a monad ``(S0, m0, s0)`` on ``X0`` with ``SI = IS0``,
``mI = Im0`` and ``sI = Is0``.  A relative distributive law is a family
``d_A: S(TA) -> T(S0 A)``.  Its two equivalent forms are a lifting of ``T``
to algebras (an S-algebra structure on ``TM`` for every S0-algebra ``M``)
and an extension of ``S`` to the Kleisli category of ``T``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from .core import Functor, _cap, _key
from .errors import StructuralError
from .kleisli import KlMor, kleisli_category
from .relmonad import Monad, RelativeMonad, check_monad
from .report import LawReport
from .rmd import (RelMonadMorphism, RelMonadTransformation, check_relmonad_morphism,
                  check_relmonad_transformation, compose_relmonad_morphisms,
                  identity_morphism)
from .sampling import product_sample


@dataclass
class MonadAlgebra:
    """An algebra ``structure: S(carrier) -> carrier`` for an ordinary monad.

    ``free_on`` records the generating object when this is the free algebra
    ``(S A, m_A)``.
    """

    carrier: object
    structure: object
    name: str = "M"
    free_on: object = None


def free_monad_algebra(S: Monad, a) -> MonadAlgebra:
    return MonadAlgebra(S.obj(a), S.mult(a), f"free({a})", free_on=a)


def check_monad_algebra(S: Monad, alg: MonadAlgebra, prefix="") -> LawReport:
    C = S.cat
    rep = LawReport(f"algebra {alg.name}")
    M, h = alg.carrier, alg.structure
    if C.dom(h) != S.obj(M) or C.cod(h) != M:
        raise StructuralError(f"{alg.name}: structure map has the wrong type")
    rep.expect_equal(C, prefix + "unit", C.compose(h, S.unit(M)), C.identity(M), algebra=alg.name)
    rep.expect_equal(C, prefix + "associativity", C.compose(h, S.mor(h)),
                     C.compose(h, S.mult(M)), algebra=alg.name)
    return rep


@dataclass
class CompatiblePair:
    I: Functor
    S: Monad
    S0: Monad
    name: str = "(S,S0)"
    algebra_pool: list = field(default_factory=list)
    free_arities: list = field(default_factory=list)

    @property
    def X(self):
        return self.I.dst

    @property
    def X0(self):
        return self.I.src

    def pool(self) -> list:
        """S0-algebras used to instantiate lifting conditions (declared pool + free ones)."""
        return list(self.algebra_pool) + [free_monad_algebra(self.S0, a) for a in self.free_arities]


def check_compatible_pair(p: CompatiblePair, cap=None, monads=True) -> LawReport:
    """``SI = IS0`` on objects and morphisms, ``mI = Im0``, ``sI = Is0``."""
    X, X0, I, S, S0 = p.X, p.X0, p.I, p.S, p.S0
    rep = LawReport(f"compatible pair {p.name}")
    if monads:
        rep.merge(check_monad(S, cap), "S.")
        rep.merge(check_monad(S0, cap), "S0.")
    for axiom in ("SI=IS0.obj", "SI=IS0.mor", "mI=Im0", "sI=Is0"):
        rep.stat(axiom)
    objs = X0.objects()
    for a in objs:
        lhs, rhs = S.obj(I.on_obj(a)), I.on_obj(S0.obj(a))
        rep.record("SI=IS0.obj", lhs == rhs, {"A": a}, lhs, rhs)
        rep.expect_equal(X, "mI=Im0", S.mult(I.on_obj(a)), I.on_mor(S0.mult(a)), A=a)
        rep.expect_equal(X, "sI=Is0", S.unit(I.on_obj(a)), I.on_mor(S0.unit(a)), A=a)
    for a, b in itertools.product(objs, repeat=2):
        inst, total = product_sample([X0.hom(a, b)], _cap(cap), f"cp:{a}:{b}")
        rep.declare("SI=IS0.mor", total, len(inst))
        for (u,) in inst:
            rep.expect_equal(X, "SI=IS0.mor", S.mor(I.on_mor(u)), I.on_mor(S0.mor(u)), u=u)
    return rep


# --------------------------------------------------------------------------
# distributive laws


class RelDistLaw:
    def __init__(self, T: RelativeMonad, pair: CompatiblePair, d: Callable, name="d"):
        self.T = T
        self.pair = pair
        self.d = d
        self.name = name

    def __repr__(self):
        return f"RelDistLaw({self.name})"


def _check_d_types(T, pair, d, objs, who):
    X, S, S0 = T.C, pair.S, pair.S0
    out = {}
    for a in objs:
        da = d(a)
        want = (S.obj(T.on_obj(a)), T.on_obj(S0.obj(a)))
        if da is None or (X.dom(da), X.cod(da)) != want:
            raise StructuralError(f"{who}: component at {a!r} is not S(TA) -> T(S0 A)")
        out[_key(a)] = da
    return out


def check_rel_dist_law(l: RelDistLaw, cap=None, d3_cap=None) -> LawReport:
    """Naturality of ``d`` first, then the axioms D1 to D4 element-wise.

    D1: ``Tm0 . dS0 . Sd = d . mT``; D2: ``d . sT = Ts0``;
    D3: ``(d_B . Sf)^dagger . d_A = d_B . S(f^dagger)`` for ``f: IA -> TB``;
    D4: ``d . St = tS0``.
    """
    T, p = l.T, l.pair
    X, X0, S, S0 = T.C, T.C0, p.S, p.S0
    cap = _cap(cap)
    d3_cap = cap if d3_cap is None else d3_cap
    objs = X0.objects()
    ds = _check_d_types(T, p, l.d, objs, l.name)
    rep = LawReport(f"relative distributive law {l.name}")
    for axiom in ("naturality", "D1", "D2", "D3", "D4"):
        rep.stat(axiom)
    for a, b in itertools.product(objs, repeat=2):
        inst, total = product_sample([X0.hom(a, b)], cap, f"dn:{a}:{b}")
        rep.declare("naturality", total, len(inst))
        for (u,) in inst:
            lhs = X.compose(T.fmap(S0.mor(u)), ds[_key(a)])
            rhs = X.compose(ds[_key(b)], S.mor(T.fmap(u)))
            rep.expect_equal(X, "naturality", lhs, rhs, u=u)
    for a in objs:
        da = ds[_key(a)]
        s0a = S0.obj(a)
        lhs = X.compose(T.fmap(S0.mult(a)), X.compose(l.d(s0a), S.mor(da)))
        rhs = X.compose(da, S.mult(T.on_obj(a)))
        rep.expect_equal(X, "D1", lhs, rhs, A=a)
        rep.expect_equal(X, "D2", X.compose(da, S.unit(T.on_obj(a))), T.fmap(S0.unit(a)), A=a)
        rep.expect_equal(X, "D4", X.compose(da, S.mor(T.unit(a))), T.unit(s0a), A=a)
    for a, b in itertools.product(objs, repeat=2):
        inst, total = product_sample([X.hom(T.base.on_obj(a), T.on_obj(b))], d3_cap,
                                     f"d3:{a}:{b}")
        rep.declare("D3", total, len(inst))
        da, db = ds[_key(a)], ds[_key(b)]
        sa, sb = S0.obj(a), S0.obj(b)
        for (f,) in inst:
            lhs = X.compose(T.ext(sa, sb, X.compose(db, S.mor(f))), da)
            rhs = X.compose(db, S.mor(T.ext(a, b, f)))
            rep.expect_equal(X, "D3", lhs, rhs, A=a, B=b, f=f)
    return rep


def laws_equal(d1: Callable, d2: Callable, X, objs, rep: LawReport, axiom="d.equal"):
    """Component-wise equality on every enumerated input element."""
    for a in objs:
        rep.expect_equal(X, axiom, d1(a), d2(a), A=a)
    return rep


def distributive_law_as_monad(l: RelDistLaw):
    """``((S, S0, d), (m, m0), (s, s0))`` as cells over the relative monad ``T``."""
    T, p = l.T, l.pair
    one = RelMonadMorphism(T, T, p.S.functor, p.S0.functor, l.d, f"(S,S0,{l.name})")
    two = compose_relmonad_morphisms(one, one)
    mult = RelMonadTransformation(two, one, p.S.mult, p.S0.mult, "(m,m0)")
    unit = RelMonadTransformation(identity_morphism(T), one, p.S.unit, p.S0.unit, "(s,s0)")
    return one, mult, unit


def check_distributive_law_as_monad(l: RelDistLaw, cap=None) -> LawReport:
    one, mult, unit = distributive_law_as_monad(l)
    rep = LawReport(f"{l.name} as a monad on {l.T.name}")
    rep.merge(check_relmonad_morphism(one, cap), "morphism.")
    rep.merge(check_relmonad_transformation(mult, cap), "mult.")
    rep.merge(check_relmonad_transformation(unit, cap), "unit.")
    return rep


# --------------------------------------------------------------------------
# liftings to algebras


class LiftingToAlgebras:
    """``assign(M)`` is an S-algebra structure ``S(TM) -> TM`` for each S0-algebra ``M``."""

    def __init__(self, T: RelativeMonad, pair: CompatiblePair, assign: Callable, name="That"):
        self.T = T
        self.pair = pair
        self.assign = assign
        self.name = name

    def __repr__(self):
        return f"LiftingToAlgebras({self.name})"


def _algebra_morphisms(p: CompatiblePair, M: MonadAlgebra, N: MonadAlgebra, cap):
    """S0-algebra morphisms ``M -> N``: enumerated when the hom is complete,
    generated as ``n . S0 g`` when ``M`` is free on ``A``."""
    X0, S0 = p.X0, p.S0
    out = []
    if M.free_on is not None:
        A = M.free_on
        inst, _ = product_sample([X0.hom(A, N.carrier)], cap, f"gen:{M.name}:{N.name}")
        out += [X0.compose(N.structure, S0.mor(g)) for (g,) in inst]
    elif X0.hom_complete(M.carrier, N.carrier):
        for f in X0.hom(M.carrier, N.carrier):
            if X0.mor_eq(X0.compose(f, M.structure), X0.compose(N.structure, S0.mor(f))):
                out.append(f)
    inst, _ = product_sample([out], cap, f"am:{M.name}:{N.name}")
    return [f for (f,) in inst]


def check_lifting(L: LiftingToAlgebras, cap=None) -> LawReport:
    """Conditions (i) to (iii) over the pair's algebra pool, plus the
    structure formula ``assign(M, m) = Tm . assign(free S0 M) . S(T s0_M)``."""
    T, p = L.T, L.pair
    X, I, S, S0 = T.C, T.base, p.S, p.S0
    cap = _cap(cap)
    pool = p.pool()
    rep = LawReport(f"lifting {L.name}")
    for axiom in ("i.morphisms", "ii", "iii", "structure"):
        rep.stat(axiom)
    if not pool:
        rep.note("empty algebra pool: conditions are vacuous")
        return rep
    hats = {}
    for M in pool:
        h = L.assign(M)
        TM = T.on_obj(M.carrier)
        if h is None or X.dom(h) != S.obj(TM) or X.cod(h) != TM:
            raise StructuralError(f"{L.name}: structure on T({M.name}) has the wrong type")
        hats[M.name] = h
        rep.merge(check_monad_algebra(S, MonadAlgebra(TM, h, f"T({M.name})")), "i.algebra.")
        rep.expect_equal(X, "iii", X.compose(h, S.mor(T.unit(M.carrier))),
                         X.compose(T.unit(M.carrier), I.on_mor(M.structure)), M=M.name)
        free = free_monad_algebra(S0, M.carrier)
        formula = X.compose(T.fmap(M.structure),
                            X.compose(L.assign(free), S.mor(T.fmap(S0.unit(M.carrier)))))
        rep.expect_equal(X, "structure", h, formula, M=M.name)
    premises = 0
    for M, N in itertools.product(pool, repeat=2):
        hm, hn = hats[M.name], hats[N.name]
        for f in _algebra_morphisms(p, M, N, cap):
            Tf = T.fmap(f)
            rep.expect_equal(X, "i.morphisms", X.compose(Tf, hm), X.compose(hn, S.mor(Tf)),
                             M=M.name, N=N.name, f=f)
        IM, TN = I.on_obj(M.carrier), T.on_obj(N.carrier)
        cands = []
        if M.free_on is not None:
            A = M.free_on
            inst, _ = product_sample([X.hom(I.on_obj(A), TN)], cap, f"iig:{M.name}:{N.name}")
            cands += [X.compose(hn, S.mor(g)) for (g,) in inst]
        else:
            inst, _ = product_sample([X.hom(IM, TN)], None, f"ii:{M.name}:{N.name}")
            cands += [f for (f,) in inst]
        for f in cands:
            if not X.mor_eq(X.compose(f, I.on_mor(M.structure)), X.compose(hn, S.mor(f))):
                continue
            premises += 1
            fdag = T.ext(M.carrier, N.carrier, f)
            rep.expect_equal(X, "ii", X.compose(hn, S.mor(fdag)), X.compose(fdag, hm),
                             M=M.name, N=N.name, f=f)
    if premises == 0:
        rep.note("condition (ii): no instance satisfied the premise")
    return rep


def distr_to_lifting(l: RelDistLaw) -> LiftingToAlgebras:
    """``assign(M, m) = Tm . d_M``."""
    T, X = l.T, l.T.C
    return LiftingToAlgebras(T, l.pair,
                             lambda M: X.compose(T.fmap(M.structure), l.d(M.carrier)),
                             f"lift[{l.name}]")


def lifting_to_distr(L: LiftingToAlgebras) -> RelDistLaw:
    """``d_A = assign(free S0 A) . S(T s0_A)``."""
    T, p, X = L.T, L.pair, L.T.C

    def d(a):
        return X.compose(L.assign(free_monad_algebra(p.S0, a)), p.S.mor(T.fmap(p.S0.unit(a))))
    return RelDistLaw(T, p, d, f"distr[{L.name}]")


def liftings_equal(L1: LiftingToAlgebras, L2: LiftingToAlgebras, rep: LawReport,
                   axiom="lifting.equal"):
    X = L1.T.C
    for M in L1.pair.pool():
        rep.expect_equal(X, axiom, L1.assign(M), L2.assign(M), M=M.name)
    return rep


# --------------------------------------------------------------------------
# Kleisli extensions


class KleisliExtension:
    """A monad ``Stilde`` on ``Kl(T)`` with the 2-cell ``d: SU => U Stilde``."""

    def __init__(self, T: RelativeMonad, pair: CompatiblePair, kl, Stilde: Monad,
                 d: Callable, name="Stilde"):
        self.T = T
        self.pair = pair
        self.kl = kl
        self.Stilde = Stilde
        self.d = d
        self.name = name

    def __repr__(self):
        return f"KleisliExtension({self.name})"


def distr_to_kleisli_extension(l: RelDistLaw, kl=None) -> KleisliExtension:
    """``Stilde x = S0 x``, ``Stilde f = d_y . Sf``, unit and multiplication ``J0 s0``, ``J0 m0``."""
    T, p = l.T, l.pair
    kl = kl or kleisli_category(T)
    Kl, J0 = kl[0], kl[1]
    X, S, S0 = T.C, p.S, p.S0

    def on_mor(f):
        return KlMor(S0.obj(f.src), S0.obj(f.dst), X.compose(l.d(f.dst), S.mor(f.f)))
    St = Functor(Kl, Kl, S0.obj, on_mor, "Stilde")
    monad = Monad(Kl, St, lambda x: J0.on_mor(S0.mult(x)), lambda x: J0.on_mor(S0.unit(x)),
                  f"ext[{l.name}]")
    return KleisliExtension(T, p, kl, monad, l.d, f"ext[{l.name}]")


def check_kleisli_extension(e: KleisliExtension, cap=None) -> LawReport:
    """Monad laws on ``Kl(T)`` and conditions (i) to (iii).

    (i) ``Stilde J0 = J0 S0``, ``mtilde J0 = J0 m0``, ``stilde J0 = J0 s0``;
    (ii) ``U`` with ``d`` is a monad morphism to ``(X, S)``;
    (iii) ``d . St = tS0``.  The remaining condition follows from these
    in categories and functors, so it is not checked.
    """
    T, p = e.T, e.pair
    Kl, J0, U, _ = e.kl
    X, X0, S, S0 = T.C, T.C0, p.S, p.S0
    St = e.Stilde
    cap = _cap(cap)
    rep = LawReport(f"Kleisli extension {e.name}")
    rep.merge(check_monad(St, cap), "monad.")
    for axiom in ("i.SJ0=J0S0.obj", "i.SJ0=J0S0.mor", "i.mJ0=J0m0", "i.sJ0=J0s0",
                  "ii.naturality", "ii.unit", "ii.mult", "iii"):
        rep.stat(axiom)
    objs = X0.objects()
    ds = _check_d_types(T, p, e.d, objs, e.name)
    for a in objs:
        lhs, rhs = St.obj(J0.on_obj(a)), J0.on_obj(S0.obj(a))
        rep.record("i.SJ0=J0S0.obj", lhs == rhs, {"x": a}, lhs, rhs)
        rep.expect_equal(Kl, "i.mJ0=J0m0", St.mult(J0.on_obj(a)), J0.on_mor(S0.mult(a)), x=a)
        rep.expect_equal(Kl, "i.sJ0=J0s0", St.unit(J0.on_obj(a)), J0.on_mor(S0.unit(a)), x=a)
        da = ds[_key(a)]
        Ua = U.on_obj(a)
        rep.expect_equal(X, "ii.unit", X.compose(da, S.unit(Ua)), U.on_mor(St.unit(a)), x=a)
        rhs = X.compose(U.on_mor(St.mult(a)), X.compose(e.d(St.obj(a)), S.mor(da)))
        rep.expect_equal(X, "ii.mult", X.compose(da, S.mult(Ua)), rhs, x=a)
        rep.expect_equal(X, "iii", X.compose(da, S.mor(T.unit(a))), T.unit(S0.obj(a)), x=a)
    for a, b in itertools.product(objs, repeat=2):
        inst, total = product_sample([X0.hom(a, b)], cap, f"kj:{a}:{b}")
        rep.declare("i.SJ0=J0S0.mor", total, len(inst))
        for (u,) in inst:
            rep.expect_equal(Kl, "i.SJ0=J0S0.mor", St.mor(J0.on_mor(u)), J0.on_mor(S0.mor(u)), u=u)
        inst, total = product_sample([Kl.hom(a, b)], cap, f"kn:{a}:{b}")
        rep.declare("ii.naturality", total, len(inst))
        for (f,) in inst:
            lhs = X.compose(ds[_key(b)], S.mor(U.on_mor(f)))
            rhs = X.compose(U.on_mor(St.mor(f)), ds[_key(a)])
            rep.expect_equal(X, "ii.naturality", lhs, rhs, f=f)
    rep.note("condition (iv) is implied by (i)-(iii) here and is not checked separately")
    return rep


def kleisli_extension_to_distr(e: KleisliExtension) -> RelDistLaw:
    """Read ``d`` off the monad-morphism 2-cell of ``U``."""
    return RelDistLaw(e.T, e.pair, e.d, f"distr[{e.name}]")


def kleisli_extensions_equal(e1: KleisliExtension, e2: KleisliExtension, rep: LawReport,
                             prefix="", cap=None):
    Kl = e1.kl[0]
    X = e1.T.C
    objs = e1.T.C0.objects()
    for a in objs:
        rep.record(prefix + "obj", e1.Stilde.obj(a) == e2.Stilde.obj(a), {"x": a},
                   e1.Stilde.obj(a), e2.Stilde.obj(a))
        rep.expect_equal(Kl, prefix + "mult", e1.Stilde.mult(a), e2.Stilde.mult(a), x=a)
        rep.expect_equal(Kl, prefix + "unit", e1.Stilde.unit(a), e2.Stilde.unit(a), x=a)
        rep.expect_equal(X, prefix + "d", e1.d(a), e2.d(a), x=a)
    for a, b in itertools.product(objs, repeat=2):
        inst, total = product_sample([Kl.hom(a, b)], _cap(cap), f"keq:{a}:{b}")
        rep.declare(prefix + "mor", total, len(inst))
        for (f,) in inst:
            rep.expect_equal(Kl, prefix + "mor", e1.Stilde.mor(f), e2.Stilde.mor(f), f=f)
    return rep
