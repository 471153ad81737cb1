"""Morphisms and transformations of relative monads.

A morphism from ``S`` (over ``I: X0 -> X``) to ``T`` (over ``J: Y0 -> Y``)
is ``(F, F0, phi)`` with ``F: X -> Y``, ``F0: X0 -> Y0``, ``FI = JF0`` and
``phi_A: F(SA) -> T(F0 A)``.  A transformation between parallel morphisms
is a pair ``(p, p0)`` of natural transformations ``F => F'``, ``F0 => F0'``.
"""

from __future__ import annotations

import itertools
from typing import Callable

from .core import (Functor, NatTrans, _cap, _key, check_nat_trans, compose_functors,
                   identity_functor)
from .errors import StructuralError
from .relmonad import RelativeMonad
from .report import LawReport
from .sampling import product_sample


class RelMonadMorphism:
    def __init__(self, src: RelativeMonad, dst: RelativeMonad, F: Functor, F0: Functor,
                 phi: Callable, name="phi"):
        self.src = src
        self.dst = dst
        self.F = F
        self.F0 = F0
        self.phi = phi
        self.name = name

    def __repr__(self):
        return f"RelMonadMorphism({self.name}: {self.src.name} -> {self.dst.name})"


class RelMonadTransformation:
    def __init__(self, src: RelMonadMorphism, dst: RelMonadMorphism, p: Callable,
                 p0: Callable, name="p"):
        self.src = src
        self.dst = dst
        self.p = p
        self.p0 = p0
        self.name = name

    def __repr__(self):
        return f"RelMonadTransformation({self.name}: {self.src.name} => {self.dst.name})"


def identity_morphism(T: RelativeMonad) -> RelMonadMorphism:
    return RelMonadMorphism(T, T, identity_functor(T.C), identity_functor(T.C0),
                            lambda a: T.C.identity(T.on_obj(a)), f"1_{T.name}")


def identity_transformation(f: RelMonadMorphism) -> RelMonadTransformation:
    Y, Y0 = f.dst.C, f.dst.C0
    return RelMonadTransformation(f, f, lambda x: Y.identity(f.F.on_obj(x)),
                                  lambda a: Y0.identity(f.F0.on_obj(a)), f"1_{f.name}")


def check_relmonad_morphism(m: RelMonadMorphism, cap=None) -> LawReport:
    """``FI = JF0``, naturality of ``phi``, unit law and extension law."""
    S, T = m.src, m.dst
    X0, X, Y = S.C0, S.C, T.C
    cap = _cap(cap)
    rep = LawReport(f"relative monad morphism {m.name}")
    for axiom in ("FI=JF0.obj", "FI=JF0.mor", "phi.naturality", "unit", "extension"):
        rep.stat(axiom)
    objs = X0.objects()
    phis = {}
    for a in objs:
        p = m.phi(a)
        if p is None or Y.dom(p) != m.F.on_obj(S.on_obj(a)) or Y.cod(p) != T.on_obj(m.F0.on_obj(a)):
            raise StructuralError(f"{m.name}: component at {a!r} has the wrong type")
        phis[_key(a)] = p
        lhs, rhs = m.F.on_obj(S.base.on_obj(a)), T.base.on_obj(m.F0.on_obj(a))
        rep.record("FI=JF0.obj", lhs == rhs, {"A": a}, lhs, rhs)
    for a, b in itertools.product(objs, repeat=2):
        inst, total = product_sample([X0.hom(a, b)], cap, f"mfi:{a}:{b}")
        rep.declare("FI=JF0.mor", total, len(inst))
        rep.declare("phi.naturality", total, len(inst))
        for (u,) in inst:
            rep.expect_equal(Y, "FI=JF0.mor", m.F.on_mor(S.base.on_mor(u)),
                             T.base.on_mor(m.F0.on_mor(u)), u=u)
            rep.expect_equal(Y, "phi.naturality",
                             Y.compose(T.fmap(m.F0.on_mor(u)), phis[_key(a)]),
                             Y.compose(phis[_key(b)], m.F.on_mor(S.fmap(u))), u=u)
    for a in objs:
        rep.expect_equal(Y, "unit", Y.compose(phis[_key(a)], m.F.on_mor(S.unit(a))),
                         T.unit(m.F0.on_obj(a)), A=a)
    for a, b in itertools.product(objs, repeat=2):
        inst, total = product_sample([X.hom(S.base.on_obj(a), S.on_obj(b))], cap,
                                     f"mext:{a}:{b}")
        rep.declare("extension", total, len(inst))
        pa, pb = phis[_key(a)], phis[_key(b)]
        fa, fb = m.F0.on_obj(a), m.F0.on_obj(b)
        for (k,) in inst:
            lhs = Y.compose(pb, m.F.on_mor(S.ext(a, b, k)))
            rhs = Y.compose(T.ext(fa, fb, Y.compose(pb, m.F.on_mor(k))), pa)
            rep.expect_equal(Y, "extension", lhs, rhs, A=a, B=b, k=k)
    return rep


def _check_parallel(t: RelMonadTransformation):
    f, g = t.src, t.dst
    if f.src is not g.src or f.dst is not g.dst:
        raise StructuralError(f"{t.name}: morphisms are not parallel")


def check_relmonad_transformation(t: RelMonadTransformation, cap=None) -> LawReport:
    """Naturality of ``p`` and ``p0``, ``Jp0 = pI`` and ``Tp0 . phi = phi' . pS``."""
    _check_parallel(t)
    f, g = t.src, t.dst
    S, T = f.src, f.dst
    Y = T.C
    rep = LawReport(f"relative monad transformation {t.name}")
    rep.stat("Jp0=pI")
    rep.stat("square")
    rep.merge(check_nat_trans(NatTrans(f.F, g.F, t.p, "p"), cap), "p.")
    rep.merge(check_nat_trans(NatTrans(f.F0, g.F0, t.p0, "p0"), cap), "p0.")
    for a in S.C0.objects():
        rep.expect_equal(Y, "Jp0=pI", T.base.on_mor(t.p0(a)), t.p(S.base.on_obj(a)), A=a)
        lhs = Y.compose(T.fmap(t.p0(a)), f.phi(a))
        rhs = Y.compose(g.phi(a), t.p(S.on_obj(a)))
        rep.expect_equal(Y, "square", lhs, rhs, A=a)
    return rep


def compose_relmonad_morphisms(g: RelMonadMorphism, f: RelMonadMorphism) -> RelMonadMorphism:
    """``(G, G0, psi) . (F, F0, phi) = (GF, G0F0, psi F0 . G phi)``."""
    if f.dst is not g.src:
        raise StructuralError(f"cannot compose {g.name} after {f.name}")
    U = g.dst.C

    def phi(a):
        return U.compose(g.phi(f.F0.on_obj(a)), g.F.on_mor(f.phi(a)))
    return RelMonadMorphism(f.src, g.dst, compose_functors(g.F, f.F),
                            compose_functors(g.F0, f.F0), phi, f"{g.name}.{f.name}")


def whisker_left(g: RelMonadMorphism, t: RelMonadTransformation) -> RelMonadTransformation:
    """``g t: g f => g f'`` with components ``G p`` and ``G0 p0``."""
    return RelMonadTransformation(compose_relmonad_morphisms(g, t.src),
                                  compose_relmonad_morphisms(g, t.dst),
                                  lambda x: g.F.on_mor(t.p(x)),
                                  lambda a: g.F0.on_mor(t.p0(a)), f"{g.name}{t.name}")


def whisker_right(t: RelMonadTransformation, h: RelMonadMorphism) -> RelMonadTransformation:
    """``t h: f h => f' h`` with components ``p_{Hx}`` and ``p0_{H0 a}``."""
    return RelMonadTransformation(compose_relmonad_morphisms(t.src, h),
                                  compose_relmonad_morphisms(t.dst, h),
                                  lambda x: t.p(h.F.on_obj(x)),
                                  lambda a: t.p0(h.F0.on_obj(a)), f"{t.name}{h.name}")


def morphisms_equal(f: RelMonadMorphism, g: RelMonadMorphism, rep: LawReport,
                    prefix="", cap=None) -> LawReport:
    """Extensional equality of two parallel morphisms on the test domain."""
    from .core import functors_equal
    functors_equal(f.F, g.F, rep, prefix + "F", cap=_cap(cap))
    functors_equal(f.F0, g.F0, rep, prefix + "F0", cap=_cap(cap))
    for a in f.src.C0.objects():
        rep.expect_equal(f.dst.C, prefix + "phi", f.phi(a), g.phi(a), A=a)
    return rep


def transformations_equal(s: RelMonadTransformation, t: RelMonadTransformation,
                          rep: LawReport, prefix="") -> LawReport:
    S = s.src.src
    for x in S.C.objects():
        rep.expect_equal(s.src.dst.C, prefix + "p", s.p(x), t.p(x), x=x)
    for a in S.C0.objects():
        rep.expect_equal(s.src.dst.C0, prefix + "p0", s.p0(a), t.p0(a), A=a)
    return rep
