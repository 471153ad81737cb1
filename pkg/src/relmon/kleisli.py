"""The Kleisli category of a relative monad and relative right modules.

``Kl(T)`` has the objects of ``X0`` and morphisms ``x -> y`` the maps
``Ix -> Ty``; the identity is ``t_x`` and ``g . f = g^dagger . f``.  A right
module is a functor ``M: X0 -> K`` with an operator ``[I, T] -> [M, M]``;
modules correspond to functors out of ``Kl(T)``.
"""

from __future__ import annotations

import itertools
from typing import Callable

from .core import Functor, NatTrans, _cap, _key, compose_functors, export_presented
from .errors import StructuralError
from .operators import HomOperator, check_operator, check_relative_adjunction
from .relmonad import RelativeMonad, compare_relmonads, relmonad_from_adjunction
from .report import LawReport, show
from .sampling import product_sample


class KlMor:
    """A Kleisli morphism ``src -> dst`` with underlying map ``f: I src -> T dst``."""

    __slots__ = ("src", "dst", "f")

    def __init__(self, src, dst, f):
        self.src = src
        self.dst = dst
        self.f = f

    def to_json(self):
        return {"src": show(self.src), "dst": show(self.dst), "map": show(self.f)}

    def __repr__(self):
        return f"KlMor({self.src} -> {self.dst}: {self.f!r})"


class KleisliCategory:
    tier = "computable"

    def __init__(self, T: RelativeMonad):
        self.monad = T
        self.name = f"Kl({T.name})"
        self._homs = {}

    def objects(self):
        return self.monad.C0.objects()

    def is_object(self, a):
        return self.monad.C0.is_object(a)

    def hom(self, a, b):
        key = (_key(a), _key(b))
        if key not in self._homs:
            T = self.monad
            self._homs[key] = [KlMor(a, b, f)
                               for f in T.C.hom(T.base.on_obj(a), T.on_obj(b))]
        return self._homs[key]

    def hom_complete(self, a, b):
        T = self.monad
        return T.C.hom_complete(T.base.on_obj(a), T.on_obj(b))

    def hom_size(self, a, b):
        T = self.monad
        size = getattr(T.C, "hom_size", None)
        return size(T.base.on_obj(a), T.on_obj(b)) if size else None

    def identity(self, a):
        return KlMor(a, a, self.monad.unit(a))

    def compose(self, g, f):
        if f.dst != g.src:
            raise StructuralError(f"{self.name}: cannot compose {g!r} after {f!r}")
        T = self.monad
        return KlMor(f.src, g.dst, T.C.compose(T.ext(g.src, g.dst, g.f), f.f))

    def dom(self, f):
        return f.src

    def cod(self, f):
        return f.dst

    def mor_diff(self, f, g):
        if f.src != g.src or f.dst != g.dst:
            return (None, f"{f.src}->{f.dst}", f"{g.src}->{g.dst}")
        return self.monad.C.mor_diff(f.f, g.f)

    def mor_eq(self, f, g):
        return self.mor_diff(f, g) is None

    def mor_key(self, f):
        return (_key(f.src), _key(f.dst), self.monad.C.mor_key(f.f))

    def show(self, f):
        return f.to_json()

    def __repr__(self):
        return self.name


def kleisli_category(T: RelativeMonad):
    """``(Kl(T), J0, U, t)`` with ``J0 u = t_y . Iu``, ``U f = f^dagger`` and ``t: I => U J0``."""
    Kl = KleisliCategory(T)
    C = T.C

    def j0(u):
        y = T.C0.cod(u)
        return KlMor(T.C0.dom(u), y, C.compose(T.unit(y), T.base.on_mor(u)))
    J0 = Functor(T.C0, Kl, lambda x: x, j0, "J0")
    U = Functor(Kl, C, T.on_obj, lambda f: T.ext(f.src, f.dst, f.f), "U")
    t = NatTrans(T.base, compose_functors(U, J0), T.unit, "t")
    return Kl, J0, U, t


def check_kleisli_relative_adjunction(T: RelativeMonad, cap=None) -> LawReport:
    """``J0 -|_I U`` and recovery of ``T`` from it."""
    Kl, J0, U, t = kleisli_category(T)
    rep = LawReport(f"Kleisli relative adjunction of {T.name}")
    rep.merge(check_relative_adjunction(J0, U, t, cap))
    recovered = relmonad_from_adjunction(J0, U, t, lambda x, y, k: KlMor(x, y, k),
                                         f"UJ0[{T.name}]")
    compare_relmonads(T, recovered, rep, "recovers.", cap)
    return rep


def export_kleisli(T: RelativeMonad, obj_label=str):
    """``Kl(T)`` as a presented category (needs complete finite homs)."""
    return export_presented(KleisliCategory(T), obj_label, f"Kl({T.name})")


# --------------------------------------------------------------------------
# right modules


class RelRightModule:
    def __init__(self, monad: RelativeMonad, M: Functor, act: Callable, name="M"):
        self.monad = monad
        self.M = M
        self.act = act
        self.name = name

    def operator(self) -> HomOperator:
        return HomOperator(self.monad.base, self.monad.functor(), self.M, self.M,
                           self.act, f"({self.name})_m")

    def __repr__(self):
        return f"RelRightModule({self.name})"


def check_right_module(mod: RelRightModule, cap=None) -> LawReport:
    """Operator naturality, ``act(t_a) = 1`` and ``act(l) . act(k) = act(l^dagger . k)``."""
    T, M = mod.monad, mod.M
    C, K = T.C, M.dst
    cap = _cap(cap)
    rep = LawReport(f"right module {mod.name}")
    rep.merge(check_operator(mod.operator(), cap), "act.")
    rep.stat("unit")
    rep.stat("associativity")
    objs = T.C0.objects()
    for a in objs:
        rep.expect_equal(K, "unit", mod.act(a, a, T.unit(a)), K.identity(M.on_obj(a)), a=a)
    I = T.base.on_obj
    for a, b, c in itertools.product(objs, repeat=3):
        inst, total = product_sample([C.hom(I(a), T.on_obj(b)), C.hom(I(b), T.on_obj(c))],
                                     cap, f"rm:{a}:{b}:{c}")
        rep.declare("associativity", total, len(inst))
        for k, l in inst:
            lhs = K.compose(mod.act(b, c, l), mod.act(a, b, k))
            rhs = mod.act(a, c, C.compose(T.ext(b, c, l), k))
            rep.expect_equal(K, "associativity", lhs, rhs, a=a, b=b, c=c, k=k, l=l)
    return rep


def module_from_functor(T: RelativeMonad, N: Functor) -> RelRightModule:
    """``(NT, N(-)^dagger)`` for a functor ``N`` out of the codomain of ``T``."""
    M = compose_functors(N, T.functor(), f"{N.name}{T.name}")
    return RelRightModule(T, M, lambda a, b, k: N.on_mor(T.ext(a, b, k)), f"{N.name}{T.name}")


def tautological_module(T: RelativeMonad, kl=None) -> RelRightModule:
    Kl, J0, _, _ = kl or kleisli_category(T)
    return RelRightModule(T, J0, lambda a, b, k: KlMor(a, b, k), "J0")


def module_to_functor(mod: RelRightModule, Kl: KleisliCategory) -> Functor:
    """``Mbar: Kl(T) -> K`` with ``Mbar f = act(f)``; ``Mbar J0 = M``."""
    return Functor(Kl, mod.M.dst, mod.M.on_obj, lambda f: mod.act(f.src, f.dst, f.f),
                   f"{mod.name}bar")


def functor_to_module(Mbar: Functor, T: RelativeMonad, J0: Functor) -> RelRightModule:
    """``M = Mbar J0`` with ``act(k) = Mbar(k)``."""
    M = compose_functors(Mbar, J0, f"{Mbar.name}J0")
    return RelRightModule(T, M, lambda a, b, k: Mbar.on_mor(KlMor(a, b, k)), M.name)


def modules_equal(m1: RelRightModule, m2: RelRightModule, rep: LawReport, prefix="", cap=None):
    T = m1.monad
    C, K, I = T.C, m1.M.dst, T.base.on_obj
    objs = T.C0.objects()
    for a in objs:
        rep.record(prefix + "M.obj", m1.M.on_obj(a) == m2.M.on_obj(a), {"a": a},
                   m1.M.on_obj(a), m2.M.on_obj(a))
    for a, b in itertools.product(objs, repeat=2):
        inst, total = product_sample([T.C0.hom(a, b)], _cap(cap), f"meq:{a}:{b}")
        rep.declare(prefix + "M.mor", total, len(inst))
        for (u,) in inst:
            rep.expect_equal(K, prefix + "M.mor", m1.M.on_mor(u), m2.M.on_mor(u), u=u)
        inst, total = product_sample([C.hom(I(a), T.on_obj(b))], _cap(cap), f"meqa:{a}:{b}")
        rep.declare(prefix + "act", total, len(inst))
        for (k,) in inst:
            rep.expect_equal(K, prefix + "act", m1.act(a, b, k), m2.act(a, b, k), k=k)
    return rep
