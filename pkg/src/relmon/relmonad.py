"""Relative monads as Kleisli triples, ordinary monads, and their embedding.

A relative monad over ``I: C0 -> C`` has an object map ``T``, units
``t_x: Ix -> Tx`` and an extension ``k |-> k^dagger`` taking
``k: Ix -> Ty`` to ``Tx -> Ty``.  The functor action on ``u: x -> y`` is
always derived as ``(t_y . Iu)^dagger``.
"""

from __future__ import annotations

import itertools
from typing import Callable

from .core import (Functor, NatTrans, _cap, _key, check_functor, check_nat_trans,
                   identity_functor)
from .errors import LawViolationError, StructuralError
from .operators import HomOperator, check_operator
from .report import LawReport
from .sampling import product_sample


class RelativeMonad:
    def __init__(self, base: Functor, on_obj: Callable, unit: Callable, ext: Callable,
                 name="T"):
        self.base = base
        self.on_obj = on_obj
        self.unit = unit
        self.ext = ext
        self.name = name

    @property
    def C0(self):
        return self.base.src

    @property
    def C(self):
        return self.base.dst

    def fmap(self, u):
        """Derived action ``(t_y . Iu)^dagger`` on a morphism of the base domain."""
        x, y = self.C0.dom(u), self.C0.cod(u)
        return self.ext(x, y, self.C.compose(self.unit(y), self.base.on_mor(u)))

    def functor(self) -> Functor:
        return Functor(self.C0, self.C, self.on_obj, self.fmap, self.name)

    def ext_operator(self) -> HomOperator:
        S = self.functor()
        return HomOperator(self.base, S, S, S, self.ext, f"{self.name}-extension")

    def __repr__(self):
        return f"RelativeMonad({self.name} over {self.base.name})"


def functor_from_relmonad(T: RelativeMonad) -> Functor:
    return T.functor()


def unit_transformation(T: RelativeMonad) -> NatTrans:
    return NatTrans(T.base, T.functor(), T.unit, f"unit_{T.name}")


def _structure(T: RelativeMonad):
    C = T.C
    for x in T.C0.objects():
        tx = T.on_obj(x)
        if not C.is_object(tx):
            raise StructuralError(f"{T.name}({x}) = {tx!r} is not an object of the codomain")
        u = T.unit(x)
        if u is None or C.dom(u) != T.base.on_obj(x) or C.cod(u) != tx:
            raise StructuralError(f"{T.name}: unit at {x!r} is not a morphism I{x} -> {T.name}{x}")


def check_relative_monad(T: RelativeMonad, cap=None) -> LawReport:
    """Extension naturality, then left unit, right unit and associativity."""
    _structure(T)
    C0, C = T.C0, T.C
    cap = None if getattr(C, "tier", None) == "presented" else _cap(cap)
    rep = LawReport(f"relative monad {T.name}")
    rep.merge(check_operator(T.ext_operator(), cap), "ext.")
    for axiom in ("unit.left", "unit.right", "associativity"):
        rep.stat(axiom)
    objs = C0.objects()
    I, t, ext = T.base.on_obj, T.unit, T.ext
    for x in objs:
        rep.expect_equal(C, "unit.right", ext(x, x, t(x)), C.identity(T.on_obj(x)), x=x)
    for x, y in itertools.product(objs, repeat=2):
        inst, total = product_sample([C.hom(I(x), T.on_obj(y))], cap, f"lu:{x}:{y}")
        rep.declare("unit.left", total, len(inst))
        for (k,) in inst:
            rep.expect_equal(C, "unit.left", C.compose(ext(x, y, k), t(x)), k, x=x, y=y, k=k)
    for x, y, z in itertools.product(objs, repeat=3):
        inst, total = product_sample([C.hom(I(x), T.on_obj(y)), C.hom(I(y), T.on_obj(z))],
                                     cap, f"as:{x}:{y}:{z}")
        rep.declare("associativity", total, len(inst))
        for k, l in inst:
            ldag = ext(y, z, l)
            lhs = ext(x, z, C.compose(ldag, k))
            rhs = C.compose(ldag, ext(x, y, k))
            rep.expect_equal(C, "associativity", lhs, rhs, x=x, y=y, z=z, k=k, l=l)
    return rep


def check_relmonad_functor(T: RelativeMonad, cap=None) -> LawReport:
    """Functoriality of the derived action and naturality of the unit."""
    rep = LawReport(f"derived functor of {T.name}")
    rep.merge(check_functor(T.functor(), cap), "")
    rep.merge(check_nat_trans(unit_transformation(T), cap), "unit.")
    return rep


def compare_relmonads(T1: RelativeMonad, T2: RelativeMonad, rep: LawReport = None,
                      prefix="", cap=None) -> LawReport:
    """Extensional equality of two relative monads over the same base."""
    rep = rep or LawReport(f"{T1.name} = {T2.name}")
    C = T1.C
    objs = T1.C0.objects()
    for x in objs:
        rep.record(prefix + "equal.obj", T1.on_obj(x) == T2.on_obj(x), {"x": x},
                   T1.on_obj(x), T2.on_obj(x))
        rep.expect_equal(C, prefix + "equal.unit", T1.unit(x), T2.unit(x), x=x)
    rep.stat(prefix + "equal.ext")
    for x, y in itertools.product(objs, repeat=2):
        inst, total = product_sample([C.hom(T1.base.on_obj(x), T1.on_obj(y))], _cap(cap),
                                     f"cmp:{x}:{y}")
        rep.declare(prefix + "equal.ext", total, len(inst))
        for (k,) in inst:
            rep.expect_equal(C, prefix + "equal.ext", T1.ext(x, y, k), T2.ext(x, y, k),
                             x=x, y=y, k=k)
    return rep


def relmonad_from_adjunction(F: Functor, G: Functor, iota: NatTrans, transpose=None,
                             name=None) -> RelativeMonad:
    """The relative monad ``(GF, iota, k |-> G(k^flat))`` of a relative adjunction.

    ``transpose(x, y, k)`` gives ``k^flat: Fx -> Fy`` directly; without it
    the preimage is searched in the enumerated hom ``D(Fx, Fy)``.
    """
    C, D = G.dst, F.dst
    tables = {}

    def flat(x, y, k):
        if transpose is not None:
            return transpose(x, y, k)
        key = (_key(x), _key(y))
        if key not in tables:
            i = iota.component(x)
            tables[key] = {C.mor_key(C.compose(G.on_mor(f), i)): f
                           for f in D.hom(F.on_obj(x), F.on_obj(y))}
        try:
            return tables[key][C.mor_key(k)]
        except KeyError:
            raise StructuralError(f"no transpose for {k!r} at ({x}, {y})") from None

    return RelativeMonad(iota.src, lambda x: G.on_obj(F.on_obj(x)), iota.component,
                         lambda x, y, k: G.on_mor(flat(x, y, k)),
                         name or f"{G.name}{F.name}")


def identity_relmonad(C, name=None) -> RelativeMonad:
    return RelativeMonad(identity_functor(C), lambda x: x, C.identity,
                         lambda x, y, k: k, name or f"Id_{getattr(C, 'name', 'C')}")


# --------------------------------------------------------------------------
# ordinary monads


class Monad:
    """A monad ``(S, m, s)`` on a category, with ``m_x: SSx -> Sx`` and ``s_x: x -> Sx``."""

    def __init__(self, cat, functor: Functor, mult: Callable, unit: Callable, name=None):
        self.cat = cat
        self.functor = functor
        self.mult = mult
        self.unit = unit
        self.name = name or functor.name

    def obj(self, x):
        return self.functor.on_obj(x)

    def mor(self, f):
        return self.functor.on_mor(f)

    def __repr__(self):
        return f"Monad({self.name})"


def identity_monad(C, name=None) -> Monad:
    return Monad(C, identity_functor(C, name or "Id"), C.identity, C.identity, name or "Id")


def check_monad(M: Monad, cap=None) -> LawReport:
    """Functoriality, naturality of ``m`` and ``s``, unit and associativity laws."""
    C, S = M.cat, M.functor
    cap = None if getattr(C, "tier", None) == "presented" else _cap(cap)
    rep = LawReport(f"monad {M.name}")
    rep.merge(check_functor(S, cap), "")
    SS = Functor(C, C, lambda x: S.on_obj(S.on_obj(x)), lambda f: S.on_mor(S.on_mor(f)),
                 f"{S.name}{S.name}")
    rep.merge(check_nat_trans(NatTrans(SS, S, M.mult, "m"), cap), "mult.")
    rep.merge(check_nat_trans(NatTrans(identity_functor(C), S, M.unit, "s"), cap), "unit.")
    for x in C.objects():
        Sx = S.on_obj(x)
        m = M.mult(x)
        rep.expect_equal(C, "unit.left", C.compose(m, M.unit(Sx)), C.identity(Sx), x=x)
        rep.expect_equal(C, "unit.right", C.compose(m, S.on_mor(M.unit(x))), C.identity(Sx), x=x)
        rep.expect_equal(C, "associativity", C.compose(m, M.mult(Sx)),
                         C.compose(m, S.on_mor(m)), x=x)
    return rep


def embed_monad(M: Monad, verify=True, cap=None) -> RelativeMonad:
    """A monad as a relative monad over the identity, ``k^dagger = m_y . Sk``."""
    if verify:
        rep = check_monad(M, cap)
        if not rep.passed:
            raise LawViolationError(rep)
    C = M.cat
    return RelativeMonad(identity_functor(C), M.functor.on_obj, M.unit,
                         lambda x, y, k: C.compose(M.mult(y), M.functor.on_mor(k)),
                         M.name)
