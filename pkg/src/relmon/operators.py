"""Hom-indexed operators between cospans and relative adjunctions.

An operator ``[F, G] -> [F', G']`` is stored in reduced form: for objects
``x`` of ``dom F`` and ``y`` of ``dom G`` a function
``Z(Fx, Gy) -> Z'(F'x, G'y)``, written ``f |-> f#``.
"""

from __future__ import annotations

import itertools
from typing import Callable

from .core import (CommaCategory, Functor, NatTrans, _cap, _require_presented,
                   check_nat_trans, comma_category, compose_functors)
from .errors import StructuralError, UnsupportedTierError
from .report import LawReport
from .sampling import product_sample


class HomOperator:
    def __init__(self, F: Functor, G: Functor, F2: Functor, G2: Functor,
                 action: Callable, name="op"):
        self.F, self.G, self.F2, self.G2 = F, G, F2, G2
        self.action = action
        self.name = name

    @property
    def source_cat(self):
        return self.F.dst

    @property
    def target_cat(self):
        return self.F2.dst

    def __repr__(self):
        return f"HomOperator({self.name}: [{self.F.name},{self.G.name}] -> [{self.F2.name},{self.G2.name}])"


def identity_operator(F: Functor, G: Functor) -> HomOperator:
    return HomOperator(F, G, F, G, lambda x, y, f: f, f"1_[{F.name},{G.name}]")


def whiskering_operator(T: Functor, F: Functor, G: Functor) -> HomOperator:
    """``T(-): [F, G] -> [TF, TG]``."""
    return HomOperator(F, G, compose_functors(T, F), compose_functors(T, G),
                       lambda x, y, f: T.on_mor(f), f"{T.name}(-)")


def apply_operator(op: HomOperator, x, y, f):
    Z = op.source_cat
    if Z.dom(f) != op.F.on_obj(x) or Z.cod(f) != op.G.on_obj(y):
        raise StructuralError(f"{op.name}: argument is not a morphism F({x}) -> G({y})")
    return op.action(x, y, f)


def check_operator(op: HomOperator, cap=None, prefix="") -> LawReport:
    """Left and right naturality of the action over the test domain."""
    X, Y = op.F.src, op.G.src
    Z, Z2 = op.source_cat, op.target_cat
    presented = all(getattr(c, "tier", None) == "presented" for c in (X, Y, Z))
    cap = None if presented else _cap(cap)
    rep = LawReport(f"operator {op.name}")
    left, right = prefix + "natural.left", prefix + "natural.right"
    rep.stat(left)
    rep.stat(right)
    xs, ys = X.objects(), Y.objects()
    for x, y in itertools.product(xs, ys):
        homs = Z.hom(op.F.on_obj(x), op.G.on_obj(y))
        if not homs:
            continue
        for x2 in xs:
            inst, total = product_sample([homs, X.hom(x2, x)], cap, f"opl:{x}:{y}:{x2}")
            rep.declare(left, total, len(inst))
            for f, a in inst:
                lhs = op.action(x2, y, Z.compose(f, op.F.on_mor(a)))
                rhs = Z2.compose(op.action(x, y, f), op.F2.on_mor(a))
                rep.expect_equal(Z2, left, lhs, rhs, x=x, y=y, f=f, alpha=a)
        for y2 in ys:
            inst, total = product_sample([homs, Y.hom(y, y2)], cap, f"opr:{x}:{y}:{y2}")
            rep.declare(right, total, len(inst))
            for f, b in inst:
                lhs = op.action(x, y2, Z.compose(op.G.on_mor(b), f))
                rhs = Z2.compose(op.G2.on_mor(b), op.action(x, y, f))
                rep.expect_equal(Z2, right, lhs, rhs, x=x, y=y, f=f, beta=b)
    return rep


def operators_equal(op1: HomOperator, op2: HomOperator, rep: LawReport,
                    axiom="operator.equal", cap=None):
    """Compare two parallel operators pointwise on the test domain."""
    X, Y, Z, Z2 = op1.F.src, op1.G.src, op1.source_cat, op1.target_cat
    for x, y in itertools.product(X.objects(), Y.objects()):
        inst, total = product_sample([Z.hom(op1.F.on_obj(x), op1.G.on_obj(y))], cap,
                                     f"opeq:{x}:{y}")
        rep.declare(axiom, total, len(inst))
        for (f,) in inst:
            rep.expect_equal(Z2, axiom, op1.action(x, y, f), op2.action(x, y, f), x=x, y=y, f=f)
    return rep


def operator_to_comma_functor(op: HomOperator, comma_src=None, comma_dst=None) -> Functor:
    """The functor ``H: F/G -> F'/G'`` with ``H(x, y, a) = (x, y, a#)``."""
    _require_presented(op.F.src, op.G.src, op.source_cat, op.target_cat)
    src = comma_src or comma_category(op.F, op.G)[0]
    dst = comma_dst or comma_category(op.F2, op.G2)[0]

    def on_obj(o):
        x, y, a = o
        return (x, y, op.action(x, y, a))

    def on_mor(m):
        s, t, u, v = m
        return (on_obj(s), on_obj(t), u, v)
    return Functor(src, dst, on_obj, on_mor, f"H[{op.name}]")


def comma_functor_to_operator(H: Functor) -> HomOperator:
    """Read the operator off the third component of ``H`` on objects."""
    src, dst = H.src, H.dst
    if not (isinstance(src, CommaCategory) and isinstance(dst, CommaCategory)):
        raise UnsupportedTierError("comma_functor_to_operator needs presented comma categories")
    for o in src.objects():
        h = H.on_obj(o)
        if not dst.is_object(h) or h[:2] != o[:2]:
            raise StructuralError(f"{H.name} does not commute with the projections at {o!r}")
    for m in src.all_morphisms():
        hm = H.on_mor(m)
        if hm not in dst.morphisms or hm[2:] != m[2:]:
            raise StructuralError(f"{H.name} does not commute with the projections at {m!r}")
    return HomOperator(src.F, src.G, dst.F, dst.G,
                       lambda x, y, f: H.on_obj((x, y, f))[2], f"op[{H.name}]")


def check_relative_adjunction(F: Functor, G: Functor, iota: NatTrans, cap=None) -> LawReport:
    """``f |-> G f . iota_x`` is a bijection ``D(Fx, b) -> C(Ix, Gb)``.

    ``iota`` runs from the base functor ``I`` to ``G F``.  Both hom-sets must
    be completely enumerable; otherwise the check is unsupported.
    """
    I = iota.src
    C0, D, C = F.src, F.dst, G.dst
    rep = LawReport(f"relative adjunction {F.name} -|_{I.name} {G.name}")
    rep.stat("iota.typing")
    rep.stat("bijection.injective")
    rep.stat("bijection.surjective")
    for x in C0.objects():
        i = iota.component(x)
        ok = C.dom(i) == I.on_obj(x) and C.cod(i) == G.on_obj(F.on_obj(x))
        rep.record("iota.typing", ok, {"x": x}, [C.dom(i), C.cod(i)],
                   [I.on_obj(x), G.on_obj(F.on_obj(x))])
    rep.merge(check_nat_trans(iota, cap), "iota.")
    for x, b in itertools.product(C0.objects(), D.objects()):
        Fx, Ix, Gb = F.on_obj(x), I.on_obj(x), G.on_obj(b)
        if not (D.hom_complete(Fx, b) and C.hom_complete(Ix, Gb)):
            raise UnsupportedTierError(f"hom-sets at ({x}, {b}) are not enumerable within bounds")
        i = iota.component(x)
        seen = {}
        for f in D.hom(Fx, b):
            g = C.compose(G.on_mor(f), i)
            k = C.mor_key(g)
            if k in seen:
                rep.record("bijection.injective", False, {"x": x, "b": b, "f1": seen[k], "f2": f}, g, g)
            else:
                rep.record("bijection.injective", True)
                seen[k] = f
        for g in C.hom(Ix, Gb):
            hit = C.mor_key(g) in seen
            rep.record("bijection.surjective", hit, {"x": x, "b": b, "g": g},
                       "no preimage" if not hit else None, g)
    return rep

