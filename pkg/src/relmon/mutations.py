"""Deliberately broken instances, one per law family.

Each mutation knows which axiom it is meant to break.  They are used to
confirm that the checkers reject bad data with a concrete witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .core import Functor, NatTrans, check_category, check_functor, monoid_category
from .distributive import (KleisliExtension, LiftingToAlgebras, RelDistLaw,
                           check_kleisli_extension, check_lifting, check_rel_dist_law,
                           distr_to_kleisli_extension)
from .kleisli import kleisli_category
from .operators import check_relative_adjunction
from .relmonad import Monad, RelativeMonad, check_relative_monad
from .report import LawReport
from .semiring import BOOL
from .sets import FuncSpace, Pow, SetMap, Words, plus1, plus1_case
from .zoo import (builtin_freemonoid_powerset_law, builtin_pointed_lifting,
                  builtin_powerset_relmonad, delta, powerset_ext, set_category)


@dataclass
class Mutation:
    name: str
    family: str
    breaks: str
    run: Callable[[], LawReport]


def category_assoc() -> LawReport:
    """Z/3 as a one-object category with the composite ``1 . 1`` redirected to 0."""
    c = monoid_category(range(3), lambda g, f: (g + f) % 3, 0, "Z3-mutated")
    c.composition[1, 1] = 0
    return check_category(c)


def functoriality() -> LawReport:
    """Direct image, except that non-injective maps send everything to the empty set."""
    X = set_category(2, 1)

    def on_mor(f):
        vals = [f.fn(x) for x in X.elements(f.dom)]
        injective = len(set(vals)) == len(vals)
        fn = f.fn
        return SetMap(Pow(f.dom), Pow(f.cod),
                      (lambda A: frozenset(fn(a) for a in A)) if injective
                      else (lambda A: frozenset()))
    return check_functor(Functor(X, X, Pow, on_mor, "P-mutated"))


def monad_unit() -> LawReport:
    """Power set whose unit picks the empty set instead of a singleton."""
    P = builtin_powerset_relmonad(2, 2)
    T = RelativeMonad(P.base, Pow, lambda x: SetMap(x, Pow(x), lambda a: frozenset()),
                      powerset_ext, "P-mutated")
    return check_relative_monad(T)


def d2() -> LawReport:
    """Choice law that sends every nonempty word of subsets to the empty set."""
    law = builtin_freemonoid_powerset_law(2, 2)

    def d(a):
        return SetMap(Words(Pow(a)), Pow(Words(a)),
                      lambda w: frozenset({()}) if not w else frozenset(), "empty")
    return check_rel_dist_law(RelDistLaw(law.T, law.pair, d, "d-mutated"))


def lifting_iii() -> LawReport:
    """Vector-space lifting that interprets the new point as the zero vector."""
    L = builtin_pointed_lifting(BOOL, 2)
    R = BOOL

    def assign(M):
        V = FuncSpace(M.carrier, R)
        zero = delta(len(M.carrier.elems), -1, R)
        return SetMap(plus1(V), V, lambda e: zero if plus1_case(V, e)[0] else e[1], "zero")
    return check_lifting(LiftingToAlgebras(L.T, L.pair, assign, "Vhat-mutated"))


def kleisli_i() -> LawReport:
    """Kleisli extension of the choice law whose multiplication keeps the first word only."""
    law = builtin_freemonoid_powerset_law(2, 2)
    e = distr_to_kleisli_extension(law)
    J0 = e.kl[1]

    def first(x):
        return SetMap(Words(Words(x)), Words(x), lambda ww: ww[0] if ww else (), "first")
    St = Monad(e.kl[0], e.Stilde.functor, lambda x: J0.on_mor(first(x)), e.Stilde.unit,
               "first")
    return check_kleisli_extension(KleisliExtension(law.T, law.pair, e.kl, St, law.d,
                                                    "ext-mutated"))


def d3_reversed() -> LawReport:
    """Choice law listing each tuple of choices backwards."""
    law = builtin_freemonoid_powerset_law(2, 2)

    def d(a):
        return SetMap(Words(Pow(a)), Pow(Words(a)),
                      lambda w: frozenset(t[::-1] for t in itertools.product(*w)), "reversed")
    return check_rel_dist_law(RelDistLaw(law.T, law.pair, d, "d-reversed"))


def adjunction_unit() -> LawReport:
    """Kleisli relative adjunction for the power set with a constant-empty unit."""
    P = builtin_powerset_relmonad(2, 2)
    Kl, J0, U, t = kleisli_category(P)
    empty = NatTrans(t.src, t.dst, lambda x: SetMap(x, Pow(x), lambda a: frozenset()), "0")
    return check_relative_adjunction(J0, U, empty)


MUTATIONS = [
    Mutation("redirected composite", "category associativity", "associativity",
             category_assoc),
    Mutation("image collapses on non-injective maps", "functoriality",
             "functor.composition", functoriality),
    Mutation("empty-set unit", "monad unit", "unit.left", monad_unit),
    Mutation("nonempty words to empty set", "D2", "D2", d2),
    Mutation("point sent to zero vector", "lifting condition (iii)", "iii", lifting_iii),
    Mutation("multiplication keeps first word", "Kleisli extension condition (i)",
             "i.mJ0=J0m0", kleisli_i),
    Mutation("reversed choices", "D3", "D3", d3_reversed),
    Mutation("constant-empty adjunction unit", "relative adjunction", "bijection.injective",
             adjunction_unit),
]
