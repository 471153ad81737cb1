"""Built-in instances: power sets, free monoids, vector spaces, pointed sets.

Categories of sets are :class:`~relmon.sets.SetCategory` objects whose test
domain is the numerals ``0..n``.  Inclusions between them act as the
identity on data, so ``SI = IS0`` holds on the nose.
"""

from __future__ import annotations

import itertools

from .core import Functor, identity_functor, poset_category
from .distributive import (CompatiblePair, LiftingToAlgebras, MonadAlgebra, RelDistLaw,
                           lifting_to_distr)
from .errors import StructuralError
from .relmonad import Monad, RelativeMonad, embed_monad, identity_monad, identity_relmonad
from .semiring import BOOL, Semiring, check_semiring
from .sets import (FuncSpace, Pow, SetCategory, SetMap, Words, fin, is_numeral, plus1,
                   plus1_case, plus1_inl, plus1_point)


def set_category(max_size: int, budget: int = 3, name="Set") -> SetCategory:
    return SetCategory(name, [fin(n) for n in range(max_size + 1)], None, budget)


def countable_sets(max_size: int, budget: int = 3) -> SetCategory:
    return SetCategory("Ctbl", [fin(n) for n in range(max_size + 1)],
                       lambda d: d.countable, budget)


def fin_category(max_dim: int) -> SetCategory:
    return SetCategory("Fin", [fin(n) for n in range(max_dim + 1)], is_numeral, 1)


def inclusion(X0, X, name="I") -> Functor:
    return Functor(X0, X, lambda a: a, lambda f: f, name)


# --------------------------------------------------------------------------
# power set


def powerset_unit(x):
    return SetMap(x, Pow(x), lambda a: frozenset((a,)), "singleton")


def powerset_ext(x, y, k):
    fn = k.fn

    def union(A):
        out = set()
        for a in A:
            out.update(fn(a))
        return frozenset(out)
    return SetMap(Pow(x), Pow(y), union, "union")


def builtin_powerset_relmonad(kappa: int = 3, max_word: int = 3) -> RelativeMonad:
    """``P`` relative to the inclusion of countable sets, tested on sets of size <= kappa."""
    if kappa < 1:
        raise StructuralError("kappa must be at least 1")
    X = set_category(kappa, max_word)
    X0 = countable_sets(kappa, max_word)
    return RelativeMonad(inclusion(X0, X), Pow, powerset_unit, powerset_ext, "P")


# --------------------------------------------------------------------------
# free monoid


def words_monad(C) -> Monad:
    def on_mor(f):
        fn = f.fn
        return SetMap(Words(f.dom), Words(f.cod), lambda w: tuple(fn(a) for a in w))

    def mult(x):
        return SetMap(Words(Words(x)), Words(x), lambda ww: tuple(a for w in ww for a in w),
                      "concat")

    def unit(x):
        return SetMap(x, Words(x), lambda a: (a,), "singleton")
    return Monad(C, Functor(C, C, Words, on_mor, "W"), mult, unit, "W")


def _fold_algebra(carrier, op, unit, name):
    def fold(w):
        acc = unit
        for a in w:
            acc = op(acc, a)
        return acc
    return MonadAlgebra(carrier, SetMap(Words(carrier), carrier, fold, name), name)


def monoid_pool():
    """Finite monoids as word-monad algebras: trivial, ({0,1}, max), Z/2."""
    return [_fold_algebra(fin(1), lambda a, b: 0, 0, "trivial"),
            _fold_algebra(fin(2), max, 0, "max2"),
            _fold_algebra(fin(2), lambda a, b: (a + b) % 2, 0, "z2")]


def builtin_freemonoid_pair(kappa: int = 3, max_word: int = 3, free_arities=(1,)) -> CompatiblePair:
    X = set_category(kappa, max_word)
    X0 = countable_sets(kappa, max_word)
    return CompatiblePair(inclusion(X0, X), words_monad(X), words_monad(X0), "(W,W0)",
                          monoid_pool(), [fin(n) for n in free_arities])


def freemonoid_powerset_d(a):
    return SetMap(Words(Pow(a)), Pow(Words(a)), lambda w: frozenset(itertools.product(*w)),
                  "choices")


def builtin_freemonoid_powerset_law(kappa: int = 3, max_word: int = 3) -> RelDistLaw:
    """``d(<I1..In>) = {<a1..an> | ai in Ii}``."""
    pair = builtin_freemonoid_pair(kappa, max_word)
    T = RelativeMonad(pair.I, Pow, powerset_unit, powerset_ext, "P")
    return RelDistLaw(T, pair, freemonoid_powerset_d, "d_WP")


# --------------------------------------------------------------------------
# vector spaces over a semiring


def delta(n: int, i: int, R: Semiring):
    return tuple(R.one if j == i else R.zero for j in range(n))


def vec_relmonad(R: Semiring, X0, X) -> RelativeMonad:
    def on_obj(n):
        return FuncSpace(n, R)

    def unit(n):
        size = len(n.elems)
        return SetMap(n, FuncSpace(n, R), lambda i: delta(size, i, R), "delta")

    def ext(n, m, alpha):
        cols = [alpha.fn(i) for i in n.elems]
        dim = len(m.elems)
        add, mul, zero = R.add, R.mul, R.zero

        def apply(f):
            out = [zero] * dim
            for c, col in zip(f, cols):
                for j in range(dim):
                    out[j] = add(out[j], mul(c, col[j]))
            return tuple(out)
        return SetMap(FuncSpace(n, R), FuncSpace(m, R), apply, "linear")
    return RelativeMonad(inclusion(X0, X), on_obj, unit, ext, f"V[{R.name}]")


def _lawful(R: Semiring):
    rep = check_semiring(R)
    if not rep.passed:
        raise StructuralError(f"semiring {R.name} fails {', '.join(rep.failed_axioms())}")


def builtin_vecspace_relmonad(R: Semiring = BOOL, maxdim: int = 3) -> RelativeMonad:
    """``Vn = R^n`` over ``Fin -> Set`` with unit ``delta_i`` and linear extension."""
    _lawful(R)
    return vec_relmonad(R, fin_category(maxdim), set_category(maxdim, 1))


# --------------------------------------------------------------------------
# pointed sets


def pointed_monad(C) -> Monad:
    """``SX = X + 1``; the multiplication collapses the two added points."""
    def on_mor(f):
        fn, d, c = f.fn, f.dom, f.cod

        def go(e):
            is_pt, x = plus1_case(d, e)
            return plus1_point(c) if is_pt else plus1_inl(c, fn(x))
        return SetMap(plus1(d), plus1(c), go)

    def mult(x):
        sx = plus1(x)

        def go(e):
            is_pt, y = plus1_case(sx, e)
            return plus1_point(x) if is_pt else y
        return SetMap(plus1(sx), sx, go, "collapse")

    def unit(x):
        return SetMap(x, plus1(x), lambda a: plus1_inl(x, a), "inl")
    return Monad(C, Functor(C, C, plus1, on_mor, "(-)+1"), mult, unit, "(-)+1")


def pointed_pool(maxsize: int):
    """Pointed numerals ``(n, i)`` as algebras ``n+1 -> n`` sending the new point to ``i``."""
    pool = []
    for n in range(1, maxsize + 1):
        for i in range(n):
            pool.append(MonadAlgebra(fin(n), SetMap(fin(n + 1), fin(n),
                                                    lambda e, n=n, i=i: i if e == n else e),
                                     f"({n},{i})"))
    return pool


def builtin_pointed_pair(maxsize: int = 3) -> CompatiblePair:
    """``(S, S_f)`` over the inclusion of numerals into sets."""
    X = set_category(maxsize, 1)
    X0 = fin_category(maxsize)
    return CompatiblePair(inclusion(X0, X), pointed_monad(X), pointed_monad(X0), "(S,Sf)",
                          pointed_pool(maxsize))


def pointed_vec_assign(R: Semiring):
    def assign(M):
        n = len(M.carrier.elems)
        p = M.structure.fn(n)
        V = FuncSpace(M.carrier, R)
        pt = delta(n, p, R)
        return SetMap(plus1(V), V, lambda e: pt if plus1_case(V, e)[0] else e[1], "hat")
    return assign


def builtin_pointed_lifting(R: Semiring = BOOL, maxdim: int = 3) -> LiftingToAlgebras:
    """``Vhat(n, i) = (R^n, delta_i)``."""
    _lawful(R)
    pair = builtin_pointed_pair(maxdim)
    T = vec_relmonad(R, pair.X0, pair.X)
    return LiftingToAlgebras(T, pair, pointed_vec_assign(R), f"Vhat[{R.name}]")


def builtin_pointed_law(R: Semiring = BOOL, maxdim: int = 3) -> RelDistLaw:
    """The law derived from ``Vhat``."""
    return lifting_to_distr(builtin_pointed_lifting(R, maxdim))


# --------------------------------------------------------------------------
# baselines


def identity_instances():
    """Identity relative monad, monads, law and lifting on a 3-element chain."""
    C = poset_category(range(3), lambda a, b: a <= b, "Chain3")
    T = identity_relmonad(C)
    S = identity_monad(C)
    pool = [MonadAlgebra(c, C.identity(c), f"id{c}") for c in C.objects()]
    pair = CompatiblePair(identity_functor(C), S, S, "(Id,Id)", pool)
    law = RelDistLaw(T, pair, C.identity, "id")
    lifting = LiftingToAlgebras(T, pair, lambda M: M.structure, "id")
    return {"category": C, "relmonad": T, "pair": pair, "law": law, "lifting": lifting}


def pointed_swap(x):
    """``S(TX) -> T(SX)`` on ``X+1+1``: each point goes to the point of its own monad."""
    tx = plus1(x)

    def go(e):
        outer, y = plus1_case(tx, e)
        if outer:
            return plus1_inl(tx, plus1_point(x))
        inner, z = plus1_case(x, y)
        if inner:
            return plus1_point(tx)
        return plus1_inl(tx, plus1_inl(x, z))
    return SetMap(plus1(tx), plus1(tx), go, "swap")


def builtin_pointed_self(maxsize: int = 3) -> RelDistLaw:
    """The pointed-set monad over itself with ``I = 1``: an ordinary distributive law."""
    X = set_category(maxsize, 1)
    S = pointed_monad(X)
    T = embed_monad(S)
    T.name = "T(-)+1"
    pair = CompatiblePair(identity_functor(X, "1"), S, S, "(S,S)", pointed_pool(maxsize))
    return RelDistLaw(T, pair, pointed_swap, "swap")
