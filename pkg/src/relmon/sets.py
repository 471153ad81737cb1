"""Described sets, set maps and computable categories of sets.

Elements are plain Python values in canonical form: ints and strings for
atoms, tuples for words and vectors, frozensets for (finite) subsets and
``("inl", x)`` / ``("pt",)`` for tagged one-point extensions.  Equal
elements are equal Python values, so morphism equality is extensional
comparison over an enumerated carrier.

Infinite carriers (words, subsets of words) are enumerated by *cost*:
a letter from a finite set costs 1, a word costs the sum of its letters
(at least 1), and ``elements(budget)`` lists everything of cost at most
``budget``.  With finite letters this is "words of length <= budget".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable

from .errors import ResourceError, StructuralError
from .sampling import DEFAULT_HOM_CAP, max_enum, sample_indices


def canon_key(x):
    """Total order on canonical elements (used for sorting and serialization)."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (1, x)
    if isinstance(x, str):
        return (2, x)
    if isinstance(x, tuple):
        return (3, len(x), tuple(canon_key(e) for e in x))
    if isinstance(x, frozenset):
        return (4, len(x), tuple(sorted(canon_key(e) for e in x)))
    if x is None:
        return (-1,)
    return (9, repr(x))


def canon_sorted(xs):
    return sorted(xs, key=canon_key)


class SetDesc:
    """A described set.  Subclasses are frozen dataclasses (hashable)."""

    finite: bool = True

    def enum(self, budget: int) -> tuple:
        """``((element, cost), ...)`` for all elements of cost <= budget."""
        return _enum(self, budget)

    def elements(self, budget: int = 3) -> tuple:
        return tuple(e for e, _ in self.enum(budget))

    def size(self) -> int:
        if not self.finite:
            raise ResourceError(f"{self} is infinite")
        return len(self.enum(1))

    @property
    def countable(self) -> bool:
        return True

    def contains(self, x) -> bool:
        raise NotImplementedError

    def _enum(self, budget):
        raise NotImplementedError

    def to_json(self):
        return str(self)


@lru_cache(maxsize=None)
def _enum(desc, budget):
    return tuple(desc._enum(budget))


@dataclass(frozen=True)
class Finite(SetDesc):
    elems: tuple

    def __post_init__(self):
        canon = tuple(canon_sorted(set(self.elems)))
        object.__setattr__(self, "elems", canon)

    def _enum(self, budget):
        return [(e, 1) for e in self.elems]

    def contains(self, x):
        return x in self.elems

    def is_numeral(self):
        return self.elems == tuple(range(len(self.elems)))

    def __str__(self):
        if self.is_numeral():
            return f"{len(self.elems)}"
        return "{" + ",".join(map(str, self.elems)) + "}"


def fin(n: int) -> Finite:
    """The numeral set {0, ..., n-1}."""
    return Finite(tuple(range(n)))


def is_numeral(desc) -> bool:
    return isinstance(desc, Finite) and desc.is_numeral()


def _words(letters, budget):
    out = [((), 1)]
    frontier = [((), 0)]
    while frontier:
        nxt = []
        for word, used in frontier:
            for letter, c in letters:
                if used + c <= budget:
                    w = word + (letter,)
                    nxt.append((w, used + c))
                    out.append((w, max(1, used + c)))
        frontier = nxt
    return out


@dataclass(frozen=True)
class Words(SetDesc):
    """Finite words (tuples) over a base set: the free monoid."""

    base: SetDesc
    finite = False

    def _enum(self, budget):
        return _words(self.base.enum(budget), budget)

    def contains(self, x):
        return isinstance(x, tuple) and all(self.base.contains(e) for e in x)

    @property
    def countable(self):
        return self.base.countable

    def __str__(self):
        return f"W({self.base})"


@dataclass(frozen=True)
class Pow(SetDesc):
    """Finite subsets (frozensets) of a base set."""

    base: SetDesc

    @property
    def finite(self):
        return self.base.finite

    def _enum(self, budget):
        elems = self.base.enum(budget)
        if self.base.finite:
            xs = [e for e, _ in elems]
            return [(frozenset(c), 1) for r in range(len(xs) + 1)
                    for c in itertools.combinations(xs, r)]
        out = []
        for r in range(budget + 1):
            for combo in itertools.combinations(elems, r):
                cost = sum(c for _, c in combo)
                if cost <= budget:
                    out.append((frozenset(e for e, _ in combo), max(1, cost)))
        return out

    def contains(self, x):
        return isinstance(x, frozenset) and all(self.base.contains(e) for e in x)

    @property
    def countable(self):
        return self.base.finite

    def __str__(self):
        return f"P({self.base})"


POINT = ("pt",)


@dataclass(frozen=True)
class Plus1(SetDesc):
    """Tagged one-point extension X + 1.  Use :func:`plus1` to build one."""

    base: SetDesc

    @property
    def finite(self):
        return self.base.finite

    def _enum(self, budget):
        return [(("inl", e), c) for e, c in self.base.enum(budget)] + [(POINT, 1)]

    def contains(self, x):
        return x == POINT or (isinstance(x, tuple) and len(x) == 2
                              and x[0] == "inl" and self.base.contains(x[1]))

    @property
    def countable(self):
        return self.base.countable

    def __str__(self):
        return f"({self.base}+1)"


def plus1(desc: SetDesc) -> SetDesc:
    """X + 1; on numerals n this is the numeral n+1 with new point n."""
    if is_numeral(desc):
        return fin(len(desc.elems) + 1)
    return Plus1(desc)


def plus1_inl(desc: SetDesc, x):
    return x if is_numeral(desc) else ("inl", x)


def plus1_point(desc: SetDesc):
    return len(desc.elems) if is_numeral(desc) else POINT


def plus1_case(desc: SetDesc, e):
    """``(False, x)`` for an injected x, ``(True, None)`` for the new point."""
    if is_numeral(desc):
        n = len(desc.elems)
        return (True, None) if e == n else (False, e)
    return (True, None) if e == POINT else (False, e[1])


@dataclass(frozen=True)
class FuncSpace(SetDesc):
    """Set(base, R) for a finite base: vectors as tuples in base order."""

    base: Finite
    semiring: Any

    def _enum(self, budget):
        return [(v, 1) for v in itertools.product(self.semiring.carrier,
                                                  repeat=len(self.base.elems))]

    def contains(self, x):
        return (isinstance(x, tuple) and len(x) == len(self.base.elems)
                and all(c in self.semiring.carrier for c in x))

    def __str__(self):
        return f"{self.semiring.name}^{self.base}"


class SetMap:
    """A function between described sets."""

    __slots__ = ("dom", "cod", "fn", "label")

    def __init__(self, dom: SetDesc, cod: SetDesc, fn: Callable, label: str | None = None):
        self.dom = dom
        self.cod = cod
        self.fn = fn
        self.label = label

    @classmethod
    def from_table(cls, dom, cod, table: dict, label=None):
        return cls(dom, cod, table.__getitem__, label)

    def __call__(self, x):
        return self.fn(x)

    def table(self, budget: int = 3) -> dict:
        return {x: self.fn(x) for x in self.dom.elements(budget)}

    def to_json(self):
        from .report import show
        out = {"dom": str(self.dom), "cod": str(self.cod)}
        if self.label:
            out["label"] = self.label
        if self.dom.finite and len(self.dom.enum(1)) <= 16:
            out["table"] = [[show(x), show(self.fn(x))] for x in self.dom.elements(1)]
        return out

    def __repr__(self):
        return f"SetMap({self.dom} -> {self.cod}{', ' + self.label if self.label else ''})"


class SetCategory:
    """A full subcategory of Set on described sets (computable tier).

    ``test_objects`` is the test domain; ``contains`` decides membership of
    arbitrary described sets.  Homs between finite sets are all functions,
    sampled down to ``hom_cap`` when larger; homs out of infinite sets are
    not enumerable and contain only the identity.
    """

    tier = "computable"

    def __init__(self, name, test_objects, contains=None, budget=3, hom_cap=DEFAULT_HOM_CAP):
        self.name = name
        self._objects = list(test_objects)
        self._contains = contains or (lambda d: True)
        self.budget = budget
        self.hom_cap = hom_cap
        self._hom_cache = {}

    def __repr__(self):
        return f"SetCategory({self.name})"

    def objects(self):
        return list(self._objects)

    def is_object(self, a):
        return isinstance(a, SetDesc) and self._contains(a)

    def elements(self, a):
        return a.elements(self.budget)

    def _hom_info(self, a, b):
        key = (a, b)
        if key in self._hom_cache:
            return self._hom_cache[key]
        if not a.finite:
            info = ([self.identity(a)] if a == b else [], False)
            self._hom_cache[key] = info
            return info
        xs = self.elements(a)
        ys = self.elements(b)
        total = len(ys) ** len(xs)
        cap = min(self.hom_cap, max_enum())
        idx = sample_indices(total, cap, f"hom:{a}->{b}")
        maps = []
        for i in idx:
            table = {}
            for x in reversed(xs):
                i, r = divmod(i, len(ys))
                table[x] = ys[r]
            maps.append(SetMap.from_table(a, b, table))
        info = (maps, b.finite and total <= cap)
        self._hom_cache[key] = info
        return info

    def hom(self, a, b):
        return self._hom_info(a, b)[0]

    def hom_size(self, a, b):
        """Number of maps ``a -> b`` on the enumerated elements (None if infinite)."""
        if not (a.finite and b.finite):
            return None
        return len(self.elements(b)) ** len(self.elements(a))

    def hom_complete(self, a, b):
        return self._hom_info(a, b)[1]

    def identity(self, a):
        return SetMap(a, a, _ident, "id")

    def compose(self, g, f):
        if f.cod != g.dom:
            raise StructuralError(f"cannot compose {g!r} after {f!r}")
        gf, ff = g.fn, f.fn
        return SetMap(f.dom, g.cod, lambda x: gf(ff(x)))

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def mor_diff(self, f, g):
        """None when equal, else ``(element, f(element), g(element))``."""
        if f.dom != g.dom or f.cod != g.cod:
            return (None, f"{f.dom}->{f.cod}", f"{g.dom}->{g.cod}")
        for x in self.elements(f.dom):
            fx, gx = f.fn(x), g.fn(x)
            if fx != gx:
                return (x, fx, gx)
        return None

    def mor_eq(self, f, g):
        return self.mor_diff(f, g) is None

    def mor_key(self, f):
        """Hashable canonical form: equal keys iff extensionally equal maps."""
        return (f.dom, f.cod, tuple(f.fn(x) for x in self.elements(f.dom)))

    def show(self, f):
        return f.to_json()


def _ident(x):
    return x


def all_countable(desc) -> bool:
    return desc.countable


def check_enum_size(n, what):
    cap = max_enum()
    if n > cap:
        raise ResourceError(f"{what}: {n} exceeds RELMON_MAX_ENUM={cap}", estimate=n)
