"""Categories, functors and natural transformations, with law checkers.

A category is any object with the methods below (duck-typed, two tiers):

``objects()``            test-domain objects
``is_object(a)``         membership of an arbitrary object
``hom(a, b)``            test-domain morphisms a -> b
``hom_complete(a, b)``   whether ``hom`` returned every morphism
``identity(a)``, ``compose(g, f)`` (g after f), ``dom(f)``, ``cod(f)``
``mor_diff(f, g)``       None when equal, else ``(element, lhs, rhs)``
``mor_eq(f, g)``, ``mor_key(f)`` (hashable, equal iff ``mor_eq``)

:class:`FiniteCategory` is the presented tier (tables, exhaustive checks);
:class:`~relmon.sets.SetCategory` and the Kleisli category are computable.
"""

from __future__ import annotations

import itertools
from typing import Callable

from .errors import StructuralError, UnsupportedTierError
from .report import LawReport
from .sampling import DEFAULT_INSTANCE_CAP, product_sample


class FiniteCategory:
    """A finitely presented category given by its composition table.

    ``composition`` maps ``(second, first)`` to the composite
    ``second . first``.  Objects and morphism names are any hashables.
    """

    tier = "presented"

    def __init__(self, objects, morphisms, identities, composition, name="C"):
        self.name = name
        self._objects = list(objects)
        self._object_set = set(self._objects)
        self.morphisms = dict(morphisms)
        self.identities = dict(identities)
        self.composition = dict(composition)
        self._homs = {}
        for m, (a, b) in self.morphisms.items():
            self._homs.setdefault((a, b), []).append(m)

    def __repr__(self):
        return f"FiniteCategory({self.name}, {len(self._objects)} objects, {len(self.morphisms)} morphisms)"

    def objects(self):
        return list(self._objects)

    def is_object(self, a):
        try:
            return a in self._object_set
        except TypeError:
            return False

    def hom(self, a, b):
        return list(self._homs.get((a, b), ()))

    def hom_complete(self, a, b):
        return True

    def all_morphisms(self):
        return list(self.morphisms)

    def identity(self, a):
        try:
            return self.identities[a]
        except KeyError:
            raise StructuralError(f"{self.name}: no identity at {a!r}") from None

    def dom(self, f):
        try:
            return self.morphisms[f][0]
        except KeyError:
            raise StructuralError(f"{self.name}: unknown morphism {f!r}") from None

    def cod(self, f):
        try:
            return self.morphisms[f][1]
        except KeyError:
            raise StructuralError(f"{self.name}: unknown morphism {f!r}") from None

    def compose(self, g, f):
        if self.cod(f) != self.dom(g):
            raise StructuralError(f"{self.name}: {g!r} . {f!r} not composable")
        try:
            return self.composition[g, f]
        except KeyError:
            raise StructuralError(f"{self.name}: no composite for {g!r} . {f!r}") from None

    def mor_diff(self, f, g):
        return None if f == g else (None, f, g)

    def mor_eq(self, f, g):
        return f == g

    def mor_key(self, f):
        return f

    def show(self, f):
        return f

    def validate(self):
        """Raise :class:`StructuralError` on malformed tables."""
        for m, ab in self.morphisms.items():
            if not (isinstance(ab, tuple) and len(ab) == 2):
                raise StructuralError(f"{self.name}: morphism {m!r} lacks dom/cod")
            for end in ab:
                if end not in self._object_set:
                    raise StructuralError(f"{self.name}: {m!r} has unknown end {end!r}")
        for a in self._objects:
            i = self.identities.get(a)
            if i is None:
                raise StructuralError(f"{self.name}: missing identity at {a!r}")
            if self.morphisms.get(i) != (a, a):
                raise StructuralError(f"{self.name}: identity {i!r} is not an endomorphism of {a!r}")
        for (g, f), h in self.composition.items():
            for m in (g, f, h):
                if m not in self.morphisms:
                    raise StructuralError(f"{self.name}: composition mentions unknown {m!r}")
            (fa, fb), (ga, gb), (ha, hb) = self.morphisms[f], self.morphisms[g], self.morphisms[h]
            if fb != ga:
                raise StructuralError(f"{self.name}: entry {g!r} . {f!r} is not composable")
            if (ha, hb) != (fa, gb):
                raise StructuralError(
                    f"{self.name}: composite {g!r} . {f!r} = {h!r} has dom/cod "
                    f"{ha!r}->{hb!r}, expected {fa!r}->{gb!r}")
        for f, (a, b) in self.morphisms.items():
            for g in self._homs_from(b):
                if (g, f) not in self.composition:
                    raise StructuralError(f"{self.name}: missing composite {g!r} . {f!r}")

    def _homs_from(self, b):
        return [m for m, (x, _) in self.morphisms.items() if x == b]

    def to_json(self):
        return presented_to_json(self)


def poset_category(elements, leq, name="P") -> FiniteCategory:
    """The category of a finite preorder; morphism ``(a, b)`` witnesses a <= b."""
    elements = list(elements)
    morphisms = {(a, b): (a, b) for a in elements for b in elements if leq(a, b)}
    identities = {a: (a, a) for a in elements}
    composition = {}
    for (b, c) in morphisms:
        for (a, b2) in morphisms:
            if b2 == b:
                composition[(b, c), (a, b)] = (a, c)
    return FiniteCategory(elements, morphisms, identities, composition, name)


def monoid_category(elements, op, unit, name="M") -> FiniteCategory:
    """One-object category of a finite monoid; morphisms are the elements."""
    morphisms = {e: ("*", "*") for e in elements}
    composition = {(g, f): op(g, f) for g in elements for f in elements}
    return FiniteCategory(["*"], morphisms, {"*": unit}, composition, name)


def terminal_category(name="1") -> FiniteCategory:
    return FiniteCategory(["*"], {"id*": ("*", "*")}, {"*": "id*"},
                          {("id*", "id*"): "id*"}, name)


class TestDomainView:
    """A category with its test-domain objects replaced."""

    def __init__(self, base, objects):
        self._base = base
        self._objects = list(objects)

    def objects(self):
        return list(self._objects)

    def __getattr__(self, attr):
        return getattr(self._base, attr)

    def __repr__(self):
        return f"{self._base!r}|{len(self._objects)} test objects"


def with_test_objects(cat, objects):
    return TestDomainView(cat, objects)


# --------------------------------------------------------------------------
# functors and natural transformations


class Functor:
    def __init__(self, src, dst, on_obj: Callable, on_mor: Callable, name="F"):
        self.src = src
        self.dst = dst
        self.on_obj = on_obj
        self.on_mor = on_mor
        self.name = name

    def obj(self, a):
        return self.on_obj(a)

    def mor(self, f):
        return self.on_mor(f)

    def __repr__(self):
        return f"Functor({self.name})"


class NatTrans:
    def __init__(self, src: Functor, dst: Functor, component: Callable, name="alpha"):
        self.src = src
        self.dst = dst
        self.component = component
        self.name = name

    def at(self, a):
        return self.component(a)

    def __repr__(self):
        return f"NatTrans({self.name}: {self.src.name} => {self.dst.name})"


def identity_functor(C, name=None) -> Functor:
    return Functor(C, C, lambda a: a, lambda f: f, name or f"id_{getattr(C, 'name', 'C')}")


def compose_functors(G: Functor, F: Functor, name=None) -> Functor:
    """G after F."""
    return Functor(F.src, G.dst, lambda a: G.on_obj(F.on_obj(a)),
                   lambda f: G.on_mor(F.on_mor(f)), name or f"{G.name}{F.name}")


def constant_functor(src, dst, obj, name=None) -> Functor:
    ident = dst.identity(obj)
    return Functor(src, dst, lambda a: obj, lambda f: ident, name or f"const_{obj}")


def identity_nat(F: Functor) -> NatTrans:
    return NatTrans(F, F, lambda a: F.dst.identity(F.on_obj(a)), f"1_{F.name}")


def functor_from_tables(src, dst, on_obj: dict, on_mor: dict, name="F") -> Functor:
    """Presented-tier functor from name-to-name maps."""
    def obj(a):
        try:
            return on_obj[a]
        except KeyError:
            raise StructuralError(f"functor {name}: no image for object {a!r}") from None

    def mor(f):
        try:
            return on_mor[f]
        except KeyError:
            raise StructuralError(f"functor {name}: no image for morphism {f!r}") from None
    F = Functor(src, dst, obj, mor, name)
    F.tables = (dict(on_obj), dict(on_mor))
    return F


# --------------------------------------------------------------------------
# checkers


def _cap(cap):
    return DEFAULT_INSTANCE_CAP if cap is None else cap


def _label(cat):
    return getattr(cat, "name", repr(cat))


def check_category(c, cap=None) -> LawReport:
    """Identity and associativity laws over the test domain.

    Presented categories are validated first (structural errors raise) and
    checked exhaustively; computable ones per sampled composable triple.
    """
    objs = c.objects()
    if not objs:
        raise StructuralError(f"{_label(c)}: empty test domain")
    if getattr(c, "tier", None) == "presented":
        c.validate()
        cap = None
    else:
        cap = _cap(cap)
    rep = LawReport(f"category {_label(c)}")
    rep.stat("identity.left")
    rep.stat("identity.right")
    rep.stat("associativity")
    for a, b in itertools.product(objs, repeat=2):
        for f in c.hom(a, b):
            rep.expect_equal(c, "identity.left", c.compose(c.identity(b), f), f, f=f)
            rep.expect_equal(c, "identity.right", c.compose(f, c.identity(a)), f, f=f)
    for a, b, cc, d in itertools.product(objs, repeat=4):
        inst, total = product_sample([c.hom(a, b), c.hom(b, cc), c.hom(cc, d)], cap,
                                     f"assoc:{a}:{b}:{cc}:{d}")
        rep.declare("associativity", total, len(inst))
        for f, g, h in inst:
            lhs = c.compose(h, c.compose(g, f))
            rhs = c.compose(c.compose(h, g), f)
            rep.expect_equal(c, "associativity", lhs, rhs, f=f, g=g, h=h)
    return rep


def _dst_has(F, b):
    try:
        return F.dst.is_object(b)
    except Exception:
        return False


def check_functor(F: Functor, cap=None) -> LawReport:
    """Preservation of dom/cod, identities and composites on the source test domain."""
    src, dst = F.src, F.dst
    cap = None if getattr(src, "tier", None) == "presented" else _cap(cap)
    rep = LawReport(f"functor {F.name}")
    for axiom in ("functor.typing", "functor.identity", "functor.composition"):
        rep.stat(axiom)
    objs = src.objects()
    images = {}
    for a in objs:
        fa = F.on_obj(a)
        if not _dst_has(F, fa):
            raise StructuralError(f"functor {F.name}: image {fa!r} of {a!r} is not an object of {_label(dst)}")
        images[_key(a)] = fa
    def typed(f):
        ff = F.on_mor(f)
        return ff, dst.dom(ff) == F.on_obj(src.dom(f)) and dst.cod(ff) == F.on_obj(src.cod(f))

    for a, b in itertools.product(objs, repeat=2):
        for f in src.hom(a, b):
            ff, ok = typed(f)
            rep.record("functor.typing", ok, {"f": f},
                       [dst.dom(ff), dst.cod(ff)], [images[_key(a)], images[_key(b)]])
    for a in objs:
        rep.expect_equal(dst, "functor.identity", F.on_mor(src.identity(a)),
                         dst.identity(images[_key(a)]), object=a)
    for a, b, c in itertools.product(objs, repeat=3):
        inst, total = product_sample([src.hom(a, b), src.hom(b, c)], cap, f"fcomp:{a}:{b}:{c}")
        rep.declare("functor.composition", total, len(inst))
        for f, g in inst:
            ff, okf = typed(f)
            fg, okg = typed(g)
            if not (okf and okg) and dst.cod(ff) != dst.dom(fg):
                continue
            rep.expect_equal(dst, "functor.composition", F.on_mor(src.compose(g, f)),
                             dst.compose(fg, ff), f=f, g=g)
    return rep


def _key(a):
    try:
        hash(a)
        return a
    except TypeError:
        return repr(a)


def check_nat_trans(alpha: NatTrans, cap=None) -> LawReport:
    """Every naturality square over the source test domain."""
    F, G = alpha.src, alpha.dst
    src, dst = F.src, F.dst
    cap = None if getattr(src, "tier", None) == "presented" else _cap(cap)
    rep = LawReport(f"transformation {alpha.name}")
    rep.stat("naturality")
    objs = src.objects()
    comps = {}
    for a in objs:
        try:
            comp = alpha.component(a)
        except (KeyError, IndexError):
            comp = None
        if comp is None:
            raise StructuralError(f"{alpha.name}: missing component at {a!r}")
        if dst.dom(comp) != F.on_obj(a) or dst.cod(comp) != G.on_obj(a):
            raise StructuralError(f"{alpha.name}: component at {a!r} has the wrong type")
        comps[_key(a)] = comp
    for a, b in itertools.product(objs, repeat=2):
        inst, total = product_sample([src.hom(a, b)], cap, f"nat:{a}:{b}")
        rep.declare("naturality", total, len(inst))
        for (f,) in inst:
            lhs = dst.compose(G.on_mor(f), comps[_key(a)])
            rhs = dst.compose(comps[_key(b)], F.on_mor(f))
            rep.expect_equal(dst, "naturality", lhs, rhs, f=f)
    return rep


def functors_equal(F: Functor, G: Functor, rep: LawReport, axiom="functor.equal", cap=None):
    """Extensional comparison of two parallel functors on the test domain."""
    src, dst = F.src, F.dst
    objs = src.objects()
    for a in objs:
        rep.record(axiom + ".obj", F.on_obj(a) == G.on_obj(a), {"object": a},
                   F.on_obj(a), G.on_obj(a))
    for a, b in itertools.product(objs, repeat=2):
        inst, total = product_sample([src.hom(a, b)], None if cap is None else cap,
                                     f"feq:{a}:{b}")
        rep.declare(axiom + ".mor", total, len(inst))
        for (f,) in inst:
            rep.expect_equal(dst, axiom + ".mor", F.on_mor(f), G.on_mor(f), f=f)
    return rep


# --------------------------------------------------------------------------
# comma categories


class CommaCategory(FiniteCategory):
    """F/G with objects ``(x, y, alpha)`` and morphisms ``(src, dst, u, v)``."""

    def __init__(self, F, G, *args, **kw):
        super().__init__(*args, **kw)
        self.F = F
        self.G = G


def _require_presented(*cats):
    for c in cats:
        if getattr(c, "tier", None) != "presented":
            raise UnsupportedTierError(f"{_label(c)} is not finitely presented")


def comma_category(F: Functor, G: Functor):
    """The comma category F/G with projections and universal 2-cell.

    Returns ``(FG, p_X, p_Y, rho)`` with ``rho: F p_X => G p_Y``.
    """
    X, Y, Z = F.src, G.src, F.dst
    _require_presented(X, Y, Z)
    if G.dst is not Z:
        raise StructuralError("comma_category: F and G need a common codomain")
    objects = [(x, y, a) for x in X.objects() for y in Y.objects()
               for a in Z.hom(F.on_obj(x), G.on_obj(y))]
    morphisms = {}
    for s in objects:
        for t in objects:
            (x, y, a), (x2, y2, a2) = s, t
            for u in X.hom(x, x2):
                for v in Y.hom(y, y2):
                    if Z.compose(G.on_mor(v), a) == Z.compose(a2, F.on_mor(u)):
                        morphisms[(s, t, u, v)] = (s, t)
    identities = {o: (o, o, X.identity(o[0]), Y.identity(o[1])) for o in objects}
    composition = {}
    by_src = {}
    for m in morphisms:
        by_src.setdefault(m[0], []).append(m)
    for f in morphisms:
        for g in by_src.get(f[1], ()):
            composition[g, f] = (f[0], g[1], X.compose(g[2], f[2]), Y.compose(g[3], f[3]))
    name = f"{F.name}/{G.name}"
    comma = CommaCategory(F, G, objects, morphisms, identities, composition, name)
    pX = Functor(comma, X, lambda o: o[0], lambda m: m[2], f"p_{_label(X)}")
    pY = Functor(comma, Y, lambda o: o[1], lambda m: m[3], f"p_{_label(Y)}")
    rho = NatTrans(compose_functors(F, pX), compose_functors(G, pY), lambda o: o[2], "rho")
    return comma, pX, pY, rho


# --------------------------------------------------------------------------
# presented JSON


_CAT_FIELDS = {"objects", "morphisms", "identities", "composition"}


def presented_to_json(c: FiniteCategory) -> dict:
    def s(x):
        return x if isinstance(x, str) else _stringify(x)
    return {
        "objects": [s(a) for a in c.objects()],
        "morphisms": [{"name": s(m), "dom": s(a), "cod": s(b)}
                      for m, (a, b) in c.morphisms.items()],
        "identities": {s(a): s(i) for a, i in c.identities.items()},
        "composition": [{"first": s(f), "second": s(g), "result": s(h)}
                        for (g, f), h in c.composition.items()],
    }


def _stringify(x):
    import json
    from .report import show
    return json.dumps(show(x), sort_keys=True, separators=(",", ":"))


def presented_from_json(data: dict, name="C") -> FiniteCategory:
    if not isinstance(data, dict):
        raise StructuralError("category JSON must be an object")
    extra = set(data) - _CAT_FIELDS
    if extra:
        raise StructuralError(f"unknown category fields: {sorted(extra)}")
    missing = _CAT_FIELDS - set(data)
    if missing:
        raise StructuralError(f"missing category fields: {sorted(missing)}")
    morphisms = {}
    for entry in data["morphisms"]:
        if set(entry) != {"name", "dom", "cod"}:
            raise StructuralError(f"bad morphism entry {entry!r}")
        if entry["name"] in morphisms:
            raise StructuralError(f"duplicate morphism {entry['name']!r}")
        morphisms[entry["name"]] = (entry["dom"], entry["cod"])
    composition = {}
    for entry in data["composition"]:
        if set(entry) != {"first", "second", "result"}:
            raise StructuralError(f"bad composition entry {entry!r}")
        key = (entry["second"], entry["first"])
        if key in composition:
            raise StructuralError(f"duplicate composite for {key!r}")
        composition[key] = entry["result"]
    if len(set(data["objects"])) != len(data["objects"]):
        raise StructuralError("duplicate objects")
    c = FiniteCategory(data["objects"], morphisms, dict(data["identities"]), composition, name)
    c.validate()
    return c


def export_presented(c, obj_label=None, name=None) -> FiniteCategory:
    """Tabulate a category with complete finite homs as a presented one.

    Morphisms are named ``"<dom>-><cod>#<i>"`` in hom enumeration order.
    """
    from .sampling import max_enum
    from .errors import ResourceError
    obj_label = obj_label or str
    objs = c.objects()
    labels = {}
    for a in objs:
        lab = obj_label(a)
        if lab in labels.values():
            raise StructuralError(f"object labels collide on {lab!r}")
        labels[_key(a)] = lab
    homs = {}
    size = 0
    for a, b in itertools.product(objs, repeat=2):
        if not c.hom_complete(a, b):
            size = getattr(c, "hom_size", lambda a, b: None)(a, b)
            raise ResourceError(f"hom({a}, {b}) is not completely enumerable", estimate=size)
        homs[_key(a), _key(b)] = c.hom(a, b)
        size += len(homs[_key(a), _key(b)])
    cap = max_enum()
    composable = sum(len(homs[_key(a), _key(b)]) * len(homs[_key(b), _key(d)])
                     for a, b, d in itertools.product(objs, repeat=3))
    if composable > cap:
        raise ResourceError(f"composition table of {composable} entries exceeds {cap}",
                            estimate=composable)
    names = {}
    morphisms = {}
    for a, b in itertools.product(objs, repeat=2):
        for i, f in enumerate(homs[_key(a), _key(b)]):
            n = f"{labels[_key(a)]}->{labels[_key(b)]}#{i}"
            names[id(f)] = n
            morphisms[n] = (labels[_key(a)], labels[_key(b)])

    def lookup(a, b, h):
        for cand in homs[_key(a), _key(b)]:
            if c.mor_eq(cand, h):
                return names[id(cand)]
        raise StructuralError(f"composite {h!r} not found in hom({a}, {b})")

    identities = {labels[_key(a)]: lookup(a, a, c.identity(a)) for a in objs}
    composition = {}
    for a, b, d in itertools.product(objs, repeat=3):
        for f in homs[_key(a), _key(b)]:
            for g in homs[_key(b), _key(d)]:
                composition[names[id(g)], names[id(f)]] = lookup(a, d, c.compose(g, f))
    return FiniteCategory([labels[_key(a)] for a in objs], morphisms, identities,
                          composition, name or f"{_label(c)}")
