"""JSON bundles of presented categories, functors, transformations and relative monads.

A bundle is an object with any of the sections below; a bare presented
category (``objects``/``morphisms``/``identities``/``composition``) is
accepted as a one-category bundle named ``C``::

    {"categories": {"C": {...}},
     "functors": {"F": {"src": "C", "dst": "D", "on_obj": {..}, "on_mor": {..}}},
     "transformations": {"a": {"src": "F", "dst": "G", "components": {..}}},
     "relmonads": {"T": {"base": "I", "on_obj": {..}, "unit": {..},
                         "ext": [{"x": .., "y": .., "k": .., "result": ..}]}}}
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .core import (NatTrans, _CAT_FIELDS, check_category, check_functor, check_nat_trans,
                   functor_from_tables, presented_from_json)
from .errors import StructuralError
from .relmonad import RelativeMonad, check_relative_monad

_SECTIONS = {"categories", "functors", "transformations", "relmonads"}


@dataclass
class Bundle:
    categories: dict = field(default_factory=dict)
    functors: dict = field(default_factory=dict)
    transformations: dict = field(default_factory=dict)
    relmonads: dict = field(default_factory=dict)

    def reports(self, cap=None):
        """``[(section id, report)]`` for every item, in file order."""
        out = []
        for name, c in self.categories.items():
            out.append((f"category:{name}", check_category(c)))
        for name, F in self.functors.items():
            out.append((f"functor:{name}", check_functor(F, cap)))
        for name, a in self.transformations.items():
            out.append((f"transformation:{name}", check_nat_trans(a, cap)))
        for name, T in self.relmonads.items():
            out.append((f"relmonad:{name}", check_relative_monad(T, cap)))
        return out


def _fields(data, allowed, what):
    if not isinstance(data, dict):
        raise StructuralError(f"{what} must be a JSON object")
    extra = set(data) - set(allowed)
    if extra:
        raise StructuralError(f"unknown {what} fields: {sorted(extra)}")
    missing = set(allowed) - set(data)
    if missing:
        raise StructuralError(f"missing {what} fields: {sorted(missing)}")


def _ref(table, name, what):
    try:
        return table[name]
    except (KeyError, TypeError):
        raise StructuralError(f"unknown {what} {name!r}") from None


def load_bundle(data) -> Bundle:
    if isinstance(data, dict) and set(data) <= _CAT_FIELDS and data:
        return Bundle(categories={"C": presented_from_json(data, "C")})
    if not isinstance(data, dict):
        raise StructuralError("bundle must be a JSON object")
    extra = set(data) - _SECTIONS
    if extra:
        raise StructuralError(f"unknown bundle sections: {sorted(extra)}")
    b = Bundle()
    for name, c in data.get("categories", {}).items():
        b.categories[name] = presented_from_json(c, name)
    for name, f in data.get("functors", {}).items():
        _fields(f, ("src", "dst", "on_obj", "on_mor"), f"functor {name}")
        b.functors[name] = functor_from_tables(_ref(b.categories, f["src"], "category"),
                                               _ref(b.categories, f["dst"], "category"),
                                               f["on_obj"], f["on_mor"], name)
    for name, t in data.get("transformations", {}).items():
        _fields(t, ("src", "dst", "components"), f"transformation {name}")
        comps = t["components"]
        b.transformations[name] = NatTrans(_ref(b.functors, t["src"], "functor"),
                                           _ref(b.functors, t["dst"], "functor"),
                                           lambda a, comps=comps: comps.get(a), name)
    for name, r in data.get("relmonads", {}).items():
        b.relmonads[name] = _load_relmonad(name, r, b)
    return b


def _load_relmonad(name, r, b: Bundle) -> RelativeMonad:
    _fields(r, ("base", "on_obj", "unit", "ext"), f"relative monad {name}")
    I = _ref(b.functors, r["base"], "functor")
    C0, C = I.src, I.dst
    on_obj, unit = dict(r["on_obj"]), dict(r["unit"])
    ext = {}
    for entry in r["ext"]:
        _fields(entry, ("x", "y", "k", "result"), "ext entry")
        ext[entry["x"], entry["y"], entry["k"]] = entry["result"]
    for x in C0.objects():
        if x not in on_obj or x not in unit:
            raise StructuralError(f"{name}: object map or unit missing at {x!r}")
        if not C.is_object(on_obj[x]):
            raise StructuralError(f"{name}: {on_obj[x]!r} is not an object")
    for x, y in itertools.product(C0.objects(), repeat=2):
        for k in C.hom(I.on_obj(x), on_obj[y]):
            if (x, y, k) not in ext:
                raise StructuralError(f"{name}: extension table missing ({x}, {y}, {k})")
    return RelativeMonad(I, on_obj.__getitem__, unit.__getitem__,
                         lambda x, y, k: ext[x, y, k], name)


def load_bundle_file(path) -> Bundle:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise StructuralError(f"{path}: invalid JSON ({exc})") from None
    return load_bundle(data)
