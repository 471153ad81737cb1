"""Finite semirings given by operation tables."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property

from .errors import StructuralError
from .report import LawReport


@dataclass(frozen=True)
class Semiring:
    name: str
    carrier: tuple
    add_table: tuple  # ((a, b, a+b), ...)
    mul_table: tuple
    zero: object
    one: object

    @cached_property
    def _add(self):
        return {(a, b): c for a, b, c in self.add_table}

    @cached_property
    def _mul(self):
        return {(a, b): c for a, b, c in self.mul_table}

    def add(self, a, b):
        return self._add[a, b]

    def mul(self, a, b):
        return self._mul[a, b]

    def sum(self, xs):
        acc = self.zero
        add = self._add
        for x in xs:
            acc = add[acc, x]
        return acc

    @classmethod
    def from_ops(cls, name, carrier, add, mul, zero, one):
        carrier = tuple(carrier)
        return cls(name, carrier,
                   tuple((a, b, add(a, b)) for a in carrier for b in carrier),
                   tuple((a, b, mul(a, b)) for a in carrier for b in carrier),
                   zero, one)

    @classmethod
    def from_json(cls, data):
        """``{"name", "carrier", "add": [[a,b,c],...], "mul": [...], "zero", "one"}``."""
        known = {"name", "carrier", "add", "mul", "zero", "one"}
        extra = set(data) - known
        if extra:
            raise StructuralError(f"unknown semiring fields: {sorted(extra)}")
        missing = known - set(data)
        if missing:
            raise StructuralError(f"missing semiring fields: {sorted(missing)}")
        return cls(data["name"], tuple(data["carrier"]),
                   tuple(tuple(r) for r in data["add"]),
                   tuple(tuple(r) for r in data["mul"]),
                   data["zero"], data["one"])

    def to_json(self):
        return {"name": self.name, "carrier": list(self.carrier),
                "add": [list(r) for r in self.add_table],
                "mul": [list(r) for r in self.mul_table],
                "zero": self.zero, "one": self.one}

    def __str__(self):
        return self.name


BOOL = Semiring.from_ops("bool", (0, 1), lambda a, b: a | b, lambda a, b: a & b, 0, 1)
Z2 = Semiring.from_ops("z2", (0, 1), lambda a, b: (a + b) % 2, lambda a, b: a * b, 0, 1)
Z3 = Semiring.from_ops("z3", (0, 1, 2), lambda a, b: (a + b) % 3,
                       lambda a, b: (a * b) % 3, 0, 1)

SEMIRINGS = {"bool": BOOL, "z2": Z2, "z3": Z3}


def load_semiring(path):
    with open(path) as fh:
        return Semiring.from_json(json.load(fh))


def _structure(R: Semiring):
    carrier = set(R.carrier)
    if R.zero not in carrier or R.one not in carrier:
        raise StructuralError(f"{R.name}: zero/one outside the carrier")
    for label, table in (("add", R._add), ("mul", R._mul)):
        for a, b in itertools.product(R.carrier, repeat=2):
            if (a, b) not in table:
                raise StructuralError(f"{R.name}: {label} table missing ({a}, {b})")
            if table[a, b] not in carrier:
                raise StructuralError(f"{R.name}: {label}({a}, {b}) outside the carrier")


def check_semiring(R: Semiring) -> LawReport:
    """Exhaustively check the semiring axioms on the tables."""
    _structure(R)
    rep = LawReport(f"semiring {R.name}")
    add, mul, C = R.add, R.mul, R.carrier
    for a, b, c in itertools.product(C, repeat=3):
        w = {"a": a, "b": b, "c": c}
        rep.record("add.assoc", add(add(a, b), c) == add(a, add(b, c)), w,
                   add(add(a, b), c), add(a, add(b, c)))
        rep.record("mul.assoc", mul(mul(a, b), c) == mul(a, mul(b, c)), w,
                   mul(mul(a, b), c), mul(a, mul(b, c)))
        rep.record("distrib.left", mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), w,
                   mul(a, add(b, c)), add(mul(a, b), mul(a, c)))
        rep.record("distrib.right", mul(add(a, b), c) == add(mul(a, c), mul(b, c)), w,
                   mul(add(a, b), c), add(mul(a, c), mul(b, c)))
    for a, b in itertools.product(C, repeat=2):
        rep.record("add.comm", add(a, b) == add(b, a), {"a": a, "b": b}, add(a, b), add(b, a))
    for a in C:
        w = {"a": a}
        rep.record("add.unit", add(a, R.zero) == a, w, add(a, R.zero), a)
        rep.record("mul.unit", mul(a, R.one) == a == mul(R.one, a), w,
                   (mul(a, R.one), mul(R.one, a)), a)
        rep.record("annihilation", mul(a, R.zero) == R.zero == mul(R.zero, a), w,
                   (mul(a, R.zero), mul(R.zero, a)), R.zero)
    return rep
