"""Named builtin instances, their law suites, and conversion artifacts.

A suite is a list of ``(section id, thunk)`` pairs; each thunk returns a
:class:`~relmon.report.LawReport`.  Conversion artifacts are JSON documents
that name their source (builtin plus parameters plus conversion steps) and
carry tables of the converted structure on the test domain, so they can be
rebuilt and compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebras import check_em_relative_adjunction, em_category
from .core import check_category, export_presented
from .distributive import (LiftingToAlgebras, RelDistLaw, KleisliExtension,
                           check_compatible_pair, check_distributive_law_as_monad,
                           check_kleisli_extension, check_lifting, check_rel_dist_law,
                           distr_to_kleisli_extension, distr_to_lifting,
                           kleisli_extension_to_distr, lifting_to_distr)
from .errors import StructuralError
from .kleisli import KleisliCategory, check_kleisli_relative_adjunction, export_kleisli
from .relmonad import check_relative_monad, check_relmonad_functor, embed_monad
from .report import show
from .sampling import DEFAULT_HOM_CAP, Bounds
from .semiring import BOOL, Semiring
from .sets import SetCategory, fin
from .zoo import (builtin_freemonoid_pair, builtin_freemonoid_powerset_law,
                  builtin_pointed_lifting, builtin_pointed_law, builtin_pointed_pair,
                  builtin_pointed_self, builtin_powerset_relmonad, builtin_vecspace_relmonad,
                  identity_instances, pointed_monad, set_category)

BUILTINS = ("identity", "powerset", "freemonoid", "freemonoid-powerset", "vecspace",
            "pointed", "pointed-lifting", "pointed-self")


@dataclass(frozen=True)
class Params:
    """Builtin parameters.  ``max_dim`` also bounds pointed-set sizes."""

    kappa: int = 3
    max_word: int = 3
    max_dim: int = 3
    semiring: Semiring = field(default=BOOL, compare=False)

    def as_dict(self):
        return {"kappa": self.kappa, "max_word": self.max_word, "max_dim": self.max_dim,
                "semiring": self.semiring.name}

    def bounds(self):
        b = Bounds(self.kappa, self.max_word, self.max_dim).as_dict()
        b["semiring"] = self.semiring.name
        return b


def _unknown(name, kind):
    raise StructuralError(f"builtin {name!r} has no {kind}; "
                          f"known builtins: {', '.join(BUILTINS)}")


# --------------------------------------------------------------------------
# instance resolution


def builtin_relmonad(name: str, p: Params):
    if name == "identity":
        return identity_instances()["relmonad"]
    if name == "powerset":
        return builtin_powerset_relmonad(p.kappa, p.max_word)
    if name == "vecspace":
        return builtin_vecspace_relmonad(p.semiring, p.max_dim)
    if name == "pointed":
        return embed_monad(pointed_monad(set_category(p.max_dim, 1)), verify=False)
    if name == "pointed-self":
        return builtin_pointed_self(p.max_dim).T
    _unknown(name, "relative monad")


def builtin_law(name: str, p: Params) -> RelDistLaw:
    if name == "identity":
        return identity_instances()["law"]
    if name == "freemonoid-powerset":
        return builtin_freemonoid_powerset_law(p.kappa, p.max_word)
    if name in ("vecspace", "pointed-lifting"):
        return builtin_pointed_law(p.semiring, p.max_dim)
    if name == "pointed-self":
        return builtin_pointed_self(p.max_dim)
    _unknown(name, "distributive law")


def builtin_lifting(name: str, p: Params) -> LiftingToAlgebras:
    if name == "identity":
        return identity_instances()["lifting"]
    if name in ("vecspace", "pointed-lifting"):
        return builtin_pointed_lifting(p.semiring, p.max_dim)
    _unknown(name, "lifting")


def em_pool(name: str, p: Params):
    """``(relative monad, carrier pool, arities)`` used for the algebra category."""
    T = builtin_relmonad(name, p)
    if name == "identity":
        return T, T.C0.objects(), None
    if name == "vecspace":
        # algebra enumeration grows quickly with the carrier; dims <= 1 keeps it fast
        top = min(p.max_dim, 1)
        dims = [fin(n) for n in range(top + 1)]
        return T, [T.on_obj(n) for n in dims], dims
    if name == "pointed":
        sizes = [fin(n) for n in range(min(p.max_dim, 2) + 1)]
        return T, sizes, sizes
    _unknown(name, "algebra category")


# --------------------------------------------------------------------------
# suites


def _relmonad_sections(T, kleisli=True, adjunction=True):
    out = [("relmonad", lambda: check_relative_monad(T)),
           ("functor", lambda: check_relmonad_functor(T))]
    if kleisli:
        out.append(("kleisli.category", lambda: check_category(KleisliCategory(T))))
    if adjunction:
        out.append(("kleisli.adjunction", lambda: check_kleisli_relative_adjunction(T)))
    return out


def _law_sections(law: RelDistLaw, lifting: LiftingToAlgebras | None = None):
    lifting = lifting or distr_to_lifting(law)
    return [("pair", lambda: check_compatible_pair(law.pair)),
            ("law", lambda: check_rel_dist_law(law)),
            ("law.monad", lambda: check_distributive_law_as_monad(law)),
            ("lifting", lambda: check_lifting(lifting)),
            ("kleisli.extension", lambda: check_kleisli_extension(
                distr_to_kleisli_extension(law)))]


def _noted(thunk, text):
    def run():
        rep = thunk()
        rep.note(text)
        return rep
    return run


def _em_section(name, p):
    def run():
        T, pool, arities = em_pool(name, p)
        rep = check_em_relative_adjunction(T, pool, arities)
        if arities is not None:
            rep.note(f"algebra carriers and arities limited to {[str(a) for a in arities]}")
        return rep
    return ("em.adjunction", run)


def suite(name: str, p: Params):
    """Every applicable checker for a builtin, in a fixed order."""
    if name == "identity":
        inst = identity_instances()
        return ([("category", lambda: check_category(inst["category"]))]
                + _relmonad_sections(inst["relmonad"]) + [_em_section(name, p)]
                + _law_sections(inst["law"], inst["lifting"]))
    if name == "powerset":
        # the adjunction check compares whole hom-sets, so it runs on sets of size <= 2
        T = builtin_powerset_relmonad(p.kappa, p.max_word)
        small = builtin_powerset_relmonad(min(p.kappa, 2), p.max_word)
        return _relmonad_sections(T, adjunction=False) + [
            ("kleisli.adjunction", _noted(lambda: check_kleisli_relative_adjunction(small),
                                          f"run on sets of size <= {min(p.kappa, 2)}"))]
    if name == "freemonoid":
        return [("pair", lambda: check_compatible_pair(builtin_freemonoid_pair(p.kappa,
                                                                              p.max_word)))]
    if name == "freemonoid-powerset":
        return _law_sections(builtin_freemonoid_powerset_law(p.kappa, p.max_word))
    if name == "vecspace":
        # the adjunction check needs complete hom-sets R^(n*m), at most DEFAULT_HOM_CAP of them
        T = builtin_vecspace_relmonad(p.semiring, p.max_dim)
        n = p.max_dim
        while n > 0 and len(p.semiring.carrier) ** (n * n) > DEFAULT_HOM_CAP:
            n -= 1
        small = builtin_vecspace_relmonad(p.semiring, n)
        return _relmonad_sections(T, adjunction=False) + [
            ("kleisli.adjunction", _noted(lambda: check_kleisli_relative_adjunction(small),
                                          f"run on dimensions <= {n}")),
            _em_section(name, p)]
    if name == "pointed":
        return [("pair", lambda: check_compatible_pair(builtin_pointed_pair(p.max_dim))),
                ("relmonad", lambda: check_relative_monad(builtin_relmonad(name, p))),
                _em_section(name, p)]
    if name == "pointed-lifting":
        L = builtin_pointed_lifting(p.semiring, p.max_dim)
        return _law_sections(lifting_to_distr(L), L)
    if name == "pointed-self":
        return _law_sections(builtin_pointed_self(p.max_dim))
    _unknown(name, "law suite")


# --------------------------------------------------------------------------
# conversion artifacts

DIRECTIONS = {"d-to-lift": ("law", "lifting"), "lift-to-d": ("lifting", "law"),
              "d-to-kleisli": ("law", "kleisli-extension"),
              "kleisli-to-d": ("kleisli-extension", "law")}


def convert(obj, direction):
    src, _ = DIRECTIONS[direction]
    if kind_of(obj) != src:
        raise StructuralError(f"{direction} needs a {src}, got a {kind_of(obj)}")
    if direction == "d-to-lift":
        return distr_to_lifting(obj)
    if direction == "lift-to-d":
        return lifting_to_distr(obj)
    if direction == "d-to-kleisli":
        return distr_to_kleisli_extension(obj)
    return kleisli_extension_to_distr(obj)


def kind_of(obj) -> str:
    if isinstance(obj, RelDistLaw):
        return "law"
    if isinstance(obj, LiftingToAlgebras):
        return "lifting"
    if isinstance(obj, KleisliExtension):
        return "kleisli-extension"
    raise StructuralError(f"not a convertible structure: {obj!r}")


def checker(obj):
    kind = kind_of(obj)
    if kind == "law":
        return check_rel_dist_law(obj)
    if kind == "lifting":
        return check_lifting(obj)
    return check_kleisli_extension(obj)


def _tab(cat, f):
    if isinstance(cat, SetCategory):
        return [[show(x), show(f.fn(x))] for x in cat.elements(f.dom)]
    return show(cat.show(f))


def _label(a):
    return str(a)


def tables(obj) -> dict:
    """The structure tabulated on its test domain (stable order)."""
    kind = kind_of(obj)
    X = obj.T.C
    if kind == "law":
        return {"d": {_label(a): _tab(X, obj.d(a)) for a in obj.T.C0.objects()}}
    if kind == "lifting":
        return {"assign": {M.name: _tab(X, obj.assign(M)) for M in obj.pair.pool()}}
    Kl = obj.kl[0]
    St = obj.Stilde
    objs = obj.T.C0.objects()
    return {"obj": {_label(a): _label(St.obj(a)) for a in objs},
            "mult": {_label(a): _tab(X, St.mult(a).f) for a in objs if Kl.is_object(a)},
            "unit": {_label(a): _tab(X, St.unit(a).f) for a in objs},
            "d": {_label(a): _tab(X, obj.d(a)) for a in objs}}


def source_object(builtin: str, p: Params, kind: str):
    if kind == "law":
        return builtin_law(builtin, p)
    if kind == "lifting":
        return builtin_lifting(builtin, p)
    return distr_to_kleisli_extension(builtin_law(builtin, p))


def artifact(obj, builtin: str, p: Params, steps: list) -> dict:
    return {"artifact": kind_of(obj), "name": obj.name,
            "source": {"builtin": builtin, "params": p.as_dict()},
            "steps": list(steps), "tables": tables(obj)}


_ARTIFACT_FIELDS = {"artifact", "name", "source", "steps", "tables"}


def rebuild(data: dict, semiring_loader) -> tuple:
    """``(structure, builtin, params, steps)`` from an artifact; tables must match."""
    if not isinstance(data, dict) or set(data) != _ARTIFACT_FIELDS:
        raise StructuralError(f"artifact needs exactly the fields {sorted(_ARTIFACT_FIELDS)}")
    src = data["source"]
    if not isinstance(src, dict) or set(src) != {"builtin", "params"}:
        raise StructuralError("artifact source needs 'builtin' and 'params'")
    raw = dict(src["params"])
    try:
        p = Params(int(raw.pop("kappa")), int(raw.pop("max_word")), int(raw.pop("max_dim")),
                   semiring_loader(raw.pop("semiring")))
    except KeyError as exc:
        raise StructuralError(f"artifact params missing {exc}") from None
    if raw:
        raise StructuralError(f"unknown artifact params: {sorted(raw)}")
    steps = list(data["steps"])
    if steps:
        first = DIRECTIONS.get(steps[0])
        if first is None:
            raise StructuralError(f"unknown conversion step {steps[0]!r}")
        obj = source_object(src["builtin"], p, first[0])
    else:
        obj = source_object(src["builtin"], p, data["artifact"])
    for step in steps:
        if step not in DIRECTIONS:
            raise StructuralError(f"unknown conversion step {step!r}")
        obj = convert(obj, step)
    if kind_of(obj) != data["artifact"]:
        raise StructuralError("artifact kind does not match its conversion steps")
    if tables(obj) != data["tables"]:
        raise StructuralError("artifact tables do not match the structure they name")
    return obj, src["builtin"], p, steps


# --------------------------------------------------------------------------
# exports


def export(kind: str, name: str, p: Params):
    """A presented category: ``Kl(T)`` or the algebra category of a builtin."""
    if kind == "kleisli":
        T = builtin_relmonad(name, p)
        return export_kleisli(T)
    if kind == "em":
        T, pool, arities = em_pool(name, p)
        em = em_category(T, pool, arities)
        return export_presented(em, lambda a: a, f"Alg({T.name})")
    raise StructuralError(f"unknown export kind {kind!r}")
