import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relmon.core import (FiniteCategory, NatTrans, check_category, check_functor,
                         check_nat_trans, comma_category, compose_functors, export_presented,
                         functor_from_tables, functors_equal, identity_functor, identity_nat,
                         monoid_category, poset_category, presented_from_json,
                         presented_to_json, terminal_category)
from relmon.errors import ResourceError, StructuralError, UnsupportedTierError
from relmon.report import LawReport
from relmon.zoo import set_category


def chain(n=3):
    return poset_category(range(n), lambda a, b: a <= b, f"Chain{n}")


def z_mod(n):
    return monoid_category(range(n), lambda g, f: (g + f) % n, 0, f"Z{n}")


def test_builtin_categories_pass():
    for c in (chain(), z_mod(3), terminal_category()):
        rep = check_category(c)
        assert rep.passed, rep.format_text()
        assert not rep.partial


def test_poset_hom_counts():
    c = chain(3)
    assert len(c.all_morphisms()) == 6
    assert c.hom(0, 2) == [(0, 2)]
    assert c.hom(2, 0) == []


def test_redirected_composite_fails_associativity_with_triple():
    c = z_mod(3)
    c.composition[1, 1] = 0
    rep = check_category(c)
    assert rep.failed_axioms() == ["associativity"]
    w = rep.witnesses("associativity")[0].witness
    assert set(w) == {"f", "g", "h"}
    f, g, h = w["f"], w["g"], w["h"]
    assert c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f)


def test_mistyped_composite_is_structural():
    c = chain(3)
    c.composition[(1, 2), (0, 1)] = (0, 1)
    with pytest.raises(StructuralError):
        check_category(c)


def test_missing_composite_is_structural():
    c = chain(3)
    del c.composition[(1, 2), (0, 1)]
    with pytest.raises(StructuralError, match="missing composite"):
        check_category(c)


def test_functor_checks():
    C = chain(3)
    assert check_functor(identity_functor(C)).passed
    on_mor = {f: 1 for f in C.all_morphisms()}
    on_mor.update({C.identity(a): 0 for a in C.objects()})
    bad = functor_from_tables(C, z_mod(2), {a: "*" for a in C.objects()}, on_mor, "parity")
    rep = check_functor(bad)
    assert rep.failed_axioms() == ["functor.composition"]


def test_functor_bad_object_is_structural():
    C = chain(2)
    F = functor_from_tables(C, C, {0: 0, 1: 7}, {f: f for f in C.all_morphisms()})
    with pytest.raises(StructuralError):
        check_functor(F)


def test_nat_trans_naturality_failure():
    C = chain(3)
    const0 = functor_from_tables(C, C, {a: 0 for a in C.objects()},
                                 {f: (0, 0) for f in C.all_morphisms()}, "0")
    Id = identity_functor(C)
    good = NatTrans(const0, Id, lambda a: (0, a), "bang")
    assert check_nat_trans(good).passed
    assert check_nat_trans(identity_nat(Id)).passed
    with pytest.raises(StructuralError):
        check_nat_trans(NatTrans(Id, const0, lambda a: (a, 0), "wrong"))


def test_functors_equal_and_composition():
    C = chain(3)
    Id = identity_functor(C)
    rep = functors_equal(compose_functors(Id, Id), Id, LawReport("eq"))
    assert rep.passed


def test_comma_of_identities():
    C = chain(3)
    Id = identity_functor(C)
    comma, pX, pY, rho = comma_category(Id, Id)
    # objects are the arrows of C; morphisms are commuting squares
    assert len(comma.objects()) == 6
    assert check_category(comma).passed
    assert check_functor(pX).passed and check_functor(pY).passed
    assert check_nat_trans(rho).passed


def test_comma_requires_presented():
    X = set_category(1, 1)
    Id = identity_functor(X)
    with pytest.raises(UnsupportedTierError):
        comma_category(Id, Id)


def test_presented_json_round_trip():
    c = z_mod(3)
    data = json.loads(json.dumps(presented_to_json(c)))
    back = presented_from_json(data, "Z3")
    assert check_category(back).to_json() == check_category(c).to_json()


def test_presented_json_rejects_bad_input():
    data = presented_to_json(chain(2))
    with pytest.raises(StructuralError, match="unknown"):
        presented_from_json({**data, "extra": []})
    dup = dict(data, morphisms=data["morphisms"] + data["morphisms"][:1])
    with pytest.raises(StructuralError, match="duplicate"):
        presented_from_json(dup)
    partial = dict(data, composition=data["composition"][1:])
    with pytest.raises(StructuralError):
        presented_from_json(partial)


def test_export_presented_of_presented_is_isomorphic():
    c = chain(3)
    e = export_presented(c, str, "copy")
    assert len(e.objects()) == 3 and len(e.all_morphisms()) == 6
    assert check_category(e).passed


def test_export_respects_enum_cap(monkeypatch):
    monkeypatch.setenv("RELMON_MAX_ENUM", "5")
    with pytest.raises(ResourceError) as exc:
        export_presented(chain(3), str)
    assert exc.value.estimate > 5


@st.composite
def preorders(draw):
    n = draw(st.integers(1, 4))
    rel = {(a, b) for a in range(n) for b in range(n)
           if a == b or draw(st.booleans())}
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(rel), repeat=2):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    return n, rel


@settings(max_examples=40, deadline=None)
@given(preorders())
def test_random_preorders_are_categories(data):
    n, rel = data
    c = poset_category(range(n), lambda a, b: (a, b) in rel)
    assert check_category(c).passed


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=9, max_size=9))
def test_monoid_table_check_matches_oracle(table):
    def op(g, f):
        # 0 is forced to be the unit; the other products come from the table
        if g == 0:
            return f
        if f == 0:
            return g
        return table[3 * g + f]
    elems = range(3)
    lawful = all(op(op(a, b), c) == op(a, op(b, c))
                 for a, b, c in itertools.product(elems, repeat=3))
    c = monoid_category(elems, op, 0)
    assert check_category(c).passed == lawful


def test_finite_category_unknown_morphism():
    c = FiniteCategory(["a"], {"i": ("a", "a")}, {"a": "i"}, {("i", "i"): "i"})
    with pytest.raises(StructuralError):
        c.compose("i", "nope")
