import math

import pytest

from relmon.algebras import (RelAlgebraMorphism, check_algebra_morphism,
                             check_em_relative_adjunction, check_rel_algebra, em_category,
                             em_forgetful, enumerate_algebras, free_algebra, table_algebra,
                             tabulate)
from relmon.core import check_category, check_functor
from relmon.errors import ResourceError, StructuralError
from relmon.relmonad import embed_monad, identity_relmonad
from relmon.semiring import BOOL, Z2
from relmon.sets import SetMap, fin
from relmon.zoo import (builtin_powerset_relmonad, builtin_vecspace_relmonad, identity_instances,
                        pointed_monad, set_category)


def pointed(maxsize=2):
    return embed_monad(pointed_monad(set_category(maxsize, 1)))


def test_free_algebras_are_lawful():
    P = builtin_powerset_relmonad(2, 2)
    for a in P.C0.objects():
        assert check_rel_algebra(free_algebra(P, a)).passed


def test_free_algebra_morphism():
    P = builtin_powerset_relmonad(2, 2)
    u = SetMap(fin(1), fin(2), lambda a: 1)
    m = RelAlgebraMorphism(free_algebra(P, fin(1)), free_algebra(P, fin(2)), P.fmap(u))
    assert check_algebra_morphism(m).passed


@pytest.mark.parametrize("n", [0, 1, 2])
def test_pointed_algebras_are_choices_of_point(n):
    # an algebra X + 1 -> X is determined by where the new point goes
    T = pointed()
    algs = enumerate_algebras(T, fin(n), [fin(k) for k in range(3)])
    assert len(algs) == n
    for alg in algs:
        assert check_rel_algebra(alg, arities=[fin(k) for k in range(3)]).passed


def test_vector_space_structures_over_z2():
    # labelled Z/2-vector space structures on sets of size 1, 2, 4: k! / |GL_d(F2)|
    T = builtin_vecspace_relmonad(Z2, 2)
    dims = [fin(d) for d in range(3)]
    counts = [len(enumerate_algebras(T, T.on_obj(d), dims)) for d in dims]
    gl = [1, 1, 6]
    assert counts == [math.factorial(2 ** d) // gl[d] for d in range(3)]


def test_mutated_table_algebra_fails_unit():
    T = builtin_vecspace_relmonad(BOOL, 1)
    dims = [fin(0), fin(1)]
    alg = tabulate(free_algebra(T, fin(1)), dims)
    zero = {k: SetMap(v.dom, v.cod, lambda x: (0,)) for k, v in alg.table.items()}
    bad = table_algebra(T, alg.carrier, zero, "zero")
    rep = check_rel_algebra(bad, arities=dims)
    assert "unit" in rep.failed_axioms()


def test_table_algebra_outside_arities_is_structural():
    T = builtin_vecspace_relmonad(BOOL, 1)
    alg = tabulate(free_algebra(T, fin(1)), [fin(0)])
    with pytest.raises(StructuralError):
        check_rel_algebra(alg, arities=[fin(1)])


def test_em_category_of_pointed_sets():
    T = pointed()
    sizes = [fin(k) for k in range(3)]
    em = em_category(T, sizes, sizes)
    assert len(em.objects()) == 3
    assert check_category(em).passed
    assert check_functor(em_forgetful(em)).passed


def test_em_of_identity_matches_base():
    inst = identity_instances()
    C = inst["category"]
    T = identity_relmonad(C)
    em = em_category(T, C.objects())
    assert len(em.objects()) == len(C.objects())
    assert len(em.all_morphisms()) == len(C.all_morphisms())
    assert check_em_relative_adjunction(T, C.objects()).passed


def test_em_relative_adjunctions():
    T = pointed()
    sizes = [fin(k) for k in range(3)]
    rep = check_em_relative_adjunction(T, sizes, sizes)
    assert rep.passed, rep.format_text()
    assert rep.notes  # free algebras on 2 have carrier 3, outside the pool
    V = builtin_vecspace_relmonad(Z2, 1)
    dims = [fin(0), fin(1)]
    assert check_em_relative_adjunction(V, [V.on_obj(d) for d in dims], dims).passed


def test_enumeration_budget(monkeypatch):
    monkeypatch.setenv("RELMON_MAX_ENUM", "3")
    T = builtin_vecspace_relmonad(Z2, 2)
    with pytest.raises(ResourceError):
        enumerate_algebras(T, T.on_obj(fin(2)), [fin(d) for d in range(3)])
