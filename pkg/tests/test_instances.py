import pytest

from relmon.algebras import enumerate_algebras
from relmon.distributive import check_compatible_pair
from relmon.errors import StructuralError
from relmon.relmonad import check_monad, check_relative_monad
from relmon.semiring import Semiring
from relmon.sets import Pow, Words, fin
from relmon.suites import (BUILTINS, Params, builtin_law, builtin_lifting, builtin_relmonad,
                           suite)
from relmon.zoo import (builtin_freemonoid_pair, builtin_pointed_pair, builtin_powerset_relmonad,
                        builtin_vecspace_relmonad, freemonoid_powerset_d, identity_instances,
                        pointed_swap)

BROKEN = Semiring.from_ops("max-xor", (0, 1), max, lambda a, b: a ^ b, 0, 1)


def test_kappa_must_be_positive():
    with pytest.raises(StructuralError):
        builtin_powerset_relmonad(0)


def test_unlawful_semiring_is_rejected():
    with pytest.raises(StructuralError):
        builtin_vecspace_relmonad(BROKEN, 1)


def test_powerset_values():
    P = builtin_powerset_relmonad(2, 2)
    x = fin(2)
    assert P.on_obj(x) == Pow(x)
    assert P.unit(x).fn(1) == frozenset({1})
    assert len(Pow(x).elements()) == 4


def test_vector_space_unit_is_basis():
    V = builtin_vecspace_relmonad(Semiring.from_ops("z3", (0, 1, 2), lambda a, b: (a + b) % 3,
                                                    lambda a, b: a * b % 3, 0, 1), 3)
    n = fin(3)
    assert [V.unit(n).fn(i) for i in range(3)] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert len(V.on_obj(n).elements()) == 27


def test_freemonoid_pair_and_its_pool():
    pair = builtin_freemonoid_pair(2, 2)
    assert check_compatible_pair(pair).passed
    assert check_monad(pair.S).passed
    assert list(Words(fin(1)).elements()[:3]) == [(), (0,), (0, 0)]


def test_choice_law_is_cartesian_product():
    a = fin(3)
    d = freemonoid_powerset_d(a)
    w = (frozenset({0, 2}), frozenset({1}), frozenset({0, 1}))
    assert d.fn(w) == {(0, 1, 0), (0, 1, 1), (2, 1, 0), (2, 1, 1)}


def test_pointed_swap_exchanges_points():
    x = fin(1)
    s = pointed_swap(x)
    # elements of (1+1)+1: 0 is inl inl 0, 1 is inl of the inner point, 2 the outer point
    assert s.fn(0) == 0
    assert s.fn(1) == 2
    assert s.fn(2) == 1


def test_pointed_pool():
    pair = builtin_pointed_pair(2)
    assert [M.name for M in pair.pool()] == ["(1,0)", "(2,0)", "(2,1)"]


def test_identity_instances_pass():
    inst = identity_instances()
    assert check_relative_monad(inst["relmonad"]).passed
    assert check_compatible_pair(inst["pair"]).passed


@pytest.mark.parametrize("name", BUILTINS)
def test_every_builtin_has_a_suite(name):
    sections = suite(name, Params(kappa=2, max_word=2, max_dim=2))
    assert sections
    assert len({s for s, _ in sections}) == len(sections)


def test_lifting_builtins():
    p = Params(kappa=2, max_word=2, max_dim=2)
    for name in ("identity", "vecspace", "pointed-lifting"):
        assert builtin_lifting(name, p) is not None
    with pytest.raises(StructuralError):
        builtin_lifting("powerset", p)


def test_unknown_builtin():
    with pytest.raises(StructuralError):
        builtin_law("nope", Params())


def test_pointed_algebras_on_numerals():
    T = builtin_relmonad("pointed", Params(max_dim=2))
    assert len(enumerate_algebras(T, fin(2), [fin(k) for k in range(3)])) == 2
