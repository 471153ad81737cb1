import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relmon.core import poset_category
from relmon.errors import LawViolationError, StructuralError
from relmon.kleisli import kleisli_category
from relmon.relmonad import (Monad, RelativeMonad, check_monad, check_relative_monad,
                             check_relmonad_functor, compare_relmonads, embed_monad,
                             identity_monad, identity_relmonad, relmonad_from_adjunction)
from relmon.semiring import BOOL, Z3
from relmon.sets import FuncSpace, Pow, SetMap, fin, plus1_point
from relmon.zoo import (builtin_powerset_relmonad, builtin_vecspace_relmonad, pointed_monad,
                        powerset_ext, powerset_unit, set_category, words_monad)


def test_powerset_passes():
    rep = check_relative_monad(builtin_powerset_relmonad(2, 2))
    assert rep.passed, rep.format_text()
    assert check_relmonad_functor(builtin_powerset_relmonad(2, 2)).passed


@pytest.mark.parametrize("R", [BOOL, Z3])
def test_vector_spaces_pass(R):
    T = builtin_vecspace_relmonad(R, 2)
    assert check_relative_monad(T).passed
    assert check_relmonad_functor(T).passed


def test_identity_relmonad_on_presented_category_is_exhaustive():
    C = poset_category(range(3), lambda a, b: a <= b)
    rep = check_relative_monad(identity_relmonad(C))
    assert rep.passed and not rep.partial


def test_embedded_monads():
    X = set_category(2, 2)
    for M in (pointed_monad(X), words_monad(X), identity_monad(X)):
        assert check_monad(M).passed
        assert check_relative_monad(embed_monad(M)).passed


def test_embedding_a_broken_monad_raises():
    X = set_category(2, 1)
    M = pointed_monad(X)
    bad = Monad(X, M.functor, M.mult, lambda x: SetMap(x, M.obj(x), lambda a: plus1_point(x)),
                "bad")
    with pytest.raises(LawViolationError) as exc:
        embed_monad(bad)
    assert "unit.left" in exc.value.report.failed_axioms()


def test_unit_of_wrong_type_is_structural():
    P = builtin_powerset_relmonad(2, 2)
    T = RelativeMonad(P.base, Pow, lambda x: SetMap(x, x, lambda a: a), powerset_ext, "bad")
    with pytest.raises(StructuralError):
        check_relative_monad(T)


def test_monad_from_kleisli_adjunction_recovers_powerset():
    P = builtin_powerset_relmonad(2, 2)
    Kl, J0, U, t = kleisli_category(P)
    rec = relmonad_from_adjunction(J0, U, t)
    assert compare_relmonads(P, rec).passed


def _oracle_relation_compose(k, l, n):
    """Boolean relation composition: ``a ~ c`` iff some ``b`` has ``a ~ b ~ c``."""
    return {a: frozenset(c for b in k[a] for c in l[b]) for a in range(n)}


subsets3 = st.frozensets(st.integers(0, 2))


@settings(max_examples=80, deadline=None)
@given(st.lists(subsets3, min_size=3, max_size=3), st.lists(subsets3, min_size=3, max_size=3),
       st.lists(subsets3, min_size=3, max_size=3))
def test_powerset_extension_matches_relations(ks, ls, ms):
    x = fin(3)
    k = SetMap(x, Pow(x), lambda a: ks[a])
    l = SetMap(x, Pow(x), lambda a: ls[a])
    m = SetMap(x, Pow(x), lambda a: ms[a])
    kl = lambda a: powerset_ext(x, x, l).fn(k.fn(a))  # noqa: E731
    assert {a: kl(a) for a in range(3)} == _oracle_relation_compose(ks, ls, 3)
    # associativity of Kleisli composition, element-wise
    for A in Pow(x).elements():
        lhs = powerset_ext(x, x, SetMap(x, Pow(x), lambda a: powerset_ext(x, x, m).fn(l.fn(a))))
        rhs = powerset_ext(x, x, m).fn(powerset_ext(x, x, l).fn(A))
        assert lhs.fn(A) == rhs
    assert powerset_ext(x, x, k).fn(powerset_unit(x).fn(1)) == ks[1]


vec = st.tuples(st.integers(0, 2), st.integers(0, 2))


@settings(max_examples=60, deadline=None)
@given(st.lists(vec, min_size=2, max_size=2), vec)
def test_vector_extension_is_matrix_action(cols, v):
    T = builtin_vecspace_relmonad(Z3, 2)
    n = fin(2)
    alpha = SetMap(n, FuncSpace(n, Z3), lambda i: cols[i])
    got = T.ext(n, n, alpha).fn(v)
    want = tuple(sum(v[i] * cols[i][j] for i in range(2)) % 3 for j in range(2))
    assert got == want
