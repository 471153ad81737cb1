"""Acceptance criteria 1 to 9, one test each.

Each test carries a ``criterion`` marker; ``conftest.py`` prints one
PASS/FAIL line per criterion at the end of the run.
"""

import itertools
import json
import time

import pytest

from relmon.core import (check_category, check_functor, functors_equal, presented_from_json,
                         presented_to_json)
from relmon.distributive import (LiftingToAlgebras, check_kleisli_extension, check_lifting,
                                 distr_to_kleisli_extension, distr_to_lifting,
                                 kleisli_extension_to_distr, kleisli_extensions_equal,
                                 laws_equal, lifting_to_distr, liftings_equal)
from relmon.kleisli import kleisli_category
from relmon.mutations import MUTATIONS
from relmon.operators import (comma_functor_to_operator, operator_to_comma_functor,
                              operators_equal)
from relmon.report import LawReport
from relmon.semiring import BOOL, SEMIRINGS, Z2, Z3
from relmon.sets import SetMap, plus1, plus1_case, plus1_inl, plus1_point
from relmon.suites import BUILTINS, Params, export, suite
from relmon.zoo import (builtin_freemonoid_powerset_law, builtin_pointed_law,
                        builtin_pointed_lifting, builtin_pointed_self, builtin_powerset_relmonad,
                        builtin_vecspace_relmonad)
from test_operators import presented_fixtures

SEMIRING_DEPENDENT = ("vecspace", "pointed-lifting")


def _law_round_trip(law):
    back = lifting_to_distr(distr_to_lifting(law))
    return laws_equal(law.d, back.d, law.T.C, law.T.C0.objects(), LawReport("round trip"))


@pytest.mark.criterion(1, "every builtin passes every applicable checker at default bounds")
def test_criterion_1_law_suites():
    start = time.perf_counter()
    failures = []
    for name in BUILTINS:
        rings = SEMIRINGS.values() if name in SEMIRING_DEPENDENT else [BOOL]
        for R in rings:
            for sec, run in suite(name, Params(semiring=R)):
                rep = run()
                if not rep.passed:
                    failures.append(f"{name}[{R.name}] {sec}: {rep.failed_axioms()}")
    elapsed = time.perf_counter() - start
    assert not failures, failures
    assert elapsed < 300, f"law suites took {elapsed:.0f}s"


@pytest.mark.criterion(2, "distr -> lifting -> distr is the identity")
def test_criterion_2_law_lifting_law():
    laws = [builtin_freemonoid_powerset_law()] + [builtin_pointed_law(R) for R in (BOOL, Z2, Z3)]
    for law in laws:
        rep = _law_round_trip(law)
        assert rep.passed, rep.format_text()
        assert rep.axioms["d.equal"].checked > 0


@pytest.mark.criterion(3, "lifting -> distr -> lifting reproduces Vhat on the pool")
def test_criterion_3_lifting_law_lifting():
    for R in (BOOL, Z2, Z3):
        L = builtin_pointed_lifting(R)
        back = distr_to_lifting(lifting_to_distr(L))
        rep = liftings_equal(L, back, LawReport("round trip"))
        assert rep.passed, rep.format_text()
        assert rep.axioms["lifting.equal"].checked == len(L.pair.pool())


@pytest.mark.criterion(4, "distr <-> Kleisli extension round trips")
def test_criterion_4_kleisli_round_trips():
    for law in (builtin_freemonoid_powerset_law(), builtin_pointed_law(BOOL)):
        e = distr_to_kleisli_extension(law)
        assert check_kleisli_extension(e).passed
        d = kleisli_extension_to_distr(e)
        rep = laws_equal(law.d, d.d, law.T.C, law.T.C0.objects(), LawReport("d"))
        e2 = distr_to_kleisli_extension(d, e.kl)
        kleisli_extensions_equal(e, e2, rep, "ext.")
        assert rep.passed, rep.format_text()


def _bool_matmul(A, B, n, m, k):
    """Rows of ``A`` (n x m) times ``B`` (m x k) over the Boolean semiring."""
    return [tuple(int(any(A[i][j] and B[j][l] for j in range(m))) for l in range(k))
            for i in range(n)]


def _relation_compose(A, B, n):
    return [frozenset(c for b in A[a] for c in B[b]) for a in range(n)]


def _all_composites(T, oracle):
    """Compare ``Kl(T)`` composition with ``oracle`` on every composable pair."""
    Kl = kleisli_category(T)[0]
    pairs = 0
    for a, b, c in itertools.product(Kl.objects(), repeat=3):
        n, m, k = (len(x.elements()) for x in (a, b, c))
        F, G = list(Kl.hom(a, b)), list(Kl.hom(b, c))
        rows = {id(h): [h.f.fn(i) for i in range(len(h.src.elements()))] for h in F + G}
        for f, g in itertools.product(F, G):
            got = [Kl.compose(g, f).f.fn(i) for i in range(n)]
            assert got == oracle(rows[id(f)], rows[id(g)], n, m, k), (f, g)
            pairs += 1
    return pairs


@pytest.mark.criterion(5, "Kleisli composition matches matrix and relation oracles")
def test_criterion_5_oracles():
    V = builtin_vecspace_relmonad(BOOL, 3)
    # sum over n, m, k <= 3 of 2^(nm) * 2^(mk)
    expected = sum(2 ** (n * m + m * k) for n, m, k in itertools.product(range(4), repeat=3))
    assert _all_composites(V, _bool_matmul) == expected
    P = builtin_powerset_relmonad(3, 1)
    expected = sum(2 ** (m * n + k * m) for n, m, k in itertools.product(range(4), repeat=3))
    assert _all_composites(P, lambda A, B, n, m, k: _relation_compose(A, B, n)) == expected


@pytest.mark.criterion(6, "documented mutations are rejected with witnesses")
def test_criterion_6_mutations():
    families = set()
    for m in MUTATIONS:
        rep = m.run()
        assert not rep.passed, m.name
        assert m.breaks in rep.failed_axioms(), (m.name, rep.failed_axioms())
        assert rep.witnesses(m.breaks), m.name
        families.add(m.family)
    assert len(families) >= 6
    assert {"category associativity", "functoriality", "monad unit", "D2",
            "lifting condition (iii)", "Kleisli extension condition (i)"} <= families


def _pointed_oracle(M):
    """``(X, p)`` lifts to ``X + 1`` with the new outer point sent to ``p``."""
    x = M.carrier
    tx = plus1(x)
    p = M.structure.fn(plus1_point(x))

    def go(e):
        outer, y = plus1_case(tx, e)
        return plus1_inl(x, p) if outer else y
    return SetMap(plus1(tx), tx, go, "oracle")


@pytest.mark.criterion(7, "pointed-set monad over itself matches the classical lifting")
def test_criterion_7_degeneration():
    law = builtin_pointed_self()
    oracle = LiftingToAlgebras(law.T, law.pair, _pointed_oracle, "oracle")
    assert check_lifting(oracle).passed
    rep = liftings_equal(distr_to_lifting(law), oracle, LawReport("lifting"))
    back = lifting_to_distr(oracle)
    laws_equal(law.d, back.d, law.T.C, law.T.C0.objects(), rep)
    assert rep.passed, rep.format_text()
    assert rep.axioms["lifting.equal"].checked == len(law.pair.pool())


@pytest.mark.criterion(8, "operator <-> comma functor round trips on presented fixtures")
def test_criterion_8_operator_comma():
    fixtures = presented_fixtures()
    assert len(fixtures) >= 2
    for op in fixtures:
        H = operator_to_comma_functor(op)
        assert check_functor(H).passed
        back = comma_functor_to_operator(H)
        rep = operators_equal(op, back, LawReport("operator"))
        functors_equal(H, operator_to_comma_functor(back, H.src, H.dst), rep)
        assert rep.passed and not rep.partial, rep.format_text()


@pytest.mark.criterion(9, "exported categories re-verify with identical reports")
def test_criterion_9_serialization():
    for kind, name in (("kleisli", "vecspace"), ("em", "pointed")):
        cat = export(kind, name, Params(max_dim=2))
        text = json.dumps(presented_to_json(cat))
        again = presented_from_json(json.loads(text), cat.name)
        before, after = check_category(cat), check_category(again)
        assert before.passed
        assert before.to_json() == after.to_json()
        assert presented_to_json(again) == json.loads(text)
