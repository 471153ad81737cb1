import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relmon.errors import StructuralError
from relmon.sampling import product_sample, sample_indices
from relmon.semiring import BOOL, SEMIRINGS, Z2, Z3, Semiring, check_semiring, load_semiring
from relmon.sets import (FuncSpace, Pow, SetMap, Words, fin, plus1, plus1_case, plus1_inl,
                         plus1_point)
from relmon.zoo import set_category


def test_numerals_and_words():
    assert fin(3).elements() == (0, 1, 2)
    assert str(fin(4)) == "4"
    # words over two letters of length <= 3: 1 + 2 + 4 + 8
    assert len(Words(fin(2)).elements(3)) == 15
    assert Words(fin(0)).elements(3) == ((),)


def test_powerset_and_funcspace_sizes():
    assert len(Pow(fin(3)).elements(3)) == 8
    assert len(FuncSpace(fin(2), Z3).elements(1)) == 9


def test_plus1_tags():
    x = fin(2)
    assert plus1_case(x, plus1_point(x)) == (True, None)
    assert plus1_case(x, plus1_inl(x, 1)) == (False, 1)
    assert len(plus1(x).elements()) == 3


def test_hom_enumeration_complete_and_sampled():
    X = set_category(3, 1)
    assert len(X.hom(fin(2), fin(3))) == 9
    assert X.hom_complete(fin(2), fin(3))
    big = FuncSpace(fin(3), BOOL)
    assert not X.hom_complete(big, big)
    assert len(X.hom(big, big)) == X.hom_cap
    assert X.hom_size(big, big) == 8 ** 8


def test_mor_diff_reports_element():
    X = set_category(2, 1)
    f = SetMap(fin(2), fin(2), lambda a: a)
    g = SetMap(fin(2), fin(2), lambda a: 0)
    assert X.mor_diff(f, g) == (1, 1, 0)
    assert X.mor_eq(f, f)


def test_builtin_semirings_lawful():
    for R in SEMIRINGS.values():
        assert check_semiring(R).passed


def test_broken_semiring_witness():
    bad = Semiring.from_ops("bad", (0, 1), lambda a, b: (a + b) % 2, lambda a, b: a | b, 0, 1)
    rep = check_semiring(bad)
    assert not rep.passed
    assert "mul.unit" in rep.failed_axioms() or "annihilation" in rep.failed_axioms()


def test_semiring_json_round_trip(tmp_path):
    path = tmp_path / "z3.json"
    path.write_text(json.dumps(Z3.to_json()))
    R = load_semiring(path)
    assert R.to_json() == Z3.to_json()
    assert check_semiring(R).passed


def test_semiring_partial_table_is_structural():
    data = Z2.to_json()
    data["add"] = data["add"][:-1]
    with pytest.raises(StructuralError):
        check_semiring(Semiring.from_json(data))
    with pytest.raises(StructuralError):
        Semiring.from_json({**Z2.to_json(), "extra": 1})


def _brute_force_lawful(carrier, add, mul, zero, one):
    C = carrier
    for a, b, c in itertools.product(C, repeat=3):
        if add(add(a, b), c) != add(a, add(b, c)) or mul(mul(a, b), c) != mul(a, mul(b, c)):
            return False
        if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)):
            return False
        if mul(add(a, b), c) != add(mul(a, c), mul(b, c)):
            return False
    for a, b in itertools.product(C, repeat=2):
        if add(a, b) != add(b, a):
            return False
    return all(add(a, zero) == a and mul(a, one) == a == mul(one, a)
               and mul(a, zero) == zero == mul(zero, a) for a in C)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=4, max_size=4),
       st.lists(st.integers(0, 1), min_size=4, max_size=4))
def test_semiring_check_matches_brute_force(add_bits, mul_bits):
    add = lambda a, b: add_bits[2 * a + b]  # noqa: E731
    mul = lambda a, b: mul_bits[2 * a + b]  # noqa: E731
    R = Semiring.from_ops("r", (0, 1), add, mul, 0, 1)
    assert check_semiring(R).passed == _brute_force_lawful((0, 1), add, mul, 0, 1)


@given(st.integers(0, 2000), st.integers(1, 300), st.text(max_size=5))
def test_sampling_is_deterministic_and_sorted(total, cap, seed):
    a = sample_indices(total, cap, seed)
    assert a == sample_indices(total, cap, seed)
    assert a == sorted(set(a))
    assert len(a) == min(total, cap)


def test_product_sample_counts():
    inst, total = product_sample([range(3), range(4)], None)
    assert total == 12 and len(inst) == 12
    inst, total = product_sample([range(30), range(30)], 50, "s")
    assert total == 900 and len(inst) == 50
