import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rado.equation import canonicalize
from rado.formula import rado_from_canonical, rado_number, sandwich_bounds, special_case_value


@pytest.mark.parametrize(
    "coeffs, R",
    [([1, 1], 5), ([2, 2], 34), ([1, 2], 11), ([2, 3], 53), ([1, 1, 1], 11), ([1, 1, 2], 19), ([3, 3], 111)],
)
def test_rado_number_values(coeffs, R):
    assert rado_number(coeffs).value == R


@pytest.mark.parametrize(
    "coeffs, expected",
    [([1, 1, 1], ("BB", 11)), ([3, 3], ("Abbott", 111)), ([1, 1, 2], ("JS", 19)), ([2, 3], None)],
)
def test_special_cases(coeffs, expected):
    assert special_case_value(coeffs) == expected


@pytest.mark.parametrize(
    "coeffs, bounds", [([3, 2, 5], (208, 208)), ([1, 1], (5, 5)), ([2, 2, 2], (76, 76))]
)
def test_sandwich_examples(coeffs, bounds):
    assert sandwich_bounds(coeffs) == bounds


def all_specs(max_m=4, max_c=5):
    for m in range(2, max_m + 1):
        yield from itertools.product(range(1, max_c + 1), repeat=m)


def test_special_case_concordance():
    hits = 0
    for coeffs in all_specs():
        special = special_case_value(coeffs)
        if special is not None:
            hits += 1
            assert special[1] == rado_number(coeffs).value, coeffs
    assert hits > 100


def test_depends_only_on_canonical_form_and_order():
    rng = random.Random(7)
    for coeffs in all_specs(max_m=4, max_c=4):
        c = canonicalize(coeffs)
        R = rado_number(coeffs).value
        assert R == rado_number([c.a, c.b]).value
        shuffled = list(coeffs)
        rng.shuffle(shuffled)
        assert R == rado_number(shuffled).value


@given(st.integers(1, 10**4), st.integers(1, 10**4))
def test_dual_forms_agree(a, b):
    v = a + b
    assert rado_from_canonical(a, b) == a * (a + b) ** 2 + b == a * v * v + v - a


def test_sandwich_always_collapses():
    for coeffs in all_specs():
        lo, hi = sandwich_bounds(coeffs)
        assert lo == hi


def test_overflow_is_loud():
    with pytest.raises(OverflowError):
        rado_number([2**20, 2**21])
    # just inside the range
    a = 1
    b = 3 * 10**9
    assert rado_number([a, b]).value == (a + b) ** 2 + b


def test_formula_ignores_divisibility_side_condition():
    # b(b-1) divisible by a: a=2, b=2 and a=2, b=3
    assert rado_number([2, 2]).value == 34
    assert rado_number([2, 3]).value == 53
