import itertools

import pytest

from brute import valid_coloring_masks
from rado.equation import Coloring, canonicalize, find_monochromatic
from rado.formula import rado_number
from rado.solver import SearchOptions, Verdict
from rado.witness import (
    CONFIRMED,
    INCONCLUSIVE,
    WITNESS_ONLY,
    certify_pair,
    extremal_coloring,
    interval_layout,
    is_maximal,
)


def ones(coloring):
    return [i for i in range(1, coloring.n + 1) if coloring[i]]


def test_schur_witness():
    col = extremal_coloring([1, 1])
    assert col == Coloring.from_bits([0, 1, 1, 0])


def test_one_two_witness():
    col = extremal_coloring([1, 2])
    assert col.n == 10
    assert ones(col) == list(range(3, 9))


def test_two_two_witness():
    col = extremal_coloring([2, 2])
    assert col.n == 33
    assert ones(col) == list(range(4, 16))


@pytest.mark.parametrize("coeffs", [(1, 1), (1, 2), (2, 1), (1, 1, 1), (1, 3)])
def test_witness_among_brute_force_valid_colorings(coeffs):
    col = extremal_coloring(coeffs)
    mask = sum(bit << i for i, bit in enumerate(col.bits))
    assert mask in set(int(x) for x in valid_coloring_masks(coeffs, col.n))


def test_witness_sweep():
    for m in (2, 3):
        for coeffs in itertools.product(range(1, 5), repeat=m):
            col = extremal_coloring(coeffs)
            assert col.n == rado_number(coeffs).value - 1
            assert find_monochromatic(col, coeffs) is None


@pytest.mark.parametrize("coeffs", [(1, 1), (1, 2), (2, 3), (3, 2, 5), (4, 4, 4)])
def test_anchors_and_blocks(coeffs):
    v = canonicalize(coeffs).v
    col = extremal_coloring(coeffs)
    assert (col[1], col[v], col[v * v]) == (0, 1, 0)
    layout = interval_layout(coeffs)
    (z1, z2), one = layout.zero_blocks, layout.one_block
    assert z1 == (1, v - 1) and one == (v, v * v - 1) and z2 == (v * v, layout.n)
    assert z1[1] + 1 == one[0] and one[1] + 1 == z2[0]


@pytest.mark.parametrize("coeffs", [(1, 1), (1, 2), (1, 3), (2, 2), (1, 1, 1), (2, 3), (1, 1, 2)])
def test_witness_is_maximal(coeffs):
    assert is_maximal(coeffs)
    assert is_maximal(coeffs, SearchOptions(lemma21=True))


def test_certificates():
    cert = certify_pair([1, 1], via_search=True)
    assert cert.status == CONFIRMED and cert.witness_n == 4 and cert.search.verdict is Verdict.UNSAT
    assert cert.summary() == "R=5 CONFIRMED (witness n=4 valid, UNSAT n=5)"
    cert = certify_pair([2, 3])
    assert cert.status == WITNESS_ONLY and cert.R == 53
    assert cert.summary() == "R=53 WITNESS-ONLY (witness n=52 valid)"
    cert = certify_pair([1, 1, 1], via_search=True)
    assert cert.status == CONFIRMED and cert.witness_n == 10


def test_inconclusive_certificate_keeps_witness():
    cert = certify_pair([1, 1, 1], via_search=True, options=SearchOptions(max_nodes=0, pin_first=False))
    assert cert.witness_valid
    assert cert.status == INCONCLUSIVE
    assert cert.summary().startswith("R=11 INCONCLUSIVE (witness n=10 valid")


@pytest.mark.parametrize("coeffs", [(1, 1), (2, 3), (3, 1), (3, 3), (1, 2, 2)])
def test_witness_by_direct_tuple_walk(coeffs):
    from rado.equation import iter_solutions

    col = extremal_coloring(coeffs)
    for sol in iter_solutions(coeffs, col.n):
        assert len({col[x] for x in sol.values()}) == 2, sol
