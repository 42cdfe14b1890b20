import pytest
from hypothesis import given, settings, strategies as st

from starkindex.starkgate import construct, random_record
from starkindex.unitlattice import DataInconsistency, detgroup_factorize, minus_kernel, prodform_check


def test_detgroup_examples():
    assert detgroup_factorize([3, -3]) == (3, 3)
    assert detgroup_factorize([1, 2, -1, -2]) == (5, 5)


def test_detgroup_rejects_symmetric_input():
    with pytest.raises(ValueError):
        detgroup_factorize([1, 2, 1, 2])


@given(st.integers(1, 4).flatmap(lambda m: st.lists(st.fractions(max_denominator=9).filter(lambda q: abs(q) < 40),
                                                    min_size=m, max_size=m)))
def test_detgroup_identity(half):
    lhs, rhs = detgroup_factorize(half + [-x for x in half])
    assert lhs == rhs


def test_minus_kernel():
    assert minus_kernel([[0, 1], [1, 0]]) == [[1, -1]]
    assert minus_kernel([[0, 1, 0], [1, 0, 0], [0, 0, 1]], expected_rank=1) == [[1, -1, 0]]
    with pytest.raises(DataInconsistency):
        minus_kernel([[1, 1], [0, 1]])
    with pytest.raises(DataInconsistency):
        minus_kernel([[0, 1], [1, 0]], expected_rank=2)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([1, 2, 3]), st.integers(0, 500), st.integers(2, 4))
def test_prodform_scales_with_the_index(m, seed, k):
    r = random_record(m, seed)
    c = construct(r).coords
    base = prodform_check(r.units, c, r.lvalues).ratio
    scaled = prodform_check(r.units, [k * x for x in c], r.lvalues).ratio
    assert abs(scaled - k ** m * base) < 1e-8 * k ** m
    flipped = prodform_check(r.units, [-x for x in c], r.lvalues).ratio
    assert abs(flipped - (-1) ** m * base) < 1e-8


def test_prodform_passes_on_the_constructed_unit():
    for m in (1, 2, 3):
        r = random_record(m, 7)
        res = prodform_check(r.units, construct(r).coords, r.lvalues)
        assert res.status == "PASS"
        assert abs(res.ratio - 1) < 1e-8
