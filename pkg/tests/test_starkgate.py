import pytest
from hypothesis import given, settings, strategies as st

from starkindex.grouping import ring_ZH
from starkindex.linalg import matmul
from starkindex.starkgate import (CandidateUnit, abelian_condition, b_unit_relation, check_p1, componentwise_2zh,
                                  construct, e_lower_bound, fixed_generator, guaranteed_level, in_2zh,
                                  norm_h_matrix, p1_target, random_record, squareness)


@pytest.fixture(scope="module", params=[1, 2, 3])
def record(request):
    return random_record(request.param, 3)


def test_p1_accepts_the_construction_and_rejects_a_multiple(record):
    c = construct(record)
    index, target, ok = check_p1(record, c)
    assert ok and index == target == p1_target(record)
    doubled = CandidateUnit(tuple(2 * x for x in c.coords), c.sign)
    index2, _, ok2 = check_p1(record, doubled)
    assert not ok2 and index2 == 2 ** record.m * index


def test_construction_is_deterministic(record):
    assert construct(record) == construct(record)


def test_gamma_image_also_passes_p1():
    # gamma permutes generators of the same lattice, so P1 cannot see the change
    for m in (1, 2, 3):
        r = random_record(m, 9)
        c = construct(r)
        moved = r.units.act(c.coords)
        assert check_p1(r, CandidateUnit(tuple(moved), c.sign))[2]


def test_quartic_candidates_differ_by_a_trivial_unit():
    r = random_record(2, 5)
    c = construct(r)
    res = b_unit_relation(r, c, r.units.act(c.coords))
    assert res.is_trivial and res.is_b_unit and res.det_pm_one
    same = b_unit_relation(r, c, c)
    assert same.is_trivial


def test_two_is_not_a_unit():
    r = random_record(2, 5)
    c = construct(r)
    res = b_unit_relation(r, c, [2 * x for x in c.coords])
    assert not res.is_trivial
    assert not res.det_pm_one


@settings(max_examples=200)
@given(st.lists(st.integers(-20, 20), min_size=3, max_size=3))
def test_componentwise_membership_matches_direct(v):
    x = ring_ZH().reduce(v)
    assert componentwise_2zh(x) == in_2zh(x)


def test_e_lower_bound():
    assert e_lower_bound(2, 1) == 0
    assert e_lower_bound(3, 1) == 0
    assert e_lower_bound(4, 1) == 1
    assert e_lower_bound(2, 2) == 0
    assert e_lower_bound(3, 2) == 2


def test_guaranteed_level_is_nonnegative():
    assert all(guaranteed_level(m, d) >= 0 for m in (1, 2, 3) for d in range(2, 6))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([1, 2, 3]), st.integers(0, 10**4))
def test_squareness_matches_the_candidate(m, seed):
    r = random_record(m, seed)
    v = squareness(r, candidate=construct(r))
    assert v.consistent
    assert v.is_square == (v.max_level >= 1)


def test_abelian_condition_on_synthetic_data():
    for m in (1, 2):
        for seed in range(5):
            r = random_record(m, seed)
            assert abelian_condition(r, construct(r)).status == "PASS"


def test_sextic_norm_lands_in_the_fixed_part():
    r = random_record(3, 2)
    A = r.units.gamma_action
    A2 = matmul(A, A)
    f = fixed_generator(r)
    assert [sum(f[i] * A2[i][j] for i in range(3)) for j in range(3)] == list(f)
    for row in norm_h_matrix(A):
        assert [sum(row[i] * A2[i][j] for i in range(3)) for j in range(3)] == row


def test_random_record_is_seeded():
    assert random_record(2, 1) == random_record(2, 1)
