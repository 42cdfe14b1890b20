from fractions import Fraction

from starkindex.cohomology import (CyclicAction, check_hexagon, h1_ramification_predicate, herbrand_quotient,
                                   tate_h0, tate_h1, unit_herbrand_check)


def _regular(n):
    return [[int(j == (i + 1) % n) for j in range(n)] for i in range(n)]


def _trivial_groups(groups):
    return all(d == 1 for d in groups)


def test_trivial_action_on_z():
    for n in (2, 3, 5):
        Z = CyclicAction(n, [[1]])
        assert tate_h0(Z) == [n]
        assert _trivial_groups(tate_h1(Z))
        assert herbrand_quotient(Z) == n


def test_sign_action():
    Z = CyclicAction(2, [[-1]])
    assert _trivial_groups(tate_h0(Z))
    assert tate_h1(Z) == [2]
    assert herbrand_quotient(Z) == Fraction(1, 2)


def test_regular_module_is_cohomologically_trivial():
    for n in (2, 3, 4, 6):
        R = CyclicAction(n, _regular(n))
        assert _trivial_groups(tate_h0(R)) and _trivial_groups(tate_h1(R))
        assert herbrand_quotient(R) == 1


def test_finite_module_has_quotient_one():
    M = CyclicAction(3, _regular(3), [[3, 0, 0], [0, 3, 0], [0, 0, 3]])
    assert herbrand_quotient(M) == 1


def test_hexagon_for_multiplication_by_two():
    # 0 -> Z -(2)-> Z -> Z/2 -> 0 with trivial action of C_2
    Z = CyclicAction(2, [[1]])
    Z2 = CyclicAction(2, [[1]], [[2]])
    rep = check_hexagon(Z, Z, Z2, [[2]], [[1]])
    assert rep.exact_input
    assert rep.ok
    assert rep.alternating_product == 1
    assert rep.multiplicative


def test_action_must_have_the_right_order():
    try:
        CyclicAction(2, _regular(3))
    except ValueError:
        return
    raise AssertionError("order-3 action accepted for C_2")


def test_unit_herbrand_check():
    units = CyclicAction(2, [[1, 0], [0, -1]])
    q, target, ok = unit_herbrand_check(units, 1)
    assert (q, target, ok) == (1, 1, True)
    assert unit_herbrand_check(CyclicAction(2, [[1]]), 2) == (2, 2, True)
    assert unit_herbrand_check(CyclicAction(2, [[1]]), 3)[2] is False


def test_h1_ramification_predicate():
    assert h1_ramification_predicate(False, True, False)
    assert h1_ramification_predicate(True, False, False)
    assert not h1_ramification_predicate(True, True, False)
    assert h1_ramification_predicate(True, True, True)
