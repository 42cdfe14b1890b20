import random

from hypothesis import given, settings, strategies as st

from conftest import random_presentation
from starkindex.gmodule import (ModulePresentation, fitting_ideal, fitting_side_order, order_from_fitting,
                                psi_characters, psi_component_order)
from starkindex.grouping import ring_O


def test_gaussian_quotient():
    p = ModulePresentation.build("Z[i]", 1, [[(2, 1)]])
    assert p.cardinality() == p.order_bruteforce() == 5
    assert fitting_ideal(p).index() == 5
    assert order_from_fitting(p) == 5


def test_maximal_order_quotient_by_three():
    O = ring_O()
    three = O.int_coords(O.scale(3, O.one()))
    p = ModulePresentation.build(O, 1, [[three]])
    assert p.cardinality() == order_from_fitting(p) == 27


def test_psi_at_five_over_gaussian_integers():
    p = ModulePresentation.build("Z[i]", 1, [[(2, 1)]])
    orders = [psi_component_order(p, psi) for psi in psi_characters(4, 5)]
    assert sorted(orders) == [1, 1, 1, 5]
    assert all(psi_component_order(p, s) == fitting_side_order(p, s) for s in psi_characters(4, 5))


def test_psi_at_seven_over_zh():
    p = ModulePresentation.build("Z[H]", 1, [[(7, 0, 0)]])
    assert p.cardinality() == 343
    for psi in psi_characters(6, 7):
        assert psi_component_order(p, psi) == (7 if psi.is_odd() else 1)


def test_zero_module():
    p = ModulePresentation.zero(ring_O())
    assert p.cardinality() == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["Z", "Z[i]", "Z[w]", "O"]))
def test_direct_sum_is_multiplicative(seed, ring):
    rng = random.Random(seed)
    a = random_presentation(rng, ring, max_order=60, max_gens=1)
    b = random_presentation(rng, ring, max_order=60, max_gens=1)
    s = a.direct_sum(b)
    assert order_from_fitting(s) == order_from_fitting(a) * order_from_fitting(b)
    assert s.cardinality() == a.cardinality() * b.cardinality()


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_base_change_to_maximal_order(seed):
    rng = random.Random(seed)
    p = random_presentation(rng, "Z[H]", max_order=200, max_gens=1)
    q = p.base_change(ring_O())
    # R -> O has index 3, so only the 3-part of the order can move
    a, b = p.cardinality(), q.cardinality()
    while a % 3 == 0:
        a //= 3
    while b % 3 == 0:
        b //= 3
    assert a == b
