from hypothesis import given, strategies as st

from starkindex.grouping import (CyclotomicValue, GroupRingElement, GroupSpec, MinusIdeal, find_generator, kappa,
                                 minus_idempotent, norm_form, odd_characters, rational_idempotents, ring_O,
                                 ring_ZH, to_product_form, trivial_units)
from starkindex.grouping.orders import o_units

G = {n: GroupSpec(n) for n in (2, 4, 6)}


def elem(g, coeffs):
    return GroupRingElement.from_powers(g, dict(enumerate(coeffs)))


def test_minus_idempotent():
    for g in G.values():
        e = minus_idempotent(g)
        assert e * e == e
        assert e.is_minus()
        tau = GroupRingElement.gamma(g, g.m)
        assert tau * e == -e


def test_odd_characters():
    assert [c.j for c in odd_characters(G[6])] == [1, 3, 5]
    assert all(c.is_odd() for c in odd_characters(G[4]))


def test_rational_idempotents_split_the_minus_part():
    for g in G.values():
        ids = rational_idempotents(g)
        total = GroupRingElement.zero(g)
        for e in ids.values():
            assert e * e == e
            total = total + e
        assert total == minus_idempotent(g)


def test_product_form_examples():
    g = G[4]
    x = (GroupRingElement.scalar(g, 3) + GroupRingElement.gamma(g) * 2) * minus_idempotent(g)
    assert to_product_form(x) == [CyclotomicValue.rational(4, 3) + CyclotomicValue.root(4) * 2]
    y = GroupRingElement.gamma(G[6]) * minus_idempotent(G[6])
    assert to_product_form(y) == [CyclotomicValue.rational(2, -1), CyclotomicValue.root(6)]


coeffs = st.lists(st.integers(-5, 5), min_size=6, max_size=6)


@given(coeffs, coeffs)
def test_product_form_is_a_ring_map(a, b):
    g = G[6]
    e = minus_idempotent(g)
    x, y = elem(g, a) * e, elem(g, b) * e
    fx, fy, fxy = to_product_form(x), to_product_form(y), to_product_form(x * y)
    assert fxy == [u * v for u, v in zip(fx, fy)]
    assert to_product_form(x + y) == [u + v for u, v in zip(fx, fy)]


def test_trivial_units():
    g = G[6]
    assert len(trivial_units(g)) == 12
    one = GroupRingElement.scalar(g, 1)
    assert all(u ** g.two_m == one for u in trivial_units(g))


def test_norm_form_on_units_and_scalars():
    O = ring_O()
    assert {norm_form(u) for u in o_units()} == {1}
    assert norm_form(O.scale(2, O.one())) == 8


def test_kappa_small():
    ZH = ring_ZH()
    assert norm_form(ZH.from_group(kappa(0, 0))) == 1
    assert norm_form(ZH.from_group(kappa(1, 0))) == 2
    assert norm_form(ZH.from_group(kappa(0, 1))) == 4


def _ideal(gens):
    return MinusIdeal.generated_by(ring_ZH(), [tuple(v) for v in gens])


def _check_generator(A, expect_principal):
    ZH = ring_ZH()
    g, principal = find_generator(A)
    gp = ZH.from_group(g)
    assert principal is expect_principal
    assert A.contains(gp)
    assert MinusIdeal.generated_by(ZH, [gp]).index() == (1 if principal else 3) * A.index()


def test_find_generator_examples():
    _check_generator(_ideal([[2, 0, 0]]), True)
    assert find_generator(_ideal([[2, 0, 0]]))[0] == GroupRingElement.scalar(G[6], 2)
    _check_generator(_ideal([[1, -1, 0], [2, 0, 0]]), True)
    _check_generator(_ideal([[3, 0, 0], [1, -1, 0]]), False)
