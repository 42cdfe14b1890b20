"""Group rings of cyclic groups, their minus parts and the orders inside them."""
from .cyclotomic import CyclotomicValue, cyclotomic_poly
from .grouprings import (
    Character,
    GroupRingElement,
    GroupSpec,
    minus_idempotent,
    odd_characters,
    odd_classes,
    rational_idempotents,
    to_product_form,
    trivial_units,
)
from .orders import (
    MinusIdeal,
    Order,
    canonical_representative,
    find_generator,
    kappa,
    maximal_order,
    minus_ring,
    norm_form,
    principal_generator,
    ring_by_name,
    ring_O,
    ring_Z,
    ring_ZH,
    ring_ZI,
    ring_ZW,
)
