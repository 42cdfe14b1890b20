from .bruteforce import count_quotient, enumerate_quotient, psi_order_bruteforce
from .presentation import ActionModule, ModulePresentation, fitting_ideal, order_from_fitting
from .psi import (PsiCharacter, fitting_side_order, idempotent_mod, idempotent_mod_p,
                  psi_characters, psi_component_order)

__all__ = [
    "ActionModule", "ModulePresentation", "PsiCharacter", "count_quotient",
    "enumerate_quotient", "fitting_ideal", "fitting_side_order", "idempotent_mod",
    "idempotent_mod_p", "order_from_fitting", "psi_characters", "psi_component_order",
    "psi_order_bruteforce",
]
