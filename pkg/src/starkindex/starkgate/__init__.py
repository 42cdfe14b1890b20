"""Index formulae: verifiers, explicit solutions for m <= 3, squareness."""
from .checks import (AbelianReport, BUnitResult, P2Row, SubFieldReport, abelian_condition, b_unit_relation,
                     check_p1, check_p2, componentwise_2zh, fixed_generator, gamma_minus_one_even, in_2zh, norm_h_matrix,
                     p1_target, p2_table, quotient_module, sub_field_check)
from .construct import (act_by, class_fitting_generator, construct, construct_quadratic, construct_quartic,
                        construct_sextic, kappa_power, lattice_ideal, minus_generator, ring_action, sextic_parts)
from .record import CandidateUnit, ExtensionRecord, consistency_issues, e_lower_bound, v2, validate
from .squareness import IFF_FALSE, IFF_TRUE, NECESSARY_ONLY, SquarenessVerdict, guaranteed_level, squareness
from .synthetic import random_class_module, random_record
from .verify import class_number_formula, exit_status, verify_record

__all__ = [name for name in dir() if not name.startswith("_")]
