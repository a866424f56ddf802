"""Exact distributions of parity-restricted descents over symmetric groups.

Four statistics refine the descent count by the parity of one of the two
entries of a descent; their distributions R_n, P_n, Q_n, M_n are produced by
insertion-operator recursions, closed formulas and brute-force enumeration,
and the package checks that all three agree.
"""

from .perms import (InvalidInput, Perm, ResourceLimit, all_perms, as_perm, complement,
                    insert_at, parse_perm, red, remove_max, reverse, rotate_to_front)
from .stats import (DescentKind, Family, Parity, first_parity_flag, parity_descent_count,
                    parity_descent_set)
from .patterns import (ParityPattern, avoids_consecutive, count_consecutive_matches,
                       is_parity_k_tau_avoiding_classical, parity_k_pattern, parse_pattern)
from .poly import BivariatePolynomial, OperatorId, apply_operator, eval_z, family_poly
from .closed_form import CoefficientQuery, closed_form_poly, coeff
from .genocchi import AvoidanceClass, avoidance_count, dumont_count, genocchi_sequence
from .bijections import (MatchingTable, alpha, beta, bij_p_complement, bij_r_split,
                         bij_r_symmetry)
from .verify import VerificationReport, brute_distribution, run_identity_suite

__version__ = "0.1.0"
