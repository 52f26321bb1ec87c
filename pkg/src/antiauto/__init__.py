"""Antiautomorphisms and biantiautomorphisms of finite abelian groups.

A map ``f`` on a finite abelian group is an antimorphism when
``x -> x - f(x)`` is injective, and an antiautomorphism when ``f`` itself
is also a bijection; a biantiautomorphism is a linear (homomorphic)
antiautomorphism.  The package constructs explicit witnesses, counts and
enumerates them exhaustively with a pruned bitmask search, and decides
existence with verified verdicts.
"""

from ._kernel import backend_name as kernel_backend
from .budget import DEFAULT_COUNT_BUDGET, DEFAULT_EXISTENCE_BUDGET, SearchBudget
from .classify import (
    EXISTS,
    NOT_EXISTS,
    UNKNOWN,
    ClassificationVerdict,
    VerificationReport,
    decide_antiautomorphism,
    decide_biantiautomorphism,
    run_check,
)
from .construct import (
    elementary2_antiauto,
    homogeneous2_antiauto,
    klein_antiauto,
    odd_cyclic_antiautos,
    z2_z4_antiauto,
    z2cubed_antiauto,
)
from .errors import AntiautoError
from .groups import (
    AbelianGroup,
    GroupIsomorphism,
    abelian_groups_of_order,
    abelian_groups_up_to_order,
    count_involutions,
    crt_decompose,
    group_sum,
    involutions,
    make_group,
    parse_element_spec,
    parse_group_spec,
)
from .linalg import (
    BinaryPolynomial,
    ResidueMatrix,
    companion_matrix,
    det_mod,
    enumerate_automorphisms,
    enumerate_endomorphisms,
    has_no_eigenvalue_one,
    irreducible_poly_z2,
    is_invertible,
    matrix_to_map,
    multiplication_map,
    residue_matrix,
)
from .maps import (
    TableMap,
    compose,
    conjugate_map,
    difference_map,
    direct_sum_map,
    identity_map,
    is_antiautomorphism,
    is_antimorphism,
    is_bijection,
    is_fixed_point_free,
    is_linear,
    map_from_callable,
    map_order,
    negation_map,
    translate_map,
)
from .search import (
    antiauto_lower_bound,
    antiauto_upper_bound_prime,
    biantiauto_count_formula,
    count_antiautomorphisms,
    count_biantiautomorphisms_bruteforce,
    count_valid_multipliers,
    enumerate_antiautomorphisms,
    euler_phi,
    exists_antiautomorphism_search,
    subfactorial,
    verify_no_prime_order_fpf_automorphism,
)

__version__ = "0.1.0"
