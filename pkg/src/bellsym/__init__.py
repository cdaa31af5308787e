"""Exact-arithmetic computations with higher-order Bell symmetric functions."""

from .bell import (
    BellTable,
    bell_convolution,
    bell_monomial_recursion,
    bell_number,
    bell_plethystic_recursion,
    bell_powersum_recursion,
    bell_table,
    bell_tower,
    beta_recursion,
    egf_bell_numbers,
    h_function,
    h_function_monomial,
    rho_recursion,
)
from .errors import BudgetExceededError, CrossCheckError
from .partitions import (
    Partition,
    divide,
    format_partition,
    multiset_splits,
    parse_partition,
    part_multinomial,
    partitions_of,
    union,
    z_of,
)
from .plethysm import PlethysmContext, omega, omega0, pleth, psi, z_shift
from .restriction import (
    RestrictionReport,
    TauberianReport,
    build_report,
    general_restriction_coeff,
    littlewood_coeffs,
    restriction_coeffs,
    restriction_poly,
    schur_residue,
    tauberian_check,
)
from .species import (
    HyperPartition,
    PermutationAction,
    enumerate_hyperpartitions,
    fixed_points,
    fixed_points_of_type,
    frobenius_oracle,
    orbit_count,
)
from .symfunc import (
    CharacterTable,
    SymFunc,
    ZTrunc,
    char_value,
    character_table,
    convert,
    extract_basis,
    hall_inner,
    inverse_kostka,
    kostka_matrix,
    kostka_number,
    to_powersum,
)
from .unipoly import UniPoly
from .vectorpartitions import (
    IntVector,
    VectorPartition,
    enumerate_vector_partitions,
    f_poly,
    rho_direct,
)

__version__ = "0.1.0"
