"""
majindex: exact major index statistics on standard Young tableaux.
"""

from .errors import (
    ContradictoryLimitError,
    EnumerationCapError,
    InvalidShapeError,
    MajIndexError,
    NonExactDivisionError,
    UnsupportedLawError,
    UnsupportedParameterError,
    ZeroVarianceError,
)
from .fakedeg import (
    fake_degree_positive,
    maj_gf,
    maj_gf_block_diagonal,
    maj_gf_hook_formula,
    support_classification,
    wreath_fake_degrees,
)
from .limits import (
    ReferenceLaw,
    check_hook_bounds,
    classify_limit,
    irwin_hall_star_cdf,
    ks_distance,
    local_limit_deviation,
    normal_cdf,
    normalized_cumulant_scaling,
    normalized_distribution,
    same_normalized_distribution,
)
from .moments import (
    bernoulli,
    cumulant_formula,
    cumulants_to_moments,
    mean_formula,
    moments_from_gf,
    normalized_cumulant,
)
from .qpoly import QPolynomial, coefficient_shape, exact_divide, q_factorial, q_multinomial, substitute_power
from .rotation import negative_rotations, phi, positive_rotations, rotation_fixed_points, verify_ranked_increment
from .scan import (
    sweep_formula_vs_oracle,
    sweep_parity_unimodality,
    sweep_unimodality_conjecture,
    sweep_zeros_theorem,
)
from .shapes import (
    BlockDiagonalShape,
    Partition,
    aft,
    b_stat,
    conjugate,
    corner_count,
    hook_lengths,
    parse_shape,
)
from .tableaux import (
    StandardTableau,
    brute_force_maj_gf,
    descent_data,
    enumerate_rsyt,
    enumerate_syt,
    verify_rsyt_hook_bound,
)

__version__ = "1.0.0"
__author__ = "Lavanya Garg"
__email__ = "lgarg_be23@thapar.edu"
__all__ = [
    'MajIndexError', 'InvalidShapeError', 'NonExactDivisionError', 'EnumerationCapError',
    'ZeroVarianceError', 'UnsupportedLawError', 'ContradictoryLimitError', 'UnsupportedParameterError',
    'Partition', 'BlockDiagonalShape', 'parse_shape', 'conjugate', 'hook_lengths', 'b_stat', 'aft',
    'corner_count',
    'QPolynomial', 'q_factorial', 'q_multinomial', 'exact_divide', 'substitute_power', 'coefficient_shape',
    'StandardTableau', 'enumerate_syt', 'descent_data', 'brute_force_maj_gf', 'enumerate_rsyt',
    'verify_rsyt_hook_bound',
    'maj_gf', 'maj_gf_hook_formula', 'support_classification', 'fake_degree_positive',
    'maj_gf_block_diagonal', 'wreath_fake_degrees',
    'positive_rotations', 'negative_rotations', 'phi', 'rotation_fixed_points', 'verify_ranked_increment',
    'bernoulli', 'cumulant_formula', 'mean_formula', 'cumulants_to_moments', 'moments_from_gf',
    'normalized_cumulant',
    'ReferenceLaw', 'classify_limit', 'irwin_hall_star_cdf', 'normal_cdf', 'normalized_distribution',
    'same_normalized_distribution', 'ks_distance', 'check_hook_bounds', 'normalized_cumulant_scaling',
    'local_limit_deviation',
    'sweep_zeros_theorem', 'sweep_unimodality_conjecture', 'sweep_parity_unimodality',
    'sweep_formula_vs_oracle',
]
