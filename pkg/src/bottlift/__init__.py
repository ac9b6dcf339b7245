"""bottlift: exact Bott-map calculus and lifting obstructions for genera.

The package splits into the sparse graded polynomial engine (`rings`), the
symmetric-function layer with its independent oracle (`symmetric`), the
classifying-space presentations and pushforward coefficients (`spaces`), the
rank tables and divisibility verdicts (`obstruction`), a FastAPI compute
service (`service`), and a thin CLI client (`cli`).
"""

from .obstruction import (
    Coordinate,
    GradedCoefficients,
    ObstructionRecord,
    ObstructionReport,
    UnsupportedSystemError,
    builtin_coefficients,
    coordinate_obstruction,
    e2_entry,
    format_group,
    parse_coefficients_text,
    parse_coordinate_text,
    partition_count,
    pi0_factors,
    restriction_index,
)
from .rings import (
    GradedPolynomial,
    Monomial,
    RingMismatchError,
    RingSpec,
    format_polynomial,
    monomial_basis,
    parse_polynomial,
    poincare_rank,
    poincare_ranks,
)
from .spaces import (
    GeneratorMap,
    SpacePresentation,
    bott_pushforward,
    bsu_restriction_coefficient,
    bu6_generator_image,
    bu_restriction_coefficient_4,
    indecomposable_part,
    pair_with_chern,
    space_model,
)
from .symmetric import (
    BU_HOMOLOGY_RING,
    SIGMA_RING,
    TensorPolynomial,
    brute_force_newton,
    coproduct,
    newton_polynomial,
    power_sum_s,
)

__version__ = "0.1.0"
