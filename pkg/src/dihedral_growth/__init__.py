"""Exact product-set growth in the infinite dihedral group."""

from .asymptotics import (
    ExponentEstimate,
    alpha,
    beta,
    binary_entropy,
    diagonal_lower_bound,
    diagonal_upper_bound,
    estimate_growth_exponent,
    growth_constant,
    leading_coefficient,
    reflection_probability,
)
from .counting import (
    GrowthQuery,
    SeriesTable,
    count_N,
    count_R,
    gamma,
    gamma_max,
    gamma_one_reflection,
    optimal_p_table,
    series_N_bivariate,
    series_N_univariate,
)
from .dihedral import DihedralElement, Profile, evaluate_word, multiply, profile, reconstruct
from .generic import GeneratorTuple, build_generator_tuple, is_generic, sparse_coefficients
from .oracle import (
    CapacityError,
    MultiplicityVector,
    construct_witness_word,
    enumerate_multiplicity_image,
    enumerate_product_set,
    random_set_audit,
    satisfies_membership_criterion,
)

__version__ = "0.1.0"
