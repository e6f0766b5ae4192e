"""Degree landscape of the partition graph G_n."""

from .degree import DegreeBreakdown, degree, degree_breakdown, degree_subtractive
from .extremal import (
    ExtremalContext,
    beta,
    delta_increment_is_jump,
    max_degree,
    min_weight,
    rho,
    surplus_bounds_hold,
    triangular,
)
from .landscape import (
    ConsistencyError,
    DegreeHistogram,
    ExtremalOrbit,
    LandscapeRow,
    degree_histogram,
    extremal_orbits,
    landscape_row,
    landscape_rows,
    max_degree_set,
    max_degree_set_full,
    spectrum,
    upper_tail,
)
from .partitions import (
    DomainError,
    Partition,
    SupportProfile,
    conjugate,
    enumerate_partitions,
    is_self_conjugate,
    partition_count,
    support_profile,
)
from .strata import (
    PerturbationParams,
    SurplusData,
    decode_surplus,
    encode_surplus,
    enumerate_max_support_stratum,
    extremal_witness,
    mixed_perturbation,
    staircase,
    staircase_perturbations,
)
from .transfer import NeighborSet, VerificationReport, brute_degree, neighbors, verify_degree_formula

__version__ = "0.1.0"
