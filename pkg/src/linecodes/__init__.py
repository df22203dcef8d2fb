"""Additive quaternary codes as multisets of lines in binary projective spaces."""
from .code import (
    AdditiveLineCode,
    CodeParameters,
    HyperplaneProfile,
    brute_force_min_weight,
    code_parameters,
    concatenated_binary_generator,
    griesmer_holds,
    griesmer_max_n,
    hyperplane_loads,
    hyperplane_profile,
    lambda_k,
    quaternary_generator_matrix,
    s_k,
    sum_code,
    weight_distribution,
)
from .codefile import load_code, save_code
from .constructions import (
    PartialSpread,
    all_lines_code,
    complete_mapping,
    cover_multiplicity,
    is_m_cover,
    partial_spread_outside_fano,
    spread_code,
    three_cover_code,
    variant_code,
)
from .errors import LineCodeError
from .exact_cover import exact_cover_partial_spread
from .geometry import (
    FanoPlane,
    Line,
    enumerate_lines,
    enumerate_points,
    fano_subplane,
    hyperplanes_containing_line,
    line_count,
    line_in_hyperplane,
    line_through,
)
from .verify import VerificationReport, cross_check_oracle, sum_construction_check, verify_construction

__version__ = "0.1.0"
