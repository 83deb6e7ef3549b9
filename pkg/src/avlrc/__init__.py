"""Locally recoverable codes from subfield-subcodes of J-affine variety codes."""

from .ambient import GridSpec, build_delta, cyclotomic_orbit, find_representative, is_closed, sigma_L
from .analysis import analyze, reproduce_table
from .codes import LinearCode, dual, puncture, shorten
from .evalcode import (AffineVarietyCode, affine_variety_code, build_evaluation_code, build_subfield_subcode,
                       dual_delta, enumerate_points, subfield_subcode_oracle)
from .galois import GF, FieldTower, field, make_tower
from .locality import (locality_pair, make_orbit, recover_extended, recover_mds_orbit, recover_vandermonde,
                       rt_exact, simulate_recovery, singleton_defects)
from .metrics import DistanceResult, dual_distance, generalized_hamming_weight, is_mds, min_distance

__all__ = [
    "GF", "FieldTower", "field", "make_tower",
    "GridSpec", "build_delta", "cyclotomic_orbit", "find_representative", "is_closed", "sigma_L",
    "LinearCode", "dual", "puncture", "shorten",
    "AffineVarietyCode", "affine_variety_code", "build_evaluation_code", "build_subfield_subcode",
    "dual_delta", "enumerate_points", "subfield_subcode_oracle",
    "DistanceResult", "dual_distance", "generalized_hamming_weight", "is_mds", "min_distance",
    "locality_pair", "make_orbit", "recover_extended", "recover_mds_orbit", "recover_vandermonde",
    "rt_exact", "simulate_recovery", "singleton_defects",
    "analyze", "reproduce_table",
]
