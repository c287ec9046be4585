"""Exact analysis of linear codes over finite fields: diameters, dual
distances, antiGriesmer-type bounds and the greedy functional partition."""

from .bounds import (
    BoundReport,
    ParamTuple,
    anti_griesmer_rhs,
    diameter_lower_bound,
    dimension_lower_bound,
    griesmer_lhs,
    length_upper_bound,
    verify_all,
    weighted_length_bound,
)
from .codes import CodeMetrics, InfeasibleEnumeration, LinearCode, dual_code, metrics, puncture, residual
from .constructions import extended_grs, from_spec, grs, identity_pair, simplex, to_spec
from .gf import FieldElement, FieldSpec, make_field
from .matrix import MatrixGF, null_space, rank, rref
from .partition import PartitionTrace, greedy_partition, verify_trace

__version__ = "0.1.0"

__all__ = [
    "anti_griesmer_rhs",
    "BoundReport",
    "CodeMetrics",
    "diameter_lower_bound",
    "dimension_lower_bound",
    "dual_code",
    "extended_grs",
    "FieldElement",
    "FieldSpec",
    "from_spec",
    "greedy_partition",
    "griesmer_lhs",
    "grs",
    "identity_pair",
    "InfeasibleEnumeration",
    "length_upper_bound",
    "LinearCode",
    "make_field",
    "MatrixGF",
    "metrics",
    "null_space",
    "ParamTuple",
    "PartitionTrace",
    "puncture",
    "rank",
    "residual",
    "rref",
    "simplex",
    "to_spec",
    "verify_all",
    "verify_trace",
    "weighted_length_bound",
]
