"""Barcode invariants for real-valued functions on finite simplicial complexes.

The library computes, over a prime field GF(p):

* sub/superlevel filtrations of a complex and their homology,
* the four barcode invariant maps (delta, gamma, mu, lambda) whose supports
  are the bars of the function,
* the chain complex assembled from those bars, with its threshold filtration
  and Hodge-type dimension bookkeeping,
* an independent column-reduction persistence oracle used to cross-validate
  the invariants.
"""

from .gfp import ContainmentError, FieldSpec, Mat, Subspace
from .complexes import (
    FilteredComplex,
    HomologyBasis,
    Level,
    ParseError,
    Subcomplex,
    boundary_matrix,
    homology_basis,
    induced_map,
    level_subcomplex,
    parse_filtered_complex,
    relative_homology_dim,
)
from .invariants import (
    Bar,
    BarList,
    BarcodeSupport,
    CriticalSet,
    VSDim,
    barcode_support,
    box_f,
    box_t,
    classify_bars,
    critical_values,
    delta,
    f_space,
    gamma,
    image_in_total,
    lambda_,
    mu,
    t_space,
)
from .barcomplex import (
    BarcodeComplex,
    FilteredBarcodeComplex,
    HodgeReport,
    build_barcode_complex,
    filtered_subcomplex,
    hodge_report,
    morse_dims_check,
    verify_level_decomposition,
    verify_sublevel_decomposition,
)
from .oracle import PersistencePairs, crosscheck, standard_reduction
from .reporting import Report

__all__ = [
    "Bar",
    "BarList",
    "BarcodeComplex",
    "BarcodeSupport",
    "ContainmentError",
    "CriticalSet",
    "FieldSpec",
    "FilteredBarcodeComplex",
    "FilteredComplex",
    "HodgeReport",
    "HomologyBasis",
    "Level",
    "Mat",
    "ParseError",
    "PersistencePairs",
    "Report",
    "Subcomplex",
    "Subspace",
    "VSDim",
    "barcode_support",
    "boundary_matrix",
    "box_f",
    "box_t",
    "build_barcode_complex",
    "classify_bars",
    "critical_values",
    "crosscheck",
    "delta",
    "f_space",
    "filtered_subcomplex",
    "gamma",
    "hodge_report",
    "homology_basis",
    "image_in_total",
    "induced_map",
    "lambda_",
    "level_subcomplex",
    "morse_dims_check",
    "mu",
    "parse_filtered_complex",
    "relative_homology_dim",
    "standard_reduction",
    "t_space",
    "verify_level_decomposition",
    "verify_sublevel_decomposition",
]
