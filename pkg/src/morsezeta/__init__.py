"""Exact Morse-Novikov invariants of circle-valued Morse flows.

From an integer monodromy matrix on H_1 of a level surface this package
computes the dynamical Lefschetz zeta function, the flow-line generating
functions D_ij(t), the Novikov torsion and, for knot complements, the
Alexander polynomial as tau * zeta * (1 - t).  All arithmetic is exact.
"""

from .catalog import KnotRecord, builtins, load, pretzel_555, resolve, save, trefoil, twist_knot
from .invariants import (
    alexander_recover,
    census,
    flow_entry,
    flow_matrix,
    torsion,
    verify_identity,
    zeta,
)
from .monodromy import (
    HomologyClass,
    MonodromyMatrix,
    SurfaceKind,
    intersection_pairing,
    lefschetz_number,
    matrix_power,
    trace_power,
    validate,
)
from .polyalg import IntPolynomial, RationalFunction, TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "IntPolynomial",
    "RationalFunction",
    "TruncatedSeries",
    "MonodromyMatrix",
    "SurfaceKind",
    "HomologyClass",
    "validate",
    "matrix_power",
    "trace_power",
    "lefschetz_number",
    "intersection_pairing",
    "zeta",
    "flow_entry",
    "flow_matrix",
    "torsion",
    "census",
    "alexander_recover",
    "verify_identity",
    "KnotRecord",
    "trefoil",
    "twist_knot",
    "pretzel_555",
    "builtins",
    "load",
    "save",
    "resolve",
]
