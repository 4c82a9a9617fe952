"""logcurve: exact computations with logarithmic derivation modules of
reduced plane projective curves.

Classify curves as free / plus-one generated / other, compute Chern data
and splitting types of the associated rank-2 bundle along lines, and verify
addition-deletion statements on deletion-restriction triples.
"""

from .kernels import BACKEND
from .poly import (
    BinaryForm,
    HomoPoly,
    LinearForm,
    PolyError,
    distinct_root_count,
    parse_poly,
    restrict_to_line,
)
from .logmod import (
    Classification,
    Derivation,
    Free,
    NonReducedError,
    Other,
    PlusOneGenerated,
    SyzygyModule,
    classify,
    mdr,
    minimal_generators,
    relation_degrees,
    saito_check,
    syzygy_space,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BinaryForm",
    "Classification",
    "Derivation",
    "Free",
    "HomoPoly",
    "LinearForm",
    "NonReducedError",
    "Other",
    "PlusOneGenerated",
    "PolyError",
    "SyzygyModule",
    "classify",
    "distinct_root_count",
    "mdr",
    "minimal_generators",
    "parse_poly",
    "relation_degrees",
    "restrict_to_line",
    "saito_check",
    "syzygy_space",
]
