"""Exact arithmetic for coherent systems on smooth curves.

Computes Brill-Noether numbers, extension counts, candidate stability
walls, and complete nonemptiness/dimension verdicts for numerical types
(n, d, k) with 0 < d ≤ 2n, plus arithmetic certificates for the
constructive existence results.  All arithmetic is exact: integers and
``fractions.Fraction``, never floats.
"""

from .core import (
    CSType,
    CurveClass,
    DomainError,
    ExceptionalTag,
    OpenInterval,
    Rat,
    Shape,
    Smoothness,
    TagKind,
    Verdict,
    format_rat,
    mk_cstype,
    parse_rat,
)
from .dims import (
    ExtCounts,
    NegativeExtDimension,
    beta,
    beta_additivity_residual,
    c12,
    c12_three_term,
    c21,
    ext1_dim,
    ext_counts,
)
from .walls import (
    WallSet,
    active_backend,
    admissible_range,
    admissible_sup,
    alpha_slope,
    candidate_walls,
    chamber_index,
    slope,
)
from .classify import (
    bound_kmax,
    bound_with_hom,
    classify,
    classify_rank1,
    exceptional_types,
    min_degree,
    nonss_window,
)
from .witness import (
    Certificate,
    Check,
    certificate_hyp1,
    certificate_hyp2,
    certificate_hyp3,
    certificate_hyp4,
    dual_span_type,
    example_d_gt_2n,
    hyperelliptic_a,
)

__version__ = "0.1.0"

__all__ = [
    "CSType",
    "Certificate",
    "Check",
    "CurveClass",
    "DomainError",
    "ExceptionalTag",
    "ExtCounts",
    "NegativeExtDimension",
    "OpenInterval",
    "Rat",
    "Shape",
    "Smoothness",
    "TagKind",
    "Verdict",
    "WallSet",
    "active_backend",
    "admissible_range",
    "admissible_sup",
    "alpha_slope",
    "beta",
    "beta_additivity_residual",
    "bound_kmax",
    "bound_with_hom",
    "c12",
    "c12_three_term",
    "c21",
    "candidate_walls",
    "certificate_hyp1",
    "certificate_hyp2",
    "certificate_hyp3",
    "certificate_hyp4",
    "chamber_index",
    "classify",
    "classify_rank1",
    "dual_span_type",
    "example_d_gt_2n",
    "exceptional_types",
    "ext1_dim",
    "ext_counts",
    "format_rat",
    "hyperelliptic_a",
    "min_degree",
    "mk_cstype",
    "nonss_window",
    "parse_rat",
    "slope",
    "__version__",
]
