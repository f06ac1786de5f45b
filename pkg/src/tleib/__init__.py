"""Exact classification of the filiform Leibniz classes TLeib_5 and TLeib_6."""

from .algebra import AlgebraTable, is_filiform, is_lie, leibniz_defect, lower_central_series, product
from .classify import (
    ClassificationResult,
    DegenerateStratum,
    OrbitLabel,
    canonical,
    classify,
    delta,
    invariants,
    isomorphic,
    realize,
    representative,
    subset,
)
from .families import (
    FLeibParams,
    SLeibParams,
    TLeib5Params,
    TLeib6Params,
    build_fleib,
    build_sleib,
    build_tleib5,
    build_tleib6,
)
from .scalar import DivisionByZero, Scalar, nth_root, parse_scalar
from .transform import (
    AdaptedTransform,
    SingularTransform,
    TemplateMismatch,
    random_adapted,
    transform_params_closed5,
    transform_params_closed6,
    transform_params_oracle,
)

__version__ = "0.1.0"
