"""Numerical laboratory for Stokes flow in randomly perforated domains."""

from .geometry import Ball, ConfigurationError, DomainSpec
from .points import (
    MarkedRealization,
    MomentDivergenceError,
    RadiusLaw,
    count,
    dump_realization,
    empirical_moment,
    holes,
    load_realization,
    sample_realization,
    thin,
)
from .covering import (
    Covering,
    CoveringParams,
    EpsilonTooLarge,
    build_covering,
    classify_holes,
    dump_covering,
    partition_size_classes,
    select_dilations,
    size_class_of,
    verify_covering,
)

__all__ = [
    "Ball",
    "ConfigurationError",
    "Covering",
    "CoveringParams",
    "DomainSpec",
    "EpsilonTooLarge",
    "MarkedRealization",
    "MomentDivergenceError",
    "RadiusLaw",
    "build_covering",
    "classify_holes",
    "count",
    "dump_covering",
    "dump_realization",
    "empirical_moment",
    "holes",
    "load_realization",
    "partition_size_classes",
    "sample_realization",
    "select_dilations",
    "size_class_of",
    "thin",
    "verify_covering",
]
