"""Exact enumeration of bands in finite-dimensional ordered vector spaces with polyhedral cones."""

from .bands import (
    Band,
    Subspace,
    all_bands,
    carrier,
    disjoint_complement,
    extension_carriers,
    is_band,
    is_band_via_bisaturation,
    is_directed,
    n_of,
    vectors_disjoint,
    zero_set,
)
from .cone import ConeSpec, LambdaSet, extreme_points, normalize, validate
from .satcore import (
    CapExceeded,
    IndexSet,
    SaturatedFamily,
    enumerate_bisaturated,
    enumerate_saturated,
    is_bisaturated,
    is_saturated,
    partner,
    saturate,
)

__version__ = "0.1.0"
