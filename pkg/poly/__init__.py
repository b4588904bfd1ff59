from .exactpoly import (  # noqa: F401
    RnPolynomial,
    Evaluation,
    rn_coefficients,
    derivative,
    default_precision,
    evaluate,
)
from .rootfind import CertifiedRoot, RootOptions, find_all_roots  # noqa: F401
from .hull import convex_hull_2d, distance_to_hull, point_in_hull  # noqa: F401
