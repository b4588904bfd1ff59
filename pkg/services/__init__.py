from .checks import CheckResult, Report, Status  # noqa: F401
from .spectrum import (  # noqa: F401
    ModeFamily,
    BoundaryPolynomial,
    Eigenvalue,
    SpectrumOptions,
    boundary_polynomial,
    rn_roots,
    rn_derivative_roots,
    family_eigenvalues,
    eigenvalues_ball,
    is_gamma_one,
    lambda1_closed_form,
    lambda1_near_one,
    n1_root_closed_form,
    real_eigenvalue_bound,
    case_bound,
    complex_root_certificate,
    log_derivative_residual,
    find_coincidences,
)
from .appendix import verify_appendix  # noqa: F401
from .regions import (  # noqa: F401
    Contour,
    LambdaEps,
    RN,
    M,
    MDelta,
    RegionSpec,
    ContourPoint,
    in_region,
    in_union,
    lambda_to_z,
    z_to_lambda,
    sample_contour,
    contour_image,
    delta_for_eps,
    fit_constants,
    fitted_regions,
    verify_regions,
)
from .symbols import (  # noqa: F401
    Symbol,
    SymbolSample,
    ScanGrid,
    ScanMinimum,
    eval_rho,
    eval_c,
    eval_d,
    sample_symbols,
    glancing_r0,
    scan_grid,
    scan_min_modulus,
    verify_symbols,
)
