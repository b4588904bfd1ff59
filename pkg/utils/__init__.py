from .errors import (  # noqa: F401
    DisspecError,
    ConvergenceFailure,
    ZeroArgument,
    InvalidMode,
    GammaIsOne,
    InvalidGamma,
    BranchViolation,
    InvalidParameter,
    EmptyInput,
    SchemaMismatch,
)
from .numbers import ComplexHP, ComplexLike, as_complex, precision_of, to_mpc, to_mpf  # noqa: F401
