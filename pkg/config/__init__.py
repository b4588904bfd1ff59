from .settings import (  # noqa: F401
    PRECISION_BITS,
    REAL_TOL,
    GAMMA_ONE_TOL,
    WORKERS,
    PROBE_SEED,
    TOOL_VERSION,
    SCHEMA_VERSION,
    LOG_LEVEL,
    logger,
)
