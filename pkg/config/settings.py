"""
config/settings.py
~~~~~~~~~~~~~~~~~~
Central place for all environment-variable configuration.
Import from here instead of calling os.getenv() scattered across the codebase.

Every value is only a default: CLI flags always win.
"""

import logging
import os

from dotenv import load_dotenv

load_dotenv()

# ── Numerics ──────────────────────────────────────────────────────────────────
PRECISION_BITS: int  = int(os.getenv("DISSPEC_PRECISION_BITS", "256"))
REAL_TOL: float      = float(os.getenv("DISSPEC_REAL_TOL", "1e-9"))
GAMMA_ONE_TOL: float = float(os.getenv("DISSPEC_GAMMA_ONE_TOL", "1e-14"))

# ── Execution ─────────────────────────────────────────────────────────────────
WORKERS: int    = int(os.getenv("DISSPEC_WORKERS", "1"))
PROBE_SEED: int = int(os.getenv("DISSPEC_PROBE_SEED", "20240607"))

# ── Release ───────────────────────────────────────────────────────────────────
TOOL_VERSION: str   = "1.0.0"
SCHEMA_VERSION: str = "1"

# ── Logging ───────────────────────────────────────────────────────────────────
LOG_LEVEL: str = os.getenv("DISSPEC_LOG_LEVEL", "INFO").upper()

logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.INFO),
    format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
)

logger = logging.getLogger("disspec")
logger.debug("Default working precision: %d bits", PRECISION_BITS)
