"""
utils/errors.py
~~~~~~~~~~~~~~~
Exception hierarchy shared by every package.

Library code raises these; only the CLI layer turns them into exit codes.
"""

from __future__ import annotations


class DisspecError(Exception):
    """Base class for all toolkit errors."""


class ConvergenceFailure(DisspecError):
    """A root did not reach the acceptance tolerance after refinement.

    Signals the caller to raise the working precision and retry.
    """

    def __init__(
        self,
        index: int,
        residual: float | None = None,
        n: int | None = None,
        family: str | None = None,
    ) -> None:
        self.index    = index
        self.residual = residual
        self.n        = n
        self.family   = family
        super().__init__(self._describe())

    def _describe(self) -> str:
        where = f"root #{self.index}"
        if self.n is not None:
            where += f" of (n={self.n}, family={self.family})"
        if self.residual is not None:
            where += f", residual {self.residual:.3e}"
        return f"Root refinement did not converge: {where}"

    def located(self, n: int, family: str) -> "ConvergenceFailure":
        """Same failure, tagged with the boundary polynomial it came from."""
        return ConvergenceFailure(self.index, self.residual, n=n, family=family)


class ZeroArgument(DisspecError, ValueError):
    """Hankel functions are singular at z = 0."""


class InvalidMode(DisspecError, ValueError):
    """Mode index outside the spherical expansion (n ≥ 1)."""


class GammaIsOne(DisspecError, ValueError):
    """Closed forms in γ₀ − 1 are undefined at γ = 1."""


class InvalidGamma(DisspecError, ValueError):
    """γ outside the range an operation is stated for."""


class BranchViolation(DisspecError, ValueError):
    """A value left the quadrant on which the square-root branch is fixed."""


class InvalidParameter(DisspecError, ValueError):
    """A numeric parameter is outside its documented range."""


class EmptyInput(DisspecError, ValueError):
    """An operation that needs at least one item received none."""


class SchemaMismatch(DisspecError, ValueError):
    """A stored document does not match the current schema."""
