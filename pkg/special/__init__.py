from .hankel import (  # noqa: F401
    HankelValue,
    hankel_recurrence,
    hankel_closed_form,
    hankel_closed_form_derivative,
    boundary_residual,
)
