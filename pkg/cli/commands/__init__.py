from .spectrum import spectrum_command          # noqa: F401
from .verify import verify_command              # noqa: F401
from .scan_symbols import scan_symbols_command  # noqa: F401
from .plot import plot_command                  # noqa: F401
