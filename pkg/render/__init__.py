from .svg import SVGBuilder  # noqa: F401
from .figure import spectrum_figure  # noqa: F401
