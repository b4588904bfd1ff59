"""
render/figure.py
~~~~~~~~~~~~~~~~
The region picture: Λ_ε and R_N shaded in the left half-plane with the
computed eigenvalues on top.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from render.svg import SVGBuilder

WIDTH       = 640
HEIGHT      = 480
MARGIN      = 50
SAMPLES     = 200
MIN_BAND_PX = 1.5  # thinnest half-width a shaded region is drawn with

LAMBDA_EPS_FILL = "#4c72b0"
RN_FILL         = "#dd8452"
MARKER_FILL     = "#c44e52"


@dataclass(frozen=True)
class Window:
    x_lo: float
    x_hi: float
    y_lo: float
    y_hi: float

    @classmethod
    def around(cls, values: list[complex]) -> "Window":
        reach_x = max([1.0] + [1.1 * abs(v.real) for v in values])
        reach_y = max([1.0] + [1.1 * abs(v.imag) for v in values])
        return cls(-reach_x, 0.1 * reach_x, -reach_y, reach_y)

    def to_px(self, x: float, y: float) -> tuple[float, float]:
        px = MARGIN + (x - self.x_lo) / (self.x_hi - self.x_lo) * (WIDTH - 2 * MARGIN)
        py = HEIGHT - MARGIN - (y - self.y_lo) / (self.y_hi - self.y_lo) * (HEIGHT - 2 * MARGIN)
        return px, py

    def px_width(self, pixels: float) -> float:
        return pixels * (self.x_hi - self.x_lo) / (WIDTH - 2 * MARGIN)

    def px_height(self, pixels: float) -> float:
        return pixels * (self.y_hi - self.y_lo) / (HEIGHT - 2 * MARGIN)


def _lambda_eps_outline(win: Window, eps: float, c_eps: float) -> list[tuple[float, float]]:
    ys = np.linspace(win.y_lo, win.y_hi, SAMPLES)
    xs = np.maximum(-c_eps * (np.abs(ys) ** (0.5 + eps) + 1), win.x_lo)
    xs = np.minimum(xs, -win.px_width(MIN_BAND_PX))
    curve = [(float(x), float(y)) for x, y in zip(xs, ys)]
    return curve + [(0.0, win.y_hi), (0.0, win.y_lo)]


def _rn_outline(win: Window, order: int, c_n: float) -> list[tuple[float, float]]:
    xs = np.linspace(win.x_lo, 0.0, SAMPLES)
    ys = np.minimum(c_n * (np.abs(xs) + 1) ** (-order), win.y_hi)
    ys = np.maximum(ys, win.px_height(MIN_BAND_PX))
    upper = [(float(x), float(y)) for x, y in zip(xs, ys)]
    lower = [(x, -y) for x, y in reversed(upper)]
    return upper + lower


def spectrum_figure(values: Iterable[complex], eps: float, N: int, c_eps: float, c_n: float,
                    title: str = "") -> str:
    """Deterministic SVG of Λ_ε ∪ R_N with eigenvalue markers."""
    points = [complex(v) for v in values]
    win = Window.around(points)
    svg = SVGBuilder(WIDTH, HEIGHT)
    svg.add_rect(0, 0, WIDTH, HEIGHT, fill="#ffffff")
    if title:
        svg.add_title(title)

    svg.add_polygon((win.to_px(x, y) for x, y in _lambda_eps_outline(win, eps, c_eps)),
                    fill=LAMBDA_EPS_FILL, stroke=LAMBDA_EPS_FILL,
                    label=f"Lambda_eps: eps={eps:g}, C_eps={c_eps:.6g}")
    svg.add_polygon((win.to_px(x, y) for x, y in _rn_outline(win, N, c_n)),
                    fill=RN_FILL, stroke=RN_FILL, label=f"R_N: N={N}, C_N={c_n:.6g}")

    x0, y0 = win.to_px(win.x_lo, 0.0)
    x1, _ = win.to_px(win.x_hi, 0.0)
    svg.add_line(x0, y0, x1, y0)
    ax, ay0 = win.to_px(0.0, win.y_lo)
    _, ay1 = win.to_px(0.0, win.y_hi)
    svg.add_line(ax, ay0, ax, ay1)
    svg.add_text(x1, y0 - 6, "Re λ", anchor="end")
    svg.add_text(ax + 6, ay1 + 12, "Im λ")
    svg.add_text(x0, y0 + 16, f"{win.x_lo:.3g}", anchor="middle", font_size=10)
    svg.add_text(ax - 6, ay1 + 4, f"{win.y_hi:.3g}", anchor="end", font_size=10)
    svg.add_text(ax - 6, ay0 + 4, f"{win.y_lo:.3g}", anchor="end", font_size=10)

    for v in points:
        cx, cy = win.to_px(v.real, v.imag)
        svg.add_circle(cx, cy, 3, MARKER_FILL, tooltip=f"{v.real:.6g}{v.imag:+.6g}i")
    return svg.build()
