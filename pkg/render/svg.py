"""
render/svg.py
~~~~~~~~~~~~~
Minimal SVG 1.1 writer. Elements are kept in insertion order and every
coordinate is printed with two decimals, so equal input gives equal bytes.
"""

from __future__ import annotations

from html import escape
from typing import Iterable


def _num(x: float) -> str:
    text = f"{x:.2f}"
    return "0.00" if text == "-0.00" else text


class SVGBuilder:
    """Collects SVG elements and renders the document."""

    def __init__(self, width: int, height: int) -> None:
        self.width = width
        self.height = height
        self.elements: list[str] = []

    def add_title(self, text: str, x: float | None = None, y: float = 20) -> None:
        self.add_text(self.width / 2 if x is None else x, y, text, anchor="middle", font_size=14)

    def add_rect(self, x: float, y: float, width: float, height: float,
                 fill: str = "none", stroke: str = "none") -> None:
        self.elements.append(
            f'<rect x="{_num(x)}" y="{_num(y)}" width="{_num(width)}" height="{_num(height)}" '
            f'fill="{fill}" stroke="{stroke}"/>'
        )

    def add_text(self, x: float, y: float, text: str, anchor: str = "start", font_size: int = 11) -> None:
        self.elements.append(
            f'<text x="{_num(x)}" y="{_num(y)}" text-anchor="{anchor}" font-size="{font_size}" '
            f'font-family="sans-serif">{self._escape(text)}</text>'
        )

    def add_line(self, x1: float, y1: float, x2: float, y2: float,
                 stroke: str = "#000", stroke_width: float = 1) -> None:
        self.elements.append(
            f'<line x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}" '
            f'stroke="{stroke}" stroke-width="{_num(stroke_width)}"/>'
        )

    def add_polygon(self, points: Iterable[tuple[float, float]], fill: str, stroke: str,
                    opacity: float = 0.35, label: str | None = None) -> None:
        coords = " ".join(f"{_num(x)},{_num(y)}" for x, y in points)
        title = f"<title>{self._escape(label)}</title>" if label else ""
        self.elements.append(
            f'<polygon points="{coords}" fill="{fill}" fill-opacity="{_num(opacity)}" '
            f'stroke="{stroke}" stroke-width="1">{title}</polygon>'
        )

    def add_circle(self, cx: float, cy: float, r: float, fill: str, tooltip: str | None = None) -> None:
        title = f"<title>{self._escape(tooltip)}</title>" if tooltip else ""
        self.elements.append(
            f'<circle cx="{_num(cx)}" cy="{_num(cy)}" r="{_num(r)}" fill="{fill}" '
            f'class="eigenvalue">{title}</circle>'
        )

    def _escape(self, text: str) -> str:
        return escape(text, quote=True)

    def build(self) -> str:
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{self.width}" height="{self.height}" viewBox="0 0 {self.width} {self.height}">\n'
        )
        body = "".join(f"  {e}\n" for e in self.elements)
        return head + body + "</svg>\n"
