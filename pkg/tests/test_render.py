import re

import pytest

from render.figure import spectrum_figure
from render.svg import SVGBuilder


def test_svg_text_is_escaped():
    svg = SVGBuilder(100, 50)
    svg.add_text(1, 2, 'a < b & "c"')
    out = svg.build()
    assert "a &lt; b &amp; &quot;c&quot;" in out
    assert out.startswith('<?xml version="1.0" encoding="UTF-8"?>\n<svg ')
    assert out.endswith("</svg>\n")


def test_coordinates_use_two_decimals():
    svg = SVGBuilder(10, 10)
    svg.add_circle(1 / 3, -0.001, 2, "#000")
    assert '<circle cx="0.33" cy="0.00" r="2.00" fill="#000" class="eigenvalue"></circle>' in svg.build()


def test_figure_has_one_marker_per_eigenvalue(spectrum_gamma2):
    values = [e.value for e in spectrum_gamma2]
    out = spectrum_figure(values, 0.05, 4, 1.0, 1.0, title="gamma = 2")
    assert out.count('class="eigenvalue"') == len(values)
    assert out.count("<polygon") == 2
    assert "gamma = 2" in out


def test_figure_is_deterministic():
    values = [-0.618 + 0j, -1 + 3j, -1 - 3j]
    assert spectrum_figure(values, 0.05, 4, 0.5, 2.0) == spectrum_figure(values, 0.05, 4, 0.5, 2.0)


def test_figure_of_empty_spectrum():
    out = spectrum_figure([], 0.05, 4, 1.0, 1.0)
    assert 'class="eigenvalue"' not in out
    assert out.count("<polygon") == 2


@pytest.mark.parametrize("eps, N", [(0.01, 1), (0.45, 8)])
def test_region_labels(eps, N):
    out = spectrum_figure([-2 + 1j], eps, N, 0.25, 3.0)
    assert f"Lambda_eps: eps={eps:g}, C_eps=0.25" in out
    assert f"R_N: N={N}, C_N=3" in out


def _polygon_points(svg: str, index: int) -> list[tuple[float, float]]:
    coords = re.findall(r'<polygon points="([^"]*)"', svg)[index]
    return [tuple(float(v) for v in pair.split(",")) for pair in coords.split()]


def test_vanishing_constants_still_shade_a_band():
    out = spectrum_figure([-0.618 + 0j, -2 + 0j], 0.05, 4, 1e-300, 1e-300)
    lam_eps_xs = [x for x, _ in _polygon_points(out, 0)]
    rn_ys = [y for _, y in _polygon_points(out, 1)]
    assert max(lam_eps_xs) - min(lam_eps_xs) >= 1.4
    assert max(rn_ys) - min(rn_ys) >= 2.9
