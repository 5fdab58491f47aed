"""Static SVG 1.1 pictures of the regions R_N.

One <circle> per boundary disk and one tick (a <line>) per breakpoint n/N.
Coordinates are the only decimals anywhere in the package; they are printed
with 12 significant digits.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable
from xml.sax.saxutils import quoteattr

__all__ = ["render_svg"]

WIDTH = 1000.0
MARGIN = 20.0


def _num(x) -> str:
    return format(float(x), ".12g")


def render_svg(
    N: int,
    disks: Iterable[tuple[int, int]],
    breakpoints: Iterable[int],
    title: str | None = None,
) -> str:
    """Disks given by provenance (a, b), breakpoints by their numerators n."""
    disks = sorted(disks, key=lambda ab: Fraction(*ab))
    breakpoints = sorted(breakpoints)
    lo = Fraction(min(breakpoints), N)
    hi = Fraction(max(breakpoints), N)
    span = hi - lo
    scale = WIDTH / span
    rmax = max((Fraction(1, b) for _, b in disks), default=span / 10)
    tick = max(rmax * scale / 10, 4)
    height = 2 * MARGIN + float(rmax * scale) + tick
    base = MARGIN + float(rmax * scale)

    def X(v: Fraction) -> str:
        return _num(MARGIN + (v - lo) * scale)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(WIDTH + 2 * MARGIN)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(WIDTH + 2 * MARGIN)} {_num(height)}">',
        f"<title>{title or f'R_{N}'}</title>",
        f'<path class="axis" d="M {_num(MARGIN)} {_num(base)} H {_num(MARGIN + WIDTH)}" '
        'stroke="black" stroke-width="0.5"/>',
        '<g class="disks" fill="steelblue" fill-opacity="0.25" stroke="navy" stroke-width="0.5">',
    ]
    for a, b in disks:
        out.append(
            f'<circle class="disk" data-a="{a}" data-b="{b}" cx="{X(Fraction(a, b))}" '
            f'cy="{_num(base)}" r="{_num(Fraction(1, b) * scale)}"/>'
        )
    out.append("</g>")
    out.append('<g class="breakpoints" stroke="crimson" stroke-width="1">')
    for n in breakpoints:
        x = X(Fraction(n, N))
        out.append(
            f'<line class="breakpoint" data-n="{n}" x1="{x}" y1="{_num(base - tick)}" '
            f'x2="{x}" y2="{_num(base + tick)}"/>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
