"""Rational tangle diagrams built twist by twist.

A twist word uses the same four codes as a turn word, spelled V/H
instead of R/L: V twists the two right-hand ends around each other, H
the two bottom ends, and lowercase (or a negative exponent) undoes the
twist.  The fraction of the resulting tangle is computed through the
continued-fraction bridge, which gives a second, independent route to
the same number the turn fold produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .. import words
from ..rationals import ExtRational, cf_eval
from ..treewalk import word_to_cf

TWIST_CODES = {"V": 0, "H": 1}
TWIST_LETTERS = ("V", "H")


def parse_tangle(text: str):
    """Twist word from text; same grammar as turn words."""
    return words.tokenize(text, TWIST_CODES)


def format_tangle(word, style: str = "plain") -> str:
    return words.format_word(word, style=style, letters=TWIST_LETTERS)


def tangle_number(twists) -> ExtRational:
    """The fraction of the tangle, via its continued fraction."""
    return cf_eval(word_to_cf(tuple(twists)))


class Crossing(NamedTuple):
    position: str  # "right-side" or "bottom-side"
    sign: int  # +1 for V/H, -1 for their inverses


@dataclass(frozen=True)
class TangleDiagram:
    crossings: tuple

    @property
    def width(self) -> float:
        """Box width in tile units; every right-side twist adds one."""
        return 1.0 + sum(1 for c in self.crossings if c.position == "right-side")

    @property
    def height(self) -> float:
        return 1.0 + sum(1 for c in self.crossings if c.position == "bottom-side")

    @property
    def endpoints(self) -> dict:
        w, h = self.width, self.height
        return {"NW": (0.0, 0.0), "NE": (w, 0.0), "SW": (0.0, h), "SE": (w, h)}


def build_tangle(twists) -> TangleDiagram:
    crossings = []
    for t in twists:
        if t not in (0, 1, 2, 3):
            raise ValueError("bad twist code %r" % (t,))
        position = "right-side" if (t & 1) == 0 else "bottom-side"
        crossings.append(Crossing(position, -1 if t & 2 else 1))
    return TangleDiagram(tuple(crossings))


def _twist_codes(diagram: TangleDiagram):
    codes = []
    for c in diagram.crossings:
        base = 0 if c.position == "right-side" else 1
        codes.append(base if c.sign > 0 else base | 2)
    return tuple(codes)


# --- rendering ----------------------------------------------------------------

_HANDLE = 0.6  # Bezier control offset, as a fraction of the tile size


def _lerp(a, b, t):
    return (a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t)


def _split(bez, t):
    p0, p1, p2, p3 = bez
    a = _lerp(p0, p1, t)
    b = _lerp(p1, p2, t)
    c = _lerp(p2, p3, t)
    d = _lerp(a, b, t)
    e = _lerp(b, c, t)
    f = _lerp(d, e, t)
    return (p0, a, d, f), (f, e, c, p3)


def _mid_speed(bez) -> float:
    p0, p1, p2, p3 = bez
    dx = 0.75 * (p1[0] - p0[0]) + 1.5 * (p2[0] - p1[0]) + 0.75 * (p3[0] - p2[0])
    dy = 0.75 * (p1[1] - p0[1]) + 1.5 * (p2[1] - p1[1]) + 0.75 * (p3[1] - p2[1])
    return (dx * dx + dy * dy) ** 0.5


def _fmt(v: float) -> str:
    s = "%.2f" % v
    s = s.rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_tangle_svg(
    diagram: TangleDiagram,
    tile: float = 60.0,
    stroke_width: float = 2.0,
    gap: float = None,
    scale: float = 1.0,
) -> str:
    """Standalone SVG for a tangle diagram.

    Each crossing lives in its own tile (a new column on the right or
    a new row along the bottom) as two cubic curves; the under strand
    is split around the midpoint so the over strand reads clearly.
    """
    s = tile * scale
    if gap is None:
        gap = 2.0 * stroke_width
    stroke = 'fill="none" stroke="#203050" stroke-width="%s" stroke-linecap="round"' % _fmt(
        stroke_width
    )
    pad = 2.0 * stroke_width + 2.0

    def pt(p):
        return "%s %s" % (_fmt(p[0] + pad), _fmt(p[1] + pad))

    def curve_path(bez, cls):
        p0, p1, p2, p3 = bez
        return '<path class="%s" d="M %s C %s, %s, %s" %s/>' % (
            cls,
            pt(p0),
            pt(p1),
            pt(p2),
            pt(p3),
            stroke,
        )

    w = h = s
    body = [
        '<path class="strand" d="M %s L %s" %s/>' % (pt((0.0, 0.0)), pt((s, 0.0)), stroke),
        '<path class="strand" d="M %s L %s" %s/>' % (pt((0.0, s)), pt((s, s)), stroke),
    ]

    for crossing in diagram.crossings:
        if crossing.position == "right-side":
            x0, x1 = w, w + s
            hx = _HANDLE * s
            keep = ((x0, 0.0), (x0 + hx, 0.0), (x1 - hx, h), (x1, h))
            from_se = ((x0, h), (x0 + hx, h), (x1 - hx, 0.0), (x1, 0.0))
            w = x1
        else:
            y0, y1 = h, h + s
            hy = _HANDLE * s
            keep = ((0.0, y0), (0.0, y0 + hy), (w, y1 - hy), (w, y1))
            from_se = ((w, y0), (w, y0 + hy), (0.0, y1 - hy), (0.0, y1))
            h = y1
        over, under = (from_se, keep) if crossing.sign > 0 else (keep, from_se)
        eps = (gap / 2.0) / max(_mid_speed(under), 1e-9)
        eps = min(0.3, max(0.02, eps))
        first, _ = _split(under, 0.5 - eps)
        _, second = _split(under, 0.5 + eps)
        sign_cls = "positive" if crossing.sign > 0 else "negative"
        body.append(
            '<g class="crossing %s %s" data-sign="%d">' % (sign_cls, crossing.position, crossing.sign)
        )
        body.append(curve_path(first, "under"))
        body.append(curve_path(second, "under"))
        body.append(curve_path(over, "over"))
        body.append("</g>")

    for label, (ex, ey) in sorted(diagram.endpoints.items()):
        body.append(
            '<circle class="end" data-corner="%s" cx="%s" cy="%s" r="%s" fill="#203050"/>'
            % (label, _fmt(ex * s + pad), _fmt(ey * s + pad), _fmt(stroke_width * 1.5))
        )

    width = w + 2.0 * pad
    height = h + 2.0 * pad
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" width="%s" height="%s" viewBox="0 0 %s %s">'
        % (_fmt(width), _fmt(height), _fmt(width), _fmt(height))
    )
    number = tangle_number(_twist_codes(diagram))
    title = "<title>rational tangle %s</title>" % (number,)
    return "\n".join([head, title] + body + ["</svg>"])
