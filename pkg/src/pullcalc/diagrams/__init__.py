"""Diagram reconstruction and SVG rendering for pulls and tangles."""

from .geometry import HalfCircle, Segment, half_circle, piece_intersections
from .taffy import (
    TaffyDiagram,
    TaffyReport,
    build_taffy,
    render_taffy_svg,
    rotate_taffy,
    verify_taffy,
)
from .tangles import (
    Crossing,
    TangleDiagram,
    build_tangle,
    format_tangle,
    parse_tangle,
    render_tangle_svg,
    tangle_number,
)

__all__ = [
    "Crossing",
    "HalfCircle",
    "Segment",
    "TaffyDiagram",
    "TaffyReport",
    "TangleDiagram",
    "build_taffy",
    "build_tangle",
    "format_tangle",
    "half_circle",
    "parse_tangle",
    "piece_intersections",
    "render_taffy_svg",
    "render_tangle_svg",
    "rotate_taffy",
    "tangle_number",
    "verify_taffy",
]
