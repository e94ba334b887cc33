"""Three-peg taffy diagrams: reconstruction, verification, SVG output.

``build_taffy`` lays out a single open strand around three collinear
pegs so that the strand crosses the left gap line ``left`` times and
the right gap line ``right`` times, where ``right/left`` is the target
number in lowest terms.  ``verify_taffy`` re-measures those counts
from the raw geometry and checks that the strand is one embedded arc
with both ends on pegs, so the builder never gets to grade its own
homework.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..rationals import ExtRational, neg_recip
from ..treewalk import LayerCounts
from .geometry import (
    HalfCircle,
    Segment,
    bounding_box,
    dist,
    half_circle,
    piece_intersections,
    piece_point_distance,
    reflect_piece_x,
    reverse_piece,
    rotate_piece_180,
)

PEG_RADIUS = 0.5


@dataclass(frozen=True)
class TaffyDiagram:
    pegs: tuple  # three (x, y) centers, west to east
    peg_radius: float
    strand: tuple  # drawable pieces in path order
    counts: LayerCounts


@dataclass(frozen=True)
class TaffyReport:
    expected: LayerCounts
    measured: LayerCounts
    single_arc: bool
    ends_on_pegs: bool
    embedded: bool

    @property
    def counts_match(self) -> bool:
        return self.expected == self.measured

    @property
    def passes(self) -> bool:
        return self.counts_match and self.single_arc and self.ends_on_pegs and self.embedded


def _seg(x1, y1, x2, y2) -> Segment:
    return Segment((float(x1), float(y1)), (float(x2), float(y2)))


def _assemble(units):
    """Flatten connection units into one ordered strand.

    Each unit is (pieces, end_a, end_b) where the ends are stub keys
    ("L", i) / ("R", j) or peg keys ("P", n).  Every stub key must be
    shared by exactly two units; the walk starts at the westmost peg
    end and must consume everything, otherwise the connection pattern
    does not describe a single arc and we refuse to guess.
    """
    by_end = {}
    for idx, (_, ea, eb) in enumerate(units):
        by_end.setdefault(ea, []).append(idx)
        by_end.setdefault(eb, []).append(idx)
    peg_keys = sorted(k for k in by_end if k[0] == "P")
    if len(peg_keys) != 2:
        raise RuntimeError("expected exactly two peg endpoints, found %r" % (peg_keys,))
    for key, owners in by_end.items():
        want = 1 if key[0] == "P" else 2
        if len(owners) != want:
            raise RuntimeError("connection point %r used %d times, not %d" % (key, len(owners), want))
    path = []
    used = [False] * len(units)
    key = peg_keys[0]
    idx = by_end[key][0]
    while True:
        if used[idx]:
            raise RuntimeError("walk revisited a unit; pattern is not a single arc")
        used[idx] = True
        pieces, ea, eb = units[idx]
        if ea == key:
            path.extend(pieces)
            key = eb
        else:
            path.extend(reverse_piece(p) for p in reversed(pieces))
            key = ea
        if key[0] == "P":
            break
        one, other = by_end[key]
        idx = other if one == idx else one
    if not all(used):
        raise RuntimeError("%d units left over; pattern is not a single arc" % (len(units) - sum(used)))
    return tuple(path)


def _build_core(l: int, r: int):
    """Strand pieces for a count pair with l >= r, gcd 1, measured as
    left = l crossings and right = r crossings.

    Left stub i sits at (gl, l+1-2i), right stub j at (gr, r+1-2j).
    The first r left stubs run straight through to the right stubs on
    elevated tracks, the surplus d = l - r is soaked up by w = d//2
    hairpins around the middle peg plus one arm onto it when d is odd.
    Every track is placed above (or below) the whole stub band it
    serves, so each vertical runs monotonically from its stub to its
    track and entries sliding along the stub heights always pass under
    the verticals already placed.
    """
    t = l + r
    big_d = 2 * t + 6
    gl, gr = t + 3, 3 * t + 9
    m = r
    d = l - r
    w = d // 2
    arm = d % 2

    def s(i):  # left stub heights, top to bottom
        return l + 1 - 2 * i

    def re(j):  # right stub heights
        return r + 1 - 2 * j

    base = max(l - 1 - 2 * m, 0)  # top of the hairpin stub band, floored at 0
    p0 = max(l, base + w + 1)  # through tracks start above everything else

    units = []

    # west rainbows around the left peg, plus its attachment when l is odd
    for i in range(1, l // 2 + 1):
        h = s(i)
        pieces = [
            _seg(gl, h, 0, h),
            half_circle((0.0, 0.0), float(h), "west", start_at_top=True),
            _seg(0, -h, gl, -h),
        ]
        units.append((pieces, ("L", i), ("L", l + 1 - i)))
    if l % 2:
        units.append(([_seg(gl, 0, PEG_RADIUS, 0)], ("L", (l + 1) // 2), ("P", 0)))

    # east rainbows around the right peg
    for j in range(1, r // 2 + 1):
        h = re(j)
        pieces = [
            _seg(gr, h, 2 * big_d, h),
            half_circle((2.0 * big_d, 0.0), float(h), "east", start_at_top=True),
            _seg(2 * big_d, -h, gr, -h),
        ]
        units.append((pieces, ("R", j), ("R", r + 1 - j)))
    if r % 2:
        units.append(
            ([_seg(gr, 0, 2 * big_d - PEG_RADIUS, 0)], ("R", (r + 1) // 2), ("P", 2))
        )

    # throughs: left stub i to right stub i over the top tracks
    for i in range(1, m + 1):
        hw, he = s(i), re(i)
        col, ecol = gl + i, gr - i
        track = p0 + (m - i) + 0.5
        pieces = [
            _seg(gl, hw, col, hw),
            _seg(col, hw, col, track),
            _seg(col, track, ecol, track),
            _seg(ecol, track, ecol, he),
            _seg(ecol, he, gr, he),
        ]
        units.append((pieces, ("L", i), ("R", i)))

    # hairpins around the middle peg for the surplus, outermost first
    for j in range(1, w + 1):
        top_i, bot_i = m + j, l + 1 - j
        hu, hw_ = s(top_i), s(bot_i)
        a, b = gl + top_i, gl + bot_i
        track = base + (w - j) + 1.5
        bot_track = hw_ - 0.5
        ecol = big_d + arm + (w - j + 1)
        pieces = [
            _seg(gl, hu, a, hu),
            _seg(a, hu, a, track),
            _seg(a, track, ecol, track),
            _seg(ecol, track, ecol, bot_track),
            _seg(ecol, bot_track, b, bot_track),
            _seg(b, bot_track, b, hw_),
            _seg(b, hw_, gl, hw_),
        ]
        units.append((pieces, ("L", top_i), ("L", bot_i)))

    # odd surplus: one arm lands on the middle peg
    if arm:
        i = m + w + 1
        if m == 0:
            pieces = [_seg(gl, 0, big_d - PEG_RADIUS, 0)]
        else:
            col = gl + i
            pieces = [
                _seg(gl, -m, col, -m),
                _seg(col, -m, col, 0),
                _seg(col, 0, big_d - PEG_RADIUS, 0),
            ]
        units.append((pieces, ("L", i), ("P", 1)))

    return _assemble(units)


def build_taffy(q: ExtRational) -> TaffyDiagram:
    """Reconstruct a taffy diagram whose measured value is q.

    Negative values are the 180-degree rotation of their negated
    reciprocal; a right-heavy pair is the mirror of the left-heavy
    core.  Either way the verifier re-measures the counts from
    scratch.
    """
    right, left = abs(q.num), q.den
    t = right + left
    big_d = 2 * t + 6
    pegs = ((0.0, 0.0), (float(big_d), 0.0), (2.0 * big_d, 0.0))
    counts = LayerCounts(right=right, left=left)
    if q.num < 0:
        base = build_taffy(neg_recip(q))
        mid = base.pegs[1]
        strand = tuple(rotate_piece_180(p, mid) for p in base.strand)
        return TaffyDiagram(base.pegs, base.peg_radius, strand, counts)
    if right > left:
        core = _build_core(right, left)
        strand = tuple(reflect_piece_x(p, float(big_d)) for p in core)
    else:
        strand = _build_core(left, right)
    return TaffyDiagram(pegs, PEG_RADIUS, strand, counts)


def rotate_taffy(d: TaffyDiagram) -> TaffyDiagram:
    """Half-turn about the middle peg; swaps the two layer counts."""
    mid = sorted(d.pegs)[1]
    strand = tuple(rotate_piece_180(p, mid) for p in d.strand)
    return TaffyDiagram(
        d.pegs, d.peg_radius, strand, LayerCounts(right=d.counts.left, left=d.counts.right)
    )


def _crossings(pieces, line_x: float, tol: float) -> int:
    """Count transversal crossings of the vertical line x = line_x.

    Walk the strand pushing the sign of (x - line_x) at every sample
    point (piece ends, plus the sideways extreme of each arc), drop
    the zeros, and count sign flips.  Points exactly on the line thus
    do not double-count.
    """
    signs = []

    def push(x):
        if x > line_x + tol:
            v = 1
        elif x < line_x - tol:
            v = -1
        else:
            return
        if not signs or signs[-1] != v:
            signs.append(v)

    for piece in pieces:
        push(piece.start[0])
        if isinstance(piece, HalfCircle):
            bulge = -piece.radius if piece.side == "west" else piece.radius
            push(piece.center[0] + bulge)
        push(piece.end[0])
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _clear_of_pegs(pieces, pegs, rho: float) -> bool:
    for piece in pieces:
        for peg in pegs:
            if piece_point_distance(piece, peg) < rho - 1e-6:
                return False
    return True


def _no_self_crossings(pieces, tol: float) -> bool:
    boxes = [bounding_box(p) for p in pieces]
    order = sorted(range(len(pieces)), key=lambda i: boxes[i][0])
    for oi, i in enumerate(order):
        xmax = boxes[i][2] + tol
        for j in order[oi + 1 :]:
            if boxes[j][0] > xmax:
                break
            if boxes[i][1] > boxes[j][3] + tol or boxes[j][1] > boxes[i][3] + tol:
                continue
            a, b = (i, j) if i < j else (j, i)
            pts, overlap = piece_intersections(pieces[a], pieces[b], tol)
            if overlap:
                return False
            if not pts:
                continue
            if b == a + 1:
                shared = pieces[a].end
                if all(dist(p, shared) <= 1e-6 for p in pts):
                    continue
            return False
    return True


def verify_taffy(diagram: TaffyDiagram, tol: float = 1e-9) -> TaffyReport:
    """Re-measure a diagram and compare against its claimed counts."""
    pieces = diagram.strand
    pegs = sorted(diagram.pegs)
    gl = (pegs[0][0] + pegs[1][0]) / 2.0
    gr = (pegs[1][0] + pegs[2][0]) / 2.0

    chained = bool(pieces) and all(
        dist(a.end, b.start) <= tol for a, b in zip(pieces, pieces[1:])
    )
    is_open = bool(pieces) and dist(pieces[0].start, pieces[-1].end) > tol
    single_arc = chained and is_open

    measured = LayerCounts(
        right=_crossings(pieces, gr, tol), left=_crossings(pieces, gl, tol)
    )

    ends_on_pegs = False
    if pieces:
        ends_on_pegs = all(
            any(abs(dist(e, peg) - diagram.peg_radius) <= 1e-6 for peg in pegs)
            for e in (pieces[0].start, pieces[-1].end)
        )

    embedded = _clear_of_pegs(pieces, pegs, diagram.peg_radius) and _no_self_crossings(
        pieces, tol
    )

    return TaffyReport(
        expected=diagram.counts,
        measured=measured,
        single_arc=single_arc,
        ends_on_pegs=ends_on_pegs,
        embedded=embedded,
    )


def _fmt(v: float) -> str:
    s = "%.2f" % v
    s = s.rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_taffy_svg(
    diagram: TaffyDiagram,
    strand_gap: float = 6.0,
    stroke_width: float = 2.0,
    scale: float = 1.0,
) -> str:
    """Draw a verified diagram as a standalone SVG document.

    strand_gap is the pixel size of one model unit (the spacing
    between neighbouring strand layers).  Refuses diagrams that do not
    pass verification.
    """
    report = verify_taffy(diagram)
    if not report.passes:
        raise ValueError(
            "diagram fails verification: counts %s vs %s, single_arc=%s, "
            "ends_on_pegs=%s, embedded=%s"
            % (
                report.expected,
                report.measured,
                report.single_arc,
                report.ends_on_pegs,
                report.embedded,
            )
        )

    unit = strand_gap * scale
    pegs = sorted(diagram.pegs)
    boxes = [bounding_box(p) for p in diagram.strand]
    xmin = min(min(b[0] for b in boxes), pegs[0][0] - diagram.peg_radius)
    xmax = max(max(b[2] for b in boxes), pegs[2][0] + diagram.peg_radius)
    ymin = min(min(b[1] for b in boxes), -diagram.peg_radius)
    ymax = max(max(b[3] for b in boxes), diagram.peg_radius)
    pad = max(2.0 * stroke_width, unit)

    def x_of(x):
        return (x - xmin) * unit + pad

    def y_of(y):
        return (ymax - y) * unit + pad

    width = (xmax - xmin) * unit + 2 * pad
    height = (ymax - ymin) * unit + 2 * pad

    gl = (pegs[0][0] + pegs[1][0]) / 2.0
    gr = (pegs[1][0] + pegs[2][0]) / 2.0

    parts = []
    parts.append(
        '<svg xmlns="http://www.w3.org/2000/svg" width="%s" height="%s" '
        'viewBox="0 0 %s %s">' % (_fmt(width), _fmt(height), _fmt(width), _fmt(height))
    )
    parts.append(
        "<title>taffy pull: left %d, right %d</title>"
        % (diagram.counts.left, diagram.counts.right)
    )
    for line_x, cls, count in (
        (gl, "gap gap-left", diagram.counts.left),
        (gr, "gap gap-right", diagram.counts.right),
    ):
        parts.append(
            '<line class="%s" x1="%s" y1="0" x2="%s" y2="%s" stroke="#999" '
            'stroke-width="1" stroke-dasharray="4 4" data-layers="%d"/>'
            % (cls, _fmt(x_of(line_x)), _fmt(x_of(line_x)), _fmt(height), count)
        )

    d_parts = ["M %s %s" % (_fmt(x_of(diagram.strand[0].start[0])), _fmt(y_of(diagram.strand[0].start[1])))]
    for piece in diagram.strand:
        ex, ey = x_of(piece.end[0]), y_of(piece.end[1])
        if isinstance(piece, Segment):
            d_parts.append("L %s %s" % (_fmt(ex), _fmt(ey)))
        else:
            r = piece.radius * unit
            sx, sy = x_of(piece.start[0]), y_of(piece.start[1])
            bulge = -piece.radius if piece.side == "west" else piece.radius
            mx, my = x_of(piece.center[0] + bulge), y_of(piece.center[1])
            cross = (mx - sx) * (ey - sy) - (my - sy) * (ex - sx)
            sweep = 1 if cross > 0 else 0
            d_parts.append("A %s %s 0 0 %d %s %s" % (_fmt(r), _fmt(r), sweep, _fmt(ex), _fmt(ey)))
    parts.append(
        '<path class="strand" d="%s" fill="none" stroke="#b03030" '
        'stroke-width="%s" stroke-linecap="round" stroke-linejoin="round"/>'
        % (" ".join(d_parts), _fmt(stroke_width))
    )

    for px, py in pegs:
        parts.append(
            '<circle class="peg" cx="%s" cy="%s" r="%s" fill="#333"/>'
            % (_fmt(x_of(px)), _fmt(y_of(py)), _fmt(diagram.peg_radius * unit))
        )
    parts.append("</svg>")
    return "\n".join(parts)
