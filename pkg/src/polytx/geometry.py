"""Polygon ingestion, validation, slab decomposition and the exact cell grid.

Every coordinate in this package is an integer.  On ingestion each input
coordinate is multiplied by ``SCALE`` (= 2), so all internal geometry lives on
even integers and the midpoint of any grid cell is again an integer.  All
visibility predicates are evaluated exactly, at those integer cell
representatives; no floating point enters the kernel.  ``as_input()``
accessors convert back to the user's units at the serialization boundary.

The region model is a slab decomposition: an x-monotone orthogonal polygon is
a left-to-right sequence of axis-aligned rectangles ("slabs"), one per run
between consecutive vertical-edge abscissae, each carrying a single vertical
cross-section interval.  ``CellGrid`` refines the slabs with any extra exact
cut lines a caller needs and classifies every cell as entirely inside or
entirely outside the closed polygon.
"""

from __future__ import annotations

import json
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidPolygonError

SCALE = 2
COORD_LIMIT = 10**6

Point = tuple[int, int]
Span = tuple[int, int]


def _shoelace2(ring: Sequence[Point]) -> int:
    """Twice the signed area of the ring (positive for counter-clockwise)."""
    total = 0
    for (x1, y1), (x2, y2) in zip(ring, ring[1:] + [ring[0]]):
        total += x1 * y2 - x2 * y1
    return total


@dataclass(frozen=True)
class SlabProfile:
    """Step-function form of an x-monotone orthogonal polygon.

    ``xs`` are the strictly increasing breakpoints (all vertical-edge
    abscissae, including the left and right boundary edges); slab ``i``
    occupies ``[xs[i], xs[i+1]]`` horizontally and ``spans[i]`` vertically.
    Adjacent spans overlap as closed intervals (the region is connected) and
    differ (slabs are maximal).
    """

    xs: tuple[int, ...]
    spans: tuple[Span, ...]

    def __post_init__(self) -> None:
        if len(self.xs) != len(self.spans) + 1 or not self.spans:
            raise ValueError("profile needs n+1 breakpoints for n >= 1 slabs")
        if any(a >= b for a, b in zip(self.xs, self.xs[1:])):
            raise ValueError("breakpoints must increase strictly")
        for lo, hi in self.spans:
            if lo >= hi:
                raise ValueError("slab span must have positive height")
        for (a, b), (c, d) in zip(self.spans, self.spans[1:]):
            if max(a, c) > min(b, d):
                raise ValueError("adjacent slab spans must intersect")
            if (a, b) == (c, d):
                raise ValueError("adjacent slab spans must differ")

    @property
    def x_min(self) -> int:
        return self.xs[0]

    @property
    def x_max(self) -> int:
        return self.xs[-1]

    @property
    def y_min(self) -> int:
        return min(lo for lo, _ in self.spans)

    @property
    def y_max(self) -> int:
        return max(hi for _, hi in self.spans)

    @property
    def area(self) -> int:
        return sum(
            (x2 - x1) * (hi - lo)
            for x1, x2, (lo, hi) in zip(self.xs, self.xs[1:], self.spans)
        )

    @cached_property
    def vertical_edges(self) -> tuple[tuple[int, int, int], ...]:
        """All vertical boundary edges as (x, y_lo, y_hi), by x then lower y."""
        edges = [(self.xs[0], *self.spans[0])]
        for i in range(1, len(self.spans)):
            (pb, pt), (cb, ct) = self.spans[i - 1], self.spans[i]
            x = self.xs[i]
            if pb != cb:
                edges.append((x, min(pb, cb), max(pb, cb)))
            if pt != ct:
                edges.append((x, min(pt, ct), max(pt, ct)))
        edges.append((self.xs[-1], *self.spans[-1]))
        return tuple(sorted(edges))

    @property
    def m(self) -> int:
        return len(self.vertical_edges)

    @cached_property
    def edge_ordinates(self) -> tuple[int, ...]:
        """Sorted distinct y-coordinates of horizontal boundary edges."""
        return tuple(sorted({v for span in self.spans for v in span}))

    def slab_index(self, x: int) -> int:
        """Index of the slab whose open x-interval contains x (x not a breakpoint)."""
        i = bisect_right(self.xs, x) - 1
        if not (0 <= i < len(self.spans)) or x == self.xs[i]:
            raise ValueError(f"x={x} is not interior to any slab")
        return i

    def cross_section(self, x: int) -> Span | None:
        """Closed vertical cross-section at x, or None left/right of the polygon.

        At a breakpoint the section is the union of the two adjacent slab
        spans (one closed interval, since adjacent spans overlap).
        """
        if x < self.xs[0] or x > self.xs[-1]:
            return None
        i = bisect_left(self.xs, x)
        if i < len(self.xs) and self.xs[i] == x:
            if i == 0:
                return self.spans[0]
            if i == len(self.spans):
                return self.spans[-1]
            (a, b), (c, d) = self.spans[i - 1], self.spans[i]
            return (min(a, c), max(b, d))
        return self.spans[i - 1]

    def contains_point(self, x: int, y: int) -> bool:
        section = self.cross_section(x)
        return section is not None and section[0] <= y <= section[1]

    def runs_at(self, y: int) -> tuple[Span, ...]:
        """Maximal x-intervals the horizontal line at y crosses inside the polygon."""
        runs: list[Span] = []
        start = None
        for i, (lo, hi) in enumerate(self.spans):
            if lo <= y <= hi:
                if start is None:
                    start = self.xs[i]
            elif start is not None:
                runs.append((start, self.xs[i]))
                start = None
        if start is not None:
            runs.append((start, self.xs[-1]))
        return tuple(runs)

    def run_containing(self, y: int, x: int) -> Span | None:
        """The maximal run at ordinate y whose closed x-interval contains x."""
        for lo, hi in self.runs_at(y):
            if lo <= x <= hi:
                return (lo, hi)
        return None

    def run_covering(self, y: int, x_lo: int, x_hi: int) -> Span | None:
        """The maximal run at ordinate y containing the whole interval [x_lo, x_hi]."""
        for lo, hi in self.runs_at(y):
            if lo <= x_lo and x_hi <= hi:
                return (lo, hi)
        return None

    def to_ring(self) -> list[Point]:
        """Canonical counter-clockwise vertex ring (no collinear vertices)."""
        return profile_to_ring(self.xs, self.spans)

    def as_input(self) -> tuple[tuple[int, ...], tuple[Span, ...]]:
        """(xs, spans) converted back to input units."""
        return (
            tuple(x // SCALE for x in self.xs),
            tuple((lo // SCALE, hi // SCALE) for lo, hi in self.spans),
        )


def profile_to_ring(xs: Sequence[int], spans: Sequence[Span]) -> list[Point]:
    """Counter-clockwise ring of the slab union, in the same units as xs/spans."""
    bottom: list[Point] = [(xs[0], spans[0][0])]
    for i in range(1, len(spans)):
        if spans[i][0] != spans[i - 1][0]:
            bottom.append((xs[i], spans[i - 1][0]))
            bottom.append((xs[i], spans[i][0]))
    bottom.append((xs[-1], spans[-1][0]))
    top: list[Point] = [(xs[-1], spans[-1][1])]
    for i in range(len(spans) - 1, 0, -1):
        if spans[i][1] != spans[i - 1][1]:
            top.append((xs[i], spans[i][1]))
            top.append((xs[i], spans[i - 1][1]))
    top.append((xs[0], spans[0][1]))
    return bottom + top


class OrthoPolygon:
    """A validated simple x-monotone orthogonal polygon.

    ``vertices`` is the collinear-merged counter-clockwise ring in internal
    (doubled) coordinates; ``profile`` is its slab decomposition.  Construct
    via :func:`validate` or :func:`parse_polygon`, never directly.
    """

    __slots__ = ("vertices", "profile")

    def __init__(self, vertices: tuple[Point, ...], profile: SlabProfile):
        self.vertices = vertices
        self.profile = profile

    @property
    def m(self) -> int:
        """Number of vertical boundary edges."""
        return self.profile.m

    @property
    def input_vertices(self) -> tuple[Point, ...]:
        return tuple((x // SCALE, y // SCALE) for x, y in self.vertices)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        xs, spans = self.profile.as_input()
        return f"OrthoPolygon({len(self.vertices)} vertices, xs={list(xs)}, spans={list(spans)})"


def _merge_collinear(ring: list[Point]) -> list[Point]:
    """Drop vertices interior to straight runs; reject boundary spikes."""
    n = len(ring)
    axes = []
    for i in range(n):
        (x1, y1), (x2, y2) = ring[i], ring[(i + 1) % n]
        axes.append("h" if y1 == y2 else "v")
    merged: list[Point] = []
    for i in range(n):
        prev_axis, next_axis = axes[i - 1], axes[i]
        if prev_axis != next_axis:
            merged.append(ring[i])
            continue
        # Same axis on both sides: straight run or spike.
        a, v, b = ring[i - 1], ring[i], ring[(i + 1) % n]
        d1 = (v[0] - a[0], v[1] - a[1])
        d2 = (b[0] - v[0], b[1] - v[1])
        if d1[0] * d2[0] + d1[1] * d2[1] < 0:
            raise InvalidPolygonError(
                "self-intersecting", f"boundary reverses onto itself at vertex {i}", i
            )
        # forward continuation: drop the middle vertex
    return merged


def _check_simple(ring: list[Point]) -> None:
    """Reject any contact between non-adjacent edges (closed-segment overlap)."""
    n = len(ring)
    edges = [(ring[i], ring[(i + 1) % n], i) for i in range(n)]

    def _interval(a: int, b: int) -> Span:
        return (a, b) if a <= b else (b, a)

    for i in range(n):
        (p1, q1, _) = edges[i]
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue  # adjacent edges share exactly their common vertex
            (p2, q2, _) = edges[j]
            h1, h2 = p1[1] == q1[1], p2[1] == q2[1]
            if h1 and h2:
                if p1[1] == p2[1]:
                    a1, b1 = _interval(p1[0], q1[0])
                    a2, b2 = _interval(p2[0], q2[0])
                    if max(a1, a2) <= min(b1, b2):
                        raise InvalidPolygonError(
                            "self-intersecting",
                            f"horizontal edges {i} and {j} overlap",
                            i,
                        )
            elif not h1 and not h2:
                if p1[0] == p2[0]:
                    a1, b1 = _interval(p1[1], q1[1])
                    a2, b2 = _interval(p2[1], q2[1])
                    if max(a1, a2) <= min(b1, b2):
                        raise InvalidPolygonError(
                            "self-intersecting",
                            f"vertical edges {i} and {j} overlap",
                            i,
                        )
            else:
                if h1:
                    hy, (hx1, hx2) = p1[1], _interval(p1[0], q1[0])
                    vx, (vy1, vy2) = p2[0], _interval(p2[1], q2[1])
                else:
                    hy, (hx1, hx2) = p2[1], _interval(p2[0], q2[0])
                    vx, (vy1, vy2) = p1[0], _interval(p1[1], q1[1])
                if hx1 <= vx <= hx2 and vy1 <= hy <= vy2:
                    raise InvalidPolygonError(
                        "self-intersecting", f"edges {i} and {j} cross or touch", i
                    )


def validate(vertices: Iterable[Point]) -> OrthoPolygon:
    """Validate an input-unit vertex ring and build the polygon.

    Accepts either orientation (clockwise input is reversed), merges collinear
    vertices, and tolerates an explicitly repeated closing vertex.  Raises
    :class:`InvalidPolygonError` naming the violated property and an offending
    vertex index otherwise.
    """
    pts = [tuple(v) for v in vertices]
    for i, pt in enumerate(pts):
        if len(pt) != 2 or not all(isinstance(c, int) and not isinstance(c, bool) for c in pt):
            raise InvalidPolygonError("non-integer", f"vertex {i} is not an integer pair", i)
        if any(abs(c) > COORD_LIMIT for c in pt):
            raise InvalidPolygonError("out-of-range", f"vertex {i} exceeds |c| <= {COORD_LIMIT}", i)
    if len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()

    ring: list[Point] = [(x * SCALE, y * SCALE) for x, y in pts]
    n = len(ring)
    for i in range(n):
        if ring[i] == ring[(i + 1) % n]:
            raise InvalidPolygonError("degenerate-edge", f"zero-length edge at vertex {i}", i)
    for i in range(n):
        (x1, y1), (x2, y2) = ring[i], ring[(i + 1) % n]
        if x1 != x2 and y1 != y2:
            raise InvalidPolygonError(
                "non-orthogonal", f"edge from vertex {i} is not axis-parallel", i
            )
    if n < 4:
        raise InvalidPolygonError("too-few-vertices", f"need at least 4 vertices, got {n}")

    ring = _merge_collinear(ring)
    if len(ring) < 4:
        raise InvalidPolygonError("degenerate-edge", "polygon collapses after merging collinear runs")

    seen: dict[Point, int] = {}
    for i, pt in enumerate(ring):
        if pt in seen:
            raise InvalidPolygonError(
                "duplicate-vertex", f"vertex {i} repeats vertex {seen[pt]}", i
            )
        seen[pt] = i

    area2 = _shoelace2(ring)
    if area2 == 0:
        raise InvalidPolygonError("self-intersecting", "ring encloses zero area")
    if area2 < 0:
        ring.reverse()

    _check_simple(ring)

    # Monotonicity and slab extraction: every vertical line interior to a slab
    # must be spanned by exactly one bottom and one top horizontal edge.
    xs = sorted({x for x, _ in ring})
    hedges = []
    nr = len(ring)
    for i in range(nr):
        (x1, y1), (x2, y2) = ring[i], ring[(i + 1) % nr]
        if y1 == y2:
            hedges.append((min(x1, x2), max(x1, x2), y1, i))
    spans: list[Span] = []
    for x1, x2 in zip(xs, xs[1:]):
        spanning = sorted(
            (y, idx) for (ex1, ex2, y, idx) in hedges if ex1 <= x1 and x2 <= ex2
        )
        if len(spanning) != 2:
            offender = spanning[2][1] if len(spanning) > 2 else (spanning[0][1] if spanning else 0)
            raise InvalidPolygonError(
                "not-monotone",
                f"a vertical line over [{x1 // SCALE},{x2 // SCALE}] meets "
                f"{len(spanning)} horizontal edges (want 2)",
                offender,
            )
        spans.append((spanning[0][0], spanning[1][0]))
    for (a, b), (c, d) in zip(spans, spans[1:]):
        if max(a, c) > min(b, d):
            raise InvalidPolygonError("not-monotone", "interior disconnects between slabs")

    profile = SlabProfile(tuple(xs), tuple(spans))

    # The slab union must be exactly the input region; compare canonical rings
    # up to rotation.  Any discrepancy means the ring is not a monotone stack.
    rebuilt = profile.to_ring()
    if len(rebuilt) != len(ring) or set(rebuilt) != set(ring):
        raise InvalidPolygonError("not-monotone", "region is not a left-to-right slab stack")
    start = ring.index(rebuilt[0])
    if ring[start:] + ring[:start] != rebuilt:
        raise InvalidPolygonError("not-monotone", "region is not a left-to-right slab stack")

    return OrthoPolygon(tuple(ring), profile)


def parse_polygon(text: str) -> OrthoPolygon:
    """Parse a JSON document ``{"vertices": [[x, y], ...]}`` and validate it."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidPolygonError("malformed-json", f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise InvalidPolygonError("malformed-json", 'document must be {"vertices": [[x, y], ...]}')
    verts = doc["vertices"]
    if not isinstance(verts, list) or any(
        not isinstance(v, (list, tuple)) or len(v) != 2 for v in verts
    ):
        raise InvalidPolygonError("malformed-json", "vertices must be a list of [x, y] pairs")
    if len(verts) < 4:
        # A 3-point ring can still expose a diagonal edge; report that first.
        for i in range(len(verts)):
            (x1, y1), (x2, y2) = verts[i], verts[(i + 1) % len(verts)]
            if x1 != x2 and y1 != y2:
                raise InvalidPolygonError(
                    "non-orthogonal", f"edge from vertex {i} is not axis-parallel", i
                )
        raise InvalidPolygonError("too-few-vertices", f"need at least 4 vertices, got {len(verts)}")
    for v in verts:
        for c in v:
            if isinstance(c, float) and c.is_integer():
                # JSON "6.0" is accepted as the integer 6.
                continue
            if not isinstance(c, int) or isinstance(c, bool):
                raise InvalidPolygonError("non-integer", f"coordinate {c!r} is not an integer")
    return validate([(int(x), int(y)) for x, y in verts])


def slab_profile(p: OrthoPolygon) -> SlabProfile:
    """The slab decomposition of p (left-to-right, maximal slabs)."""
    return p.profile


def cut_right(prof: SlabProfile, x0: int) -> SlabProfile | None:
    """The part of the polygon at x >= x0, where x0 is a breakpoint.

    Returns None when x0 is the last breakpoint (empty remainder — the caller
    is done).  Raises ValueError if x0 is not a breakpoint of prof.
    """
    i = bisect_left(prof.xs, x0)
    if i == len(prof.xs) or prof.xs[i] != x0:
        raise ValueError(f"x0={x0} is not a breakpoint of the profile")
    if x0 == prof.xs[-1]:
        return None
    return SlabProfile(prof.xs[i:], prof.spans[i:])


class CellGrid:
    """Coordinate-compressed cell decomposition with exact integer midpoints.

    Cuts are internal (even) coordinates; each cell is entirely inside or
    entirely outside the closed polygon.  Cells are indexed column-major
    (``ix * ny + iy``), so the lowest set bit of any cell mask is the
    minimum-x (ties: lowest y) cell — the scan order the finders need.
    Outside cells keep their indices; ``inside_mask`` marks the polygon.
    """

    __slots__ = (
        "profile", "x_cuts", "y_cuts", "nx", "ny", "inside_mask",
        "rep_xs", "rep_ys", "col_masks", "row_cells", "row_edge_xs",
        "_x_cut_set", "_y_cut_set",
    )

    def __init__(self, profile: SlabProfile, x_cuts: tuple[int, ...], y_cuts: tuple[int, ...]):
        self.profile = profile
        self.x_cuts = x_cuts
        self.y_cuts = y_cuts
        self._x_cut_set = frozenset(x_cuts)
        self._y_cut_set = frozenset(y_cuts)
        self.nx = len(x_cuts) - 1
        self.ny = len(y_cuts) - 1
        self.rep_xs = tuple((a + b) // 2 for a, b in zip(x_cuts, x_cuts[1:]))
        self.rep_ys = tuple((a + b) // 2 for a, b in zip(y_cuts, y_cuts[1:]))

        inside = 0
        col_masks = []
        for ix in range(self.nx):
            slab = profile.slab_index(self.rep_xs[ix])
            lo, hi = profile.spans[slab]
            col = 0
            base = ix * self.ny
            for iy in range(self.ny):
                if lo <= y_cuts[iy] and y_cuts[iy + 1] <= hi:
                    col |= 1 << (base + iy)
            col_masks.append(col)
            inside |= col
        self.inside_mask = inside
        self.col_masks = tuple(col_masks)

        row_cells = []
        row_edge_xs = []
        for iy in range(self.ny):
            cells = tuple(
                (ix, 1 << (ix * self.ny + iy))
                for ix in range(self.nx)
                if inside >> (ix * self.ny + iy) & 1
            )
            row_cells.append(cells)
            ry = self.rep_ys[iy]
            row_edge_xs.append(
                tuple(x for (x, ylo, yhi) in profile.vertical_edges if ylo < ry < yhi)
            )
        self.row_cells = tuple(row_cells)
        self.row_edge_xs = tuple(row_edge_xs)

    @property
    def inside_count(self) -> int:
        return self.inside_mask.bit_count()

    def has_x_cut(self, x: int) -> bool:
        return x in self._x_cut_set

    def has_y_cut(self, y: int) -> bool:
        return y in self._y_cut_set

    def cell_index(self, ix: int, iy: int) -> int:
        return ix * self.ny + iy

    def is_inside(self, ix: int, iy: int) -> bool:
        return bool(self.inside_mask >> self.cell_index(ix, iy) & 1)

    def cell_bounds(self, ix: int, iy: int) -> tuple[int, int, int, int]:
        """(x_lo, y_lo, x_hi, y_hi) of the cell, internal units."""
        return (self.x_cuts[ix], self.y_cuts[iy], self.x_cuts[ix + 1], self.y_cuts[iy + 1])

    def rep(self, ix: int, iy: int) -> Point:
        return (self.rep_xs[ix], self.rep_ys[iy])

    def iter_cells(self, mask: int):
        """Yield (ix, iy) of every cell in mask, in column-major order."""
        while mask:
            low = mask & -mask
            idx = low.bit_length() - 1
            yield divmod(idx, self.ny)
            mask ^= low

    def first_cell(self, mask: int) -> tuple[int, int] | None:
        """Minimum-x (ties: lowest y) cell of mask, or None when empty."""
        if mask == 0:
            return None
        idx = (mask & -mask).bit_length() - 1
        return divmod(idx, self.ny)

    def inside_mask_between(self, x_lo: int | None, x_hi: int | None) -> int:
        """Inside cells whose x-range lies within [x_lo, x_hi] (None = unbounded)."""
        bits = 0
        for ix in range(self.nx):
            if x_lo is not None and self.x_cuts[ix] < x_lo:
                continue
            if x_hi is not None and self.x_cuts[ix + 1] > x_hi:
                continue
            bits |= self.col_masks[ix]
        return bits

    def cell_area_of(self, mask: int) -> int:
        return sum(
            (self.x_cuts[ix + 1] - self.x_cuts[ix]) * (self.y_cuts[iy + 1] - self.y_cuts[iy])
            for ix, iy in self.iter_cells(mask)
        )


def build_grid(
    prof: SlabProfile,
    extra_x: Iterable[int] = (),
    extra_y: Iterable[int] = (),
) -> CellGrid:
    """Cell grid over prof refined by the given extra cut lines.

    Extra cuts must be even (internal) coordinates inside the bounding box;
    evenness is what keeps every cell representative an exact integer.
    """
    ex, ey = set(extra_x), set(extra_y)
    for v in ex | ey:
        if v % 2:
            raise ValueError(f"grid cut {v} is odd; cuts must be internal (doubled) coordinates")
    for v in ex:
        if not prof.x_min <= v <= prof.x_max:
            raise ValueError(f"extra x-cut {v} outside [{prof.x_min}, {prof.x_max}]")
    for v in ey:
        if not prof.y_min <= v <= prof.y_max:
            raise ValueError(f"extra y-cut {v} outside [{prof.y_min}, {prof.y_max}]")
    x_cuts = tuple(sorted(set(prof.xs) | ex))
    y_cuts = tuple(sorted({v for span in prof.spans for v in span} | ey))
    return CellGrid(prof, x_cuts, y_cuts)
