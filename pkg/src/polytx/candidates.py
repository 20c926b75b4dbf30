"""Guard segments and the edge-aligned candidate family.

A transmitter is a maximal axis-parallel segment inside the closed polygon.
The search family consists of the extensions of edges incident to reflex
vertices, completed with a maximal vertical segment at every vertical-edge
abscissa and every maximal horizontal run at every horizontal-edge ordinate.
An optimal solution can always be slid onto these edge-aligned lines, which
is what :func:`canonicalize_solution` performs (and re-verifies).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .geometry import OrthoPolygon, Point, SCALE, SlabProfile, Span, build_grid

VERTICAL = "v"
HORIZONTAL = "h"


@dataclass(frozen=True)
class Transmitter:
    """Axis-parallel guard segment: anchor line coordinate plus closed span.

    A vertical transmitter at x = anchor spans y in [span[0], span[1]]; its
    "left" endpoint is the upper one and its "right" endpoint the lower one.
    A horizontal transmitter at y = anchor spans x, left endpoint at span[0].
    Coordinates are internal (doubled) units.
    """

    orientation: str
    anchor: int
    span: Span

    def __post_init__(self) -> None:
        if self.orientation not in (VERTICAL, HORIZONTAL):
            raise ValueError(f"orientation must be 'v' or 'h', got {self.orientation!r}")
        if self.span[0] >= self.span[1]:
            raise ValueError(f"span must be a nondegenerate interval, got {self.span}")

    @property
    def sort_key(self) -> tuple[int, int, int, int]:
        """Canonical family order: vertical first, then anchor, then span."""
        return (0 if self.orientation == VERTICAL else 1, self.anchor, *self.span)

    @property
    def left(self) -> Point:
        if self.orientation == HORIZONTAL:
            return (self.span[0], self.anchor)
        return (self.anchor, self.span[1])

    @property
    def right(self) -> Point:
        if self.orientation == HORIZONTAL:
            return (self.span[1], self.anchor)
        return (self.anchor, self.span[0])

    @property
    def length(self) -> int:
        return self.span[1] - self.span[0]

    def as_input(self) -> dict:
        """JSON-ready dict in input units."""
        return {
            "orientation": self.orientation,
            "anchor": self.anchor // SCALE,
            "span": [self.span[0] // SCALE, self.span[1] // SCALE],
        }

    @classmethod
    def from_input(cls, d: dict) -> "Transmitter":
        lo, hi = d["span"]
        return cls(d["orientation"], int(d["anchor"]) * SCALE, (int(lo) * SCALE, int(hi) * SCALE))


SegmentSet = tuple[Transmitter, ...]


def canonical(segments: Iterable[Transmitter]) -> SegmentSet:
    """Deduplicate and sort into the canonical family order."""
    return tuple(sorted(set(segments), key=lambda s: s.sort_key))


def reflex_vertices(p: OrthoPolygon) -> tuple[Point, ...]:
    """Vertices with 270-degree interior angle, in ring order."""
    ring = p.vertices
    n = len(ring)
    out = []
    for i in range(n):
        ax, ay = ring[i - 1]
        bx, by = ring[i]
        cx, cy = ring[(i + 1) % n]
        cross = (bx - ax) * (cy - by) - (by - ay) * (cx - bx)
        if cross < 0:  # right turn on a counter-clockwise ring
            out.append(ring[i])
    return tuple(out)


def _maximal_vertical(prof: SlabProfile, x: int) -> Transmitter:
    section = prof.cross_section(x)
    assert section is not None, "anchor outside polygon"
    return Transmitter(VERTICAL, x, section)


def extension_set(p: OrthoPolygon) -> SegmentSet:
    """Maximal segments supporting the edges incident to reflex vertices."""
    prof = p.profile
    ring = p.vertices
    n = len(ring)
    reflex = set(reflex_vertices(p))
    segs: list[Transmitter] = []
    for i in range(n):
        if ring[i] not in reflex:
            continue
        for a, b in ((ring[i - 1], ring[i]), (ring[i], ring[(i + 1) % n])):
            if a[1] == b[1]:  # horizontal edge
                run = prof.run_covering(a[1], min(a[0], b[0]), max(a[0], b[0]))
                assert run is not None, "boundary edge must lie inside its own run"
                segs.append(Transmitter(HORIZONTAL, a[1], run))
            else:
                segs.append(_maximal_vertical(prof, a[0]))
    return canonical(segs)


def edge_aligned_candidates(prof: SlabProfile) -> SegmentSet:
    """Every maximal segment on an edge-supporting line of the polygon.

    Verticals: the full cross-section at every breakpoint.  Horizontals: every
    maximal run at every horizontal-edge ordinate.  This family is nonempty
    for any valid profile and its regions cover the polygon at any k (each
    inside cell sits under the run at its own bottom cut line).
    """
    segs = [_maximal_vertical(prof, x) for x in prof.xs]
    for y in prof.edge_ordinates:
        for run in prof.runs_at(y):
            segs.append(Transmitter(HORIZONTAL, y, run))
    return canonical(segs)


def augment_candidates(c: Iterable[Transmitter], p: OrthoPolygon) -> SegmentSet:
    """c completed with the full edge-aligned family of p."""
    return canonical(tuple(c) + edge_aligned_candidates(p.profile))


def prune_dominated(c: Sequence[Transmitter], p: OrthoPolygon, k: int = 2) -> SegmentSet:
    """Single elimination pass in canonical order.

    A candidate is removed when its visibility region is contained in the
    union over the *currently remaining* other candidates, so the union of
    regions over the result equals the union over the input exactly.
    """
    from .visibility import vis_region

    cands = canonical(c)
    prof = p.profile
    grid = build_grid(prof)
    bits = {s: vis_region(s, k, grid, prof).bits for s in cands}
    kept = list(cands)
    for s in cands:
        others = 0
        for t in kept:
            if t is not s:
                others |= bits[t]
        if bits[s] & ~others == 0:
            kept.remove(s)
    return tuple(kept)


def _nearest(lines: Sequence[int], v: int) -> int:
    """Closest value in lines; ties resolve to the smaller (left/down)."""
    return min(lines, key=lambda line: (abs(line - v), line))


def canonicalize_solution(
    sol: Iterable[Transmitter], p: OrthoPolygon
) -> tuple[SegmentSet, bool]:
    """Slide each segment onto the nearer edge-aligned line and maximalize.

    Returns the deduplicated result plus a feasibility flag: whether the
    canonicalized set still covers the polygon with k = 2 (re-verified, not
    assumed).  Raises ValueError when an input segment leaves the closed
    polygon.
    """
    from .visibility import union_regions, covers_polygon, vis_region

    prof = p.profile
    vlines = prof.xs
    hlines = prof.edge_ordinates
    out: list[Transmitter] = []
    for s in sol:
        if s.orientation == VERTICAL:
            section = prof.cross_section(s.anchor)
            if section is None or s.span[0] < section[0] or s.span[1] > section[1]:
                raise ValueError(f"segment {s} is not inside the closed polygon")
            out.append(_maximal_vertical(prof, _nearest(vlines, s.anchor)))
        else:
            if prof.run_covering(s.anchor, *s.span) is None:
                raise ValueError(f"segment {s} is not inside the closed polygon")
            y = s.anchor if s.anchor in hlines else _nearest(hlines, s.anchor)
            run = prof.run_covering(y, *s.span)
            assert run is not None, "slide to the nearer edge line cannot leave the polygon"
            out.append(Transmitter(HORIZONTAL, y, run))
    result = canonical(out)
    grid = build_grid(prof)
    regions = [vis_region(s, 2, grid, prof) for s in result]
    feasible = covers_polygon(union_regions(regions, grid=grid))
    return result, feasible
