"""Two-transmitter cover by repeated left-to-right finder steps.

Each iteration runs two greedy finders on the remaining (right) part of the
polygon.  Both return at most two segments that cover everything up to some
cut line; the better step (further cut, then fewer segments) is kept and the
covered prefix is discarded.  At most two segments per iteration against at
least one in any optimal cover gives the factor-2 guarantee.
"""

from __future__ import annotations

from dataclasses import dataclass

from .candidates import (
    HORIZONTAL,
    SegmentSet,
    Transmitter,
    VERTICAL,
    canonical,
    edge_aligned_candidates,
)
from .geometry import CellGrid, OrthoPolygon, SCALE, SlabProfile, build_grid, cut_right
from .visibility import RectUnion, covers_polygon, union_regions, vis_region


@dataclass(frozen=True)
class FinderResult:
    """One finder step: one or two segments, rightmost covered line, completion.

    cut_x is a breakpoint of the profile the finder ran on (internal units,
    like every other coordinate in the library); when done it is the
    rightmost breakpoint.
    """

    first: Transmitter
    second: Transmitter | None
    cut_x: int
    done: bool

    @property
    def transmitters(self) -> SegmentSet:
        if self.second is None:
            return (self.first,)
        return (self.first, self.second)

    @property
    def count(self) -> int:
        return 1 if self.second is None else 2


@dataclass(frozen=True)
class Solution:
    """A verified cover attempt, ready for serialization."""

    transmitters: SegmentSet
    k: int
    solver: str
    iterations: int
    coverage_complete: bool

    @property
    def count(self) -> int:
        return len(self.transmitters)

    @staticmethod
    def build(
        polygon: OrthoPolygon,
        transmitters: SegmentSet,
        k: int,
        solver: str,
        iterations: int,
    ) -> "Solution":
        """Re-verify coverage on the polygon before packaging.

        Coverage is never trusted from the solver that produced the set: the
        grid is refined with every transmitter coordinate and the union of
        the k-visibility regions is compared against the whole polygon.
        """
        prof = polygon.profile
        extra_x: list[int] = []
        extra_y: list[int] = []
        for t in transmitters:
            if t.orientation == VERTICAL:
                extra_x.append(t.anchor)
                extra_y.extend(t.span)
            else:
                extra_y.append(t.anchor)
                extra_x.extend(t.span)
        grid = build_grid(prof, extra_x, extra_y)
        regions = [vis_region(t, k, grid, prof) for t in transmitters]
        covered = covers_polygon(union_regions(regions, grid=grid))
        return Solution(transmitters, k, solver, iterations, covered)

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "solver": self.solver,
            "count": self.count,
            "transmitters": [t.as_input() for t in self.transmitters],
            "coverage": "complete" if self.coverage_complete else "incomplete",
            "iterations": self.iterations,
        }


def _regions_for(
    cands: SegmentSet, grid: CellGrid, prof: SlabProfile
) -> dict[Transmitter, RectUnion]:
    return {s: vis_region(s, 2, grid, prof) for s in cands}


def _prepare(
    prof: SlabProfile,
    cands: SegmentSet,
    grid: CellGrid | None,
    regions: dict[Transmitter, RectUnion] | None,
) -> tuple[SegmentSet, CellGrid, dict[Transmitter, RectUnion]]:
    cands = canonical(cands)
    if not cands:
        raise ValueError("finder needs a nonempty candidate set")
    if grid is None:
        grid = build_grid(prof)
    if regions is None:
        regions = _regions_for(cands, grid, prof)
    return cands, grid, regions


def vh_finder(
    prof: SlabProfile,
    cands: SegmentSet,
    *,
    grid: CellGrid | None = None,
    regions: dict[Transmitter, RectUnion] | None = None,
) -> FinderResult:
    """Vertical-first step.

    Takes the rightmost vertical candidate that still sees every cell weakly
    left of its own line (the left edge qualifies vacuously).  If something
    is left over, the first uncovered cell is patched with the horizontal
    candidate over it that reaches furthest right (ties: lowest line); the
    cut is that segment's right end.
    """
    cands, grid, regions = _prepare(prof, cands, grid, regions)
    inside = grid.inside_mask
    s_v = None
    for s in cands:
        if s.orientation != VERTICAL:
            continue
        if s_v is not None and s.anchor <= s_v.anchor:
            continue
        left = grid.inside_mask_between(None, s.anchor)
        if left & ~regions[s].bits == 0:
            s_v = s
    if s_v is None:
        raise ValueError("no usable vertical candidate (family must span the left edge)")
    uncovered = inside & ~regions[s_v].bits
    if uncovered == 0:
        return FinderResult(s_v, None, prof.x_max, True)
    ix, _ = grid.first_cell(uncovered)
    px = grid.rep_xs[ix]
    s_h = None
    for s in cands:
        if s.orientation != HORIZONTAL or not s.span[0] < px < s.span[1]:
            continue
        if s_h is None or (s.span[1], -s.anchor) > (s_h.span[1], -s_h.anchor):
            s_h = s
    if s_h is None:
        raise ValueError("no horizontal candidate over the first uncovered cell")
    if uncovered & ~regions[s_h].bits == 0:
        return FinderResult(s_v, s_h, prof.x_max, True)
    return FinderResult(s_v, s_h, s_h.span[1], False)


def hv_finder(
    prof: SlabProfile,
    cands: SegmentSet,
    *,
    grid: CellGrid | None = None,
    regions: dict[Transmitter, RectUnion] | None = None,
) -> FinderResult:
    """Horizontal-first step.

    Takes the left-anchored horizontal candidate reaching furthest right
    (ties: lowest line), then the rightmost vertical candidate that sees
    everything between that segment's right end and its own line.  The cut
    is the last breakpoint with nothing uncovered left of it.
    """
    cands, grid, regions = _prepare(prof, cands, grid, regions)
    inside = grid.inside_mask
    s_h = None
    for s in cands:
        if s.orientation != HORIZONTAL or s.span[0] != prof.x_min:
            continue
        if s_h is None or (s.span[1], -s.anchor) > (s_h.span[1], -s_h.anchor):
            s_h = s
    if s_h is None:
        raise ValueError("no left-anchored horizontal candidate")
    ell = s_h.span[1]
    if inside & ~regions[s_h].bits == 0:
        return FinderResult(s_h, None, prof.x_max, True)
    s_v = None
    for s in cands:
        if s.orientation != VERTICAL:
            continue
        if s_v is not None and s.anchor <= s_v.anchor:
            continue
        between = grid.inside_mask_between(ell, s.anchor)
        if between & ~regions[s].bits == 0:
            s_v = s
    assert s_v is not None, "verticals at or left of the cut qualify vacuously"
    uncovered = inside & ~(regions[s_h].bits | regions[s_v].bits)
    if uncovered == 0:
        return FinderResult(s_h, s_v, prof.x_max, True)
    ix, _ = grid.first_cell(uncovered)
    cell_left = grid.x_cuts[ix]
    cut = max(x for x in prof.xs if x <= cell_left)
    return FinderResult(s_h, s_v, cut, False)


def _better(a: FinderResult, b: FinderResult) -> FinderResult:
    """a (vertical-first) vs b (horizontal-first): further cut wins, then
    fewer transmitters; the full tie goes to the horizontal-first step."""
    if a.cut_x != b.cut_x:
        return a if a.cut_x > b.cut_x else b
    if a.count != b.count:
        return a if a.count < b.count else b
    return b


def approximate_2transmitters(p: OrthoPolygon) -> Solution:
    """Factor-2 approximation of the minimum 2-transmitter cover.

    Recomputes the edge-aligned candidate family on each remaining part, so
    every chosen segment is maximal there; coverage of the original polygon
    is re-verified at the end rather than inferred from the loop.
    """
    chosen: list[Transmitter] = []
    current: SlabProfile | None = p.profile
    iterations = 0
    while current is not None:
        cands = edge_aligned_candidates(current)
        grid = build_grid(current)
        regions = _regions_for(cands, grid, current)
        step = _better(
            vh_finder(current, cands, grid=grid, regions=regions),
            hv_finder(current, cands, grid=grid, regions=regions),
        )
        chosen.extend(step.transmitters)
        iterations += 1
        if step.done:
            break
        assert step.cut_x > current.x_min, "cut must advance"
        current = cut_right(current, step.cut_x)
    transmitters = canonical(chosen)
    assert len(transmitters) <= 2 * iterations
    assert iterations <= p.m
    return Solution.build(p, transmitters, 2, "approx", iterations)
