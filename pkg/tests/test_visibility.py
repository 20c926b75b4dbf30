import pytest
from hypothesis import given, settings, strategies as st

import polytx as px
from polytx import (
    RectUnion,
    SCALE,
    Transmitter,
    augment_candidates,
    build_grid,
    contains_region,
    covers_polygon,
    crossing_count,
    sees_point,
    union_regions,
    vis_region,
)

from oracles import (
    cell_rects,
    mirror_transmitter,
    mirrored,
    oracle_region_bits,
    oracle_sees,
)


def T(o: str, anchor: int, lo: int, hi: int) -> Transmitter:
    return Transmitter(o, anchor * SCALE, (lo * SCALE, hi * SCALE))


def region_for(p, s, k):
    grid = build_grid(p.profile)
    return vis_region(s, k, grid, p.profile), grid


class TestCrossingCount:
    def test_valley(self, polys):
        prof = polys["VALLEY"].profile
        # input height 2: both notch walls block the line of sight
        assert crossing_count(prof, 4, 0, 12) == 2
        assert crossing_count(prof, 4, 4, 8) == 0   # between the walls
        assert crossing_count(prof, 1, 0, 12) == 0  # below the notch

    def test_gap7_and_symmetry(self, polys):
        prof = polys["GAP7"].profile
        assert crossing_count(prof, 5, 16, 26) == 1
        assert crossing_count(prof, 5, 26, 16) == 1

    def test_edge_ordinate_rejected(self, polys):
        with pytest.raises(ValueError):
            crossing_count(polys["VALLEY"].profile, 2, 0, 12)

    def test_strict_between(self, polys):
        # endpoints sitting exactly on a wall do not count it
        prof = polys["VALLEY"].profile
        assert crossing_count(prof, 4, 0, 4) == 0
        assert crossing_count(prof, 4, 0, 5) == 1


class TestSeesPoint:
    def test_valley_left_wall(self, polys):
        prof = polys["VALLEY"].profile
        s = T("v", 0, 0, 3)
        rep = (10, 4)  # the cell right of the notch, above its floor
        assert sees_point(s, 2, rep, prof)
        assert not sees_point(s, 1, rep, prof)
        assert not sees_point(s, 0, rep, prof)

    def test_rect_needs_no_crossings(self, polys):
        prof = polys["RECT"].profile
        for s in augment_candidates((), polys["RECT"]):
            assert sees_point(s, 0, (6, 3), prof)

    def test_foot_must_be_on_the_closed_span(self, polys):
        prof = polys["VALLEY"].profile
        s = Transmitter("v", 0, (0, 2))
        assert sees_point(s, 2, (10, 1), prof)       # py == span end: closed
        assert not sees_point(s, 2, (10, 4), prof)   # py above the span

    def test_point_on_own_line(self, polys):
        prof = polys["VALLEY"].profile
        assert sees_point(Transmitter("h", 4, (0, 4)), 0, (2, 4), prof)
        assert not sees_point(Transmitter("h", 4, (0, 4)), 0, (10, 4), prof)

    def test_bad_k_rejected(self, polys):
        with pytest.raises(ValueError):
            sees_point(T("v", 0, 0, 3), 3, (6, 3), polys["RECT"].profile)


class TestVisRegion:
    def test_valley_k0_blocked_by_the_notch(self, polys):
        p = polys["VALLEY"]
        r, g = region_for(p, T("v", 0, 0, 3), 0)
        assert sorted(r.cells()) == [(0, 0), (0, 1), (1, 0), (2, 0)]
        assert r.area == 40  # internal units: everything but the right wall's top
        assert not covers_polygon(r)

    def test_valley_k2_sees_everything(self, polys):
        p = polys["VALLEY"]
        r, _ = region_for(p, T("v", 0, 0, 3), 2)
        assert covers_polygon(r)

    def test_gap7_center_column(self, polys):
        p = polys["GAP7"]
        counts = {}
        for k in (0, 1, 2):
            r, g = region_for(p, T("v", 8, 0, 3), k)
            counts[k] = r.cell_count
        assert counts == {0: 7, 1: 10, 2: 13}
        assert g.inside_count == 13

    def test_horizontal_covers_exactly_its_columns(self, polys, small_corpus):
        # a horizontal segment sees the full columns it spans, at every k
        for p in list(polys.values()) + small_corpus[:20]:
            g = build_grid(p.profile)
            for s in augment_candidates((), p):
                if s.orientation != "h":
                    continue
                expect = g.inside_mask_between(s.span[0], s.span[1])
                for k in (0, 1, 2):
                    assert vis_region(s, k, g, p.profile).bits == expect

    def test_k_is_monotone(self, polys, small_corpus):
        for p in list(polys.values()) + small_corpus[:20]:
            g = build_grid(p.profile)
            for s in augment_candidates((), p):
                r0 = vis_region(s, 0, g, p.profile)
                r1 = vis_region(s, 1, g, p.profile)
                r2 = vis_region(s, 2, g, p.profile)
                assert contains_region(r1, r0)
                assert contains_region(r2, r1)

    def test_segment_sees_itself(self, polys, small_corpus):
        # every inside cell the segment touches is visible at k=0
        for p in list(polys.values()) + small_corpus[:10]:
            g = build_grid(p.profile)
            for s in augment_candidates((), p):
                r = vis_region(s, 0, g, p.profile)
                lo, hi = s.span
                for ix, iy in g.iter_cells(g.inside_mask):
                    x1, y1, x2, y2 = g.cell_bounds(ix, iy)
                    if s.orientation == "v":
                        touches = x1 <= s.anchor <= x2 and y1 < hi and y2 > lo
                    else:
                        touches = y1 <= s.anchor <= y2 and x1 < hi and x2 > lo
                    if touches:
                        assert g.cell_index(ix, iy) in [
                            g.cell_index(cx, cy) for cx, cy in r.cells()
                        ]

    def test_matches_brute_force_oracle(self, polys, small_corpus):
        for p in list(polys.values()) + small_corpus[:15]:
            g = build_grid(p.profile)
            for s in augment_candidates((), p):
                for k in (0, 1, 2):
                    assert vis_region(s, k, g, p.profile).bits == oracle_region_bits(
                        p, s, k, g
                    )

    def test_mirror_symmetry(self, polys):
        for p in polys.values():
            q = mirrored(p)
            gq = build_grid(q.profile)
            gp = build_grid(p.profile)
            for s in augment_candidates((), p):
                for k in (0, 2):
                    rp = vis_region(s, k, gp, p.profile)
                    rq = vis_region(mirror_transmitter(s), k, gq, q.profile)
                    flipped = {
                        (-x2, y1, -x1, y2) for (x1, y1, x2, y2) in cell_rects(rp)
                    }
                    assert cell_rects(rq) == flipped

    def test_unaligned_segment_rejected(self, polys):
        g = build_grid(polys["RECT"].profile)
        with pytest.raises(ValueError):
            vis_region(Transmitter("v", 6, (0, 6)), 2, g, polys["RECT"].profile)
        with pytest.raises(ValueError):
            vis_region(Transmitter("h", 0, (0, 6)), 2, g, polys["RECT"].profile)

    def test_bad_k_rejected(self, polys):
        g = build_grid(polys["RECT"].profile)
        with pytest.raises(ValueError):
            vis_region(T("v", 0, 0, 3), -1, g, polys["RECT"].profile)


class TestRegions:
    def test_union_and_covers(self, polys):
        p = polys["VALLEY"]
        g = build_grid(p.profile)
        segs = [T("v", 0, 0, 3), T("v", 6, 0, 3)]
        regions = [vis_region(s, 0, g, p.profile) for s in segs]
        assert not any(covers_polygon(r) for r in regions)
        assert covers_polygon(union_regions(regions))

    def test_empty_union_needs_a_grid(self, polys):
        g = build_grid(polys["RECT"].profile)
        empty = union_regions([], grid=g)
        assert empty.cell_count == 0
        assert not covers_polygon(empty)
        with pytest.raises(ValueError):
            union_regions([])

    def test_grid_mismatch_rejected(self, polys):
        p = polys["RECT"]
        g1 = build_grid(p.profile)
        g2 = build_grid(p.profile)
        a = RectUnion(g1, 1)
        b = RectUnion(g2, 1)
        with pytest.raises(ValueError):
            a.union(b)
        with pytest.raises(ValueError):
            contains_region(a, b)
        with pytest.raises(ValueError):
            union_regions([a, b])

    def test_area_and_cells(self, polys):
        p = polys["VALLEY"]
        g = build_grid(p.profile)
        full = RectUnion(g, g.inside_mask)
        assert full.area == p.profile.area
        assert full.cell_count == 5
        assert len(list(full.cells())) == 5


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10**6), data=st.data())
def test_any_candidate_matches_oracle(seed, data):
    p = px.random_monotone(slabs=4, max_height=5, max_width=3, seed=seed)
    fam = augment_candidates((), p)
    s = data.draw(st.sampled_from(fam))
    k = data.draw(st.sampled_from((0, 1, 2)))
    g = build_grid(p.profile)
    assert vis_region(s, k, g, p.profile).bits == oracle_region_bits(p, s, k, g)
