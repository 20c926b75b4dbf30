import pytest

import polytx as px
from polytx import (
    NoSolutionWithinBudget,
    SCALE,
    Transmitter,
    approximate_2transmitters,
    exact_min_transmitters,
)

from oracles import covered_area


def T(o: str, anchor: int, lo: int, hi: int) -> Transmitter:
    return Transmitter(o, anchor * SCALE, (lo * SCALE, hi * SCALE))


class TestFixtureOptima:
    def test_rect(self, polys):
        sol = exact_min_transmitters(polys["RECT"], 2)
        assert sol.count == 1
        assert sol.transmitters == (T("v", 0, 0, 3),)
        assert sol.iterations == 1  # the very first singleton already covers
        assert sol.solver == "exact"

    def test_gap7_by_k(self, polys):
        p = polys["GAP7"]
        k2 = exact_min_transmitters(p, 2)
        assert k2.count == 1
        assert k2.transmitters == (T("v", 6, 0, 3),)
        k1 = exact_min_transmitters(p, 1)
        assert k1.count == 2
        assert k1.transmitters == (T("v", 2, 0, 3), T("v", 8, 0, 3))
        k0 = exact_min_transmitters(p, 0)
        assert k0.count == 3
        assert k0.transmitters == (
            T("v", 0, 2, 3),
            T("v", 10, 0, 3),
            T("h", 0, 2, 12),
        )

    def test_stair6(self, polys):
        sol = exact_min_transmitters(polys["STAIR6"], 2)
        assert sol.count == 2
        assert sol.transmitters == (T("h", 2, 0, 6), T("h", 5, 6, 12))

    def test_solutions_cover_per_the_oracle(self, polys):
        for name, p in polys.items():
            for k in (0, 1, 2):
                sol = exact_min_transmitters(p, k)
                assert sol.coverage_complete
                assert covered_area(p, sol.transmitters, k)

    def test_witness_is_lexicographically_first(self, polys):
        # enumeration is in canonical candidate order, so reruns agree
        a = exact_min_transmitters(polys["GAP7"], 0)
        b = exact_min_transmitters(polys["GAP7"], 0)
        assert a.transmitters == b.transmitters
        assert a.iterations == b.iterations == 189


class TestBudget:
    def test_exhaustion_raises(self, polys):
        with pytest.raises(NoSolutionWithinBudget) as exc:
            exact_min_transmitters(polys["GAP7"], 0, budget=2)
        assert exc.value.budget == 2

    def test_budget_of_the_optimum_succeeds(self, polys):
        sol = exact_min_transmitters(polys["GAP7"], 0, budget=3)
        assert sol.count == 3

    @pytest.mark.parametrize("budget", [0, -1])
    def test_bad_budget_rejected(self, polys, budget):
        with pytest.raises(ValueError):
            exact_min_transmitters(polys["RECT"], 2, budget=budget)


class TestArguments:
    def test_bad_mode_rejected(self, polys):
        with pytest.raises(ValueError):
            exact_min_transmitters(polys["RECT"], 2, mode="fast")

    @pytest.mark.parametrize("k", [-1, 3, 7])
    def test_bad_k_rejected(self, polys, k):
        with pytest.raises(ValueError):
            exact_min_transmitters(polys["RECT"], k)


class TestDenseMode:
    def test_gap7_agrees_with_standard(self, polys):
        std = exact_min_transmitters(polys["GAP7"], 2)
        dense = exact_min_transmitters(polys["GAP7"], 2, mode="dense")
        assert dense.count == std.count == 1
        assert dense.solver == "exact-dense"

    def test_dense_never_beats_standard(self, tractable_corpus):
        # the edge-aligned family already contains an optimal solution
        for p in tractable_corpus[:30]:
            std = exact_min_transmitters(p, 2)
            dense = exact_min_transmitters(p, 2, mode="dense")
            assert std.count == dense.count


class TestOptimumMonotoneInK:
    def test_fixtures(self, polys):
        for p in polys.values():
            sizes = [exact_min_transmitters(p, k).count for k in (0, 1, 2)]
            assert sizes[0] >= sizes[1] >= sizes[2]

    def test_corpus(self, small_corpus):
        for p in small_corpus[:30]:
            sizes = [exact_min_transmitters(p, k).count for k in (0, 1, 2)]
            assert sizes[0] >= sizes[1] >= sizes[2]


class TestAgainstApproximation:
    def test_ratio_at_most_two_on_fixtures(self, polys):
        for p in polys.values():
            a = approximate_2transmitters(p)
            e = exact_min_transmitters(p, 2)
            assert e.count <= a.count <= 2 * e.count

    def test_approx_iterations_bounded_by_optimum(self, polys, small_corpus):
        for p in list(polys.values()) + small_corpus:
            a = approximate_2transmitters(p)
            e = exact_min_transmitters(p, 2)
            assert a.iterations <= e.count
