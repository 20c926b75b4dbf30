"""Guarding x-monotone orthogonal polygons with few 2-transmitters.

Exact integer geometry throughout: polygons become slab profiles, visibility
becomes bitsets over a cell grid, and both the factor-2 approximation and the
exhaustive exact solver work on a finite edge-aligned candidate family.
"""

from .approx import (
    FinderResult,
    Solution,
    approximate_2transmitters,
    hv_finder,
    vh_finder,
)
from .candidates import (
    SegmentSet,
    Transmitter,
    augment_candidates,
    canonical,
    canonicalize_solution,
    extension_set,
    prune_dominated,
    reflex_vertices,
)
from .errors import InvalidPolygonError, NoSolutionWithinBudget
from .exact import exact_min_transmitters
from .geometry import (
    CellGrid,
    OrthoPolygon,
    Point,
    SCALE,
    SlabProfile,
    Span,
    build_grid,
    cut_right,
    parse_polygon,
    slab_profile,
    validate,
)
from .instances import FIXTURES, corpus, fixture, random_monotone
from .svg import render_svg
from .visibility import (
    RectUnion,
    contains_region,
    covers_polygon,
    crossing_count,
    sees_point,
    union_regions,
    vis_region,
)

__version__ = "0.1.0"

__all__ = [
    "CellGrid",
    "FIXTURES",
    "FinderResult",
    "InvalidPolygonError",
    "NoSolutionWithinBudget",
    "OrthoPolygon",
    "Point",
    "RectUnion",
    "SCALE",
    "SegmentSet",
    "SlabProfile",
    "Solution",
    "Span",
    "Transmitter",
    "approximate_2transmitters",
    "augment_candidates",
    "build_grid",
    "canonical",
    "canonicalize_solution",
    "contains_region",
    "corpus",
    "covers_polygon",
    "crossing_count",
    "cut_right",
    "exact_min_transmitters",
    "extension_set",
    "fixture",
    "hv_finder",
    "parse_polygon",
    "prune_dominated",
    "random_monotone",
    "reflex_vertices",
    "render_svg",
    "sees_point",
    "slab_profile",
    "union_regions",
    "validate",
    "vh_finder",
    "vis_region",
    "__version__",
]
