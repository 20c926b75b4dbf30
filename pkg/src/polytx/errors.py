"""Exception types shared across the package."""

from __future__ import annotations


class InvalidPolygonError(ValueError):
    """The input vertex ring is not a simple x-monotone orthogonal polygon.

    ``reason`` is a stable machine-readable code (``"non-orthogonal"``,
    ``"self-intersecting"``, ``"not-monotone"``, ``"degenerate-edge"``,
    ``"duplicate-vertex"``, and the ingestion codes ``"malformed-json"``,
    ``"too-few-vertices"``, ``"non-integer"``, ``"out-of-range"``).
    ``index`` names the offending vertex in the input ring when one can be
    pinned down.
    """

    def __init__(self, reason: str, message: str, index: int | None = None):
        super().__init__(message)
        self.reason = reason
        self.index = index


class NoSolutionWithinBudget(Exception):
    """The exact search exhausted its cardinality budget without a cover."""

    def __init__(self, budget: int):
        super().__init__(f"no covering subset of cardinality <= {budget}")
        self.budget = budget
