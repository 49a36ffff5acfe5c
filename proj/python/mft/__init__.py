"""Minimum-area all-flush triangle of a convex polygon."""

from ._core import (
    Candidate,
    MftError,
    Polygon,
    Report,
    area_of,
    brute_force,
    generate_random,
    is_3stable,
    solve,
)

__all__ = [
    "Candidate",
    "MftError",
    "Polygon",
    "Report",
    "area_of",
    "brute_force",
    "generate_random",
    "is_3stable",
    "solve",
]
