"""Exact peeling-sequence counting, defense depth and recursive constructions.

Coordinates are exchanged as ``fractions.Fraction``; inputs may also be ints
or strings such as ``"-3/4"``. Counts are Python ints.
"""

from ._peelkit import (
    CertificationError,
    InputError,
    ResourceError,
    base_set,
    build_construction,
    corollary_epsilon,
    defends_by_peeling,
    defense_number,
    depth,
    gale_set,
    growth_base,
    hull_vertices,
    is_general_position,
    optimal_m,
    peel_count,
    peel_count_naive,
    peel_enumerate,
    render_svg,
    theorem1_m,
    theorem2_bound,
    verify,
)

__all__ = [
    "CertificationError",
    "InputError",
    "ResourceError",
    "base_set",
    "build_construction",
    "corollary_epsilon",
    "defends_by_peeling",
    "defense_number",
    "depth",
    "gale_set",
    "growth_base",
    "hull_vertices",
    "is_general_position",
    "optimal_m",
    "peel_count",
    "peel_count_naive",
    "peel_enumerate",
    "render_svg",
    "theorem1_m",
    "theorem2_bound",
    "verify",
]
