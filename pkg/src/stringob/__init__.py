"""Modified Van Kampen obstructions for string graphs and planarity."""

from __future__ import annotations

from .drawing import (
    CrossingVector,
    Drawing,
    apply_finger_move,
    crossing_vector,
    layout_convex_order,
    layout_figure,
    layout_moment_curve,
    layout_random,
    make_drawing,
    subdivide_drawing,
    validate_generic,
)
from .graph import (
    DELTA,
    S,
    SD,
    EdgePairSet,
    Graph,
    SubdivisionMap,
    barycentric_subdivision,
    generate,
    make_graph,
    pair_set,
)
from .obstruction import (
    INTEGER,
    MOD2,
    FingerMoveSystem,
    ObstructionReport,
    build_system,
    decide_integer,
    decide_mod2,
    finger_move_vector,
    obstruction,
    planarity_obstruction,
    string_obstruction,
    subdivided_obstruction,
)
from .strings import (
    StringRepresentation,
    drawing_from_strings,
    make_representation,
    strings_from_drawing,
    verify_sd_disjointness,
    verify_string_representation,
)
from .svg import export_svg

__all__ = [
    "DELTA", "S", "SD", "MOD2", "INTEGER",
    "Graph", "EdgePairSet", "SubdivisionMap", "make_graph", "generate", "pair_set",
    "barycentric_subdivision",
    "Drawing", "CrossingVector", "make_drawing", "layout_moment_curve", "layout_convex_order",
    "layout_random", "layout_figure", "validate_generic", "crossing_vector", "apply_finger_move",
    "subdivide_drawing", "export_svg",
    "FingerMoveSystem", "ObstructionReport", "finger_move_vector", "build_system", "decide_mod2",
    "decide_integer", "obstruction", "string_obstruction", "subdivided_obstruction",
    "planarity_obstruction",
    "StringRepresentation", "make_representation", "verify_string_representation",
    "drawing_from_strings", "verify_sd_disjointness", "strings_from_drawing",
]
