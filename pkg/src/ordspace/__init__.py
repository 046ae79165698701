"""Exact experiments with left-orderings of solvable groups of finite rank."""
from .classify import (
    SeriesDescriptor,
    Verdict,
    count_c_orderings,
    count_left_orderings,
    enum_orderings,
    series_from_json,
    series_of,
    validate_series,
    verdict,
)
from .dynreal import RealizationMap, ball_enumeration, check_realization, realize
from .errors import OrdspaceError
from .exact import MINUS_INFINITY, PLUS_INFINITY, AffineMap, OrderParam, Side
from .groups import BS13Group, F1Group, GnGroup, IntegerGroup, RankOneGroup, TowerGroup, ball, group_from_json
from .orders import (
    ExtensionOrdering,
    LexOrdering,
    Ordering,
    ReverseOrdering,
    SmirnovOrdering,
    check_cofinal,
    check_cone_axioms,
    check_conradian,
    check_convex,
    make_conrad_lex,
    make_extension,
    make_reverse,
    make_smirnov,
    make_tararin_lex,
    ordering_from_json,
    quotient_order,
    restrict,
)
from .report import Report, Violation
from .space import agreement_radius, converge_experiment, dist, probe_neighborhood

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "BS13Group",
    "ExtensionOrdering",
    "F1Group",
    "GnGroup",
    "IntegerGroup",
    "LexOrdering",
    "MINUS_INFINITY",
    "OrderParam",
    "Ordering",
    "OrdspaceError",
    "PLUS_INFINITY",
    "RankOneGroup",
    "RealizationMap",
    "Report",
    "ReverseOrdering",
    "SeriesDescriptor",
    "Side",
    "SmirnovOrdering",
    "TowerGroup",
    "Verdict",
    "Violation",
    "agreement_radius",
    "ball",
    "ball_enumeration",
    "check_cofinal",
    "check_cone_axioms",
    "check_conradian",
    "check_convex",
    "check_realization",
    "converge_experiment",
    "count_c_orderings",
    "count_left_orderings",
    "dist",
    "enum_orderings",
    "group_from_json",
    "make_conrad_lex",
    "make_extension",
    "make_reverse",
    "make_smirnov",
    "make_tararin_lex",
    "ordering_from_json",
    "probe_neighborhood",
    "quotient_order",
    "realize",
    "restrict",
    "series_from_json",
    "series_of",
    "validate_series",
    "verdict",
]
