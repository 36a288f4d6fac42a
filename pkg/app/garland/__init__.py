from app.garland.catalog import Catalog, Piece, load_catalog, parse_catalog
from app.garland.classify import classify_garland
from app.garland.gluing import AssumptionResult, check_assumption, garland_diagram, link_isomorphism
from app.garland.words import (
    GarlandWord,
    capped_word,
    census,
    class_members,
    classes_by_letter_count,
    count_by_volume,
    count_classes,
    equivalent,
    expected_class_count,
    lower_bounds,
    mirror,
    representative,
)

__all__ = [
    "AssumptionResult",
    "Catalog",
    "GarlandWord",
    "Piece",
    "capped_word",
    "census",
    "check_assumption",
    "class_members",
    "classes_by_letter_count",
    "classify_garland",
    "count_by_volume",
    "count_classes",
    "equivalent",
    "expected_class_count",
    "garland_diagram",
    "link_isomorphism",
    "load_catalog",
    "lower_bounds",
    "mirror",
    "parse_catalog",
    "representative",
]
