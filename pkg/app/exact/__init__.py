from app.exact.embedding import (
    characteristic_polynomial,
    conjugation_signs,
    embed_interval,
    galois_conjugate,
    is_algebraic_integer,
    sign_of,
    to_float,
)
from app.exact.expr import format_expr, parse_expr
from app.exact.radicals import adjoin_sqrt, coerce, sqrt_in_tower, unify_elements, unify_towers
from app.exact.tower import Generator, Tower, TowerElement, arithmetic

__all__ = [
    "Generator",
    "Tower",
    "TowerElement",
    "adjoin_sqrt",
    "arithmetic",
    "characteristic_polynomial",
    "coerce",
    "conjugation_signs",
    "embed_interval",
    "format_expr",
    "galois_conjugate",
    "is_algebraic_integer",
    "parse_expr",
    "sign_of",
    "sqrt_in_tower",
    "to_float",
    "unify_elements",
    "unify_towers",
]
