from app.quadfield.field import (
    QuadField,
    field_of,
    home_field,
    is_integral,
    is_square,
    norm_trace,
    quad_field,
    unit_square_classes,
)
from app.quadfield.hilbert import Place, RealPlace, hilbert_symbol, real_places, square_class_key
from app.quadfield.primes import (
    PrimeIdeal,
    PrimeKind,
    dyadic_generators,
    factor_rational_prime,
    prime_generator,
    relevant_primes,
    residue_character,
    uniformizer,
    valuation,
)

__all__ = [
    "Place",
    "PrimeIdeal",
    "PrimeKind",
    "QuadField",
    "RealPlace",
    "dyadic_generators",
    "factor_rational_prime",
    "field_of",
    "home_field",
    "hilbert_symbol",
    "is_integral",
    "is_square",
    "norm_trace",
    "prime_generator",
    "quad_field",
    "real_places",
    "relevant_primes",
    "residue_character",
    "square_class_key",
    "uniformizer",
    "unit_square_classes",
    "valuation",
]
