from app.qforms.dyadic import dyadic_hasse_q, dyadic_hilbert_symbol_q
from app.qforms.forms import DiagonalForm, QuadraticForm, diagonalize, format_form, parse_form
from app.qforms.invariants import (
    FormInvariants,
    IsometryResult,
    SquareClass,
    det_square_class,
    form_invariants,
    hasse_invariant,
    isometric_over_K,
    real_signature,
    same_square_class,
)
from app.qforms.similarity import SimilarityResult, similar_over_K

__all__ = [
    "DiagonalForm",
    "FormInvariants",
    "IsometryResult",
    "QuadraticForm",
    "SimilarityResult",
    "SquareClass",
    "det_square_class",
    "diagonalize",
    "dyadic_hasse_q",
    "dyadic_hilbert_symbol_q",
    "form_invariants",
    "format_form",
    "hasse_invariant",
    "isometric_over_K",
    "parse_form",
    "real_signature",
    "same_square_class",
    "similar_over_K",
]
