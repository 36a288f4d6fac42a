from app.coxeter.construct import (
    double_polyhedron,
    double_template,
    truncate_simplex,
    truncated_gram,
    truncation_template,
)
from app.coxeter.diagram import (
    CoxeterDiagram,
    Dotted,
    EdgeKind,
    Heavy,
    Label,
    chain_diagram,
    parse_diagram,
    serialize_diagram,
)
from app.coxeter.gram import cos_pi_over, gram_matrix, gram_matrix_float
from app.coxeter.signature import (
    Signature,
    VertexLink,
    classify_subdiagram,
    signature,
    vertex_kind,
    vertex_links,
)
from app.coxeter.weights import (
    NumericWeights,
    WeightVerification,
    solve_truncation_weights_numeric,
    verify_truncation_weights,
)

__all__ = [
    "CoxeterDiagram",
    "Dotted",
    "EdgeKind",
    "Heavy",
    "Label",
    "NumericWeights",
    "Signature",
    "VertexLink",
    "WeightVerification",
    "chain_diagram",
    "classify_subdiagram",
    "cos_pi_over",
    "double_polyhedron",
    "double_template",
    "gram_matrix",
    "gram_matrix_float",
    "parse_diagram",
    "serialize_diagram",
    "signature",
    "solve_truncation_weights_numeric",
    "truncate_simplex",
    "truncated_gram",
    "truncation_template",
    "verify_truncation_weights",
    "vertex_kind",
    "vertex_links",
]
