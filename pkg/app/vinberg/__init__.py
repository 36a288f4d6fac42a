from app.vinberg.ambient import (
    AmbientForm,
    admissible,
    ambient_form,
    ambient_quadratic_form,
    reflection_matrices,
    tree_scalings,
    verify_reflections,
)
from app.vinberg.classify import Classification, classify, simplex_hyperideal_facets
from app.vinberg.cyclic import (
    CyclicProductSet,
    TraceField,
    all_cyclic_products,
    cyclic_products,
    entry_field,
    trace_field,
)

__all__ = [
    "AmbientForm",
    "Classification",
    "CyclicProductSet",
    "TraceField",
    "admissible",
    "all_cyclic_products",
    "ambient_form",
    "ambient_quadratic_form",
    "classify",
    "cyclic_products",
    "entry_field",
    "reflection_matrices",
    "simplex_hyperideal_facets",
    "trace_field",
    "tree_scalings",
    "verify_reflections",
]
