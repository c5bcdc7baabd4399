import importlib
import logging

logging.getLogger(__name__).addHandler(logging.NullHandler())

__version__ = "0.3.0"

__all__ = [
    # Rings
    "FiniteRing",
    "validate_ring",
    "element_sets",
    "opposite_ring",
    "cyclic_ring",
    "null_ring",
    "first_row_ring",
    "full_matrix_ring",
    "direct_product",
    "quotient_ring",
    "decompose",
    "is_isomorphic",
    "enumerate_rings",
    "enumerate_order",
    "dumps_ring",
    "loads_ring",
    # Graphs
    "ZdGraph",
    "build_graph",
    "endpoint_sets",
    "distances",
    "graph_to_dot",
    # Verification
    "TheoremReport",
    "Verdict",
    "run_suite",
    # Configuration
    "LabConfig",
    # Version
    "__version__",
]

_LAZY_IMPORTS: dict[str, tuple[str, str]] = {
    "FiniteRing": (".rings", "FiniteRing"),
    "validate_ring": (".rings", "validate_ring"),
    "element_sets": (".rings", "element_sets"),
    "opposite_ring": (".rings", "opposite_ring"),
    "cyclic_ring": (".rings", "cyclic_ring"),
    "null_ring": (".rings", "null_ring"),
    "first_row_ring": (".rings", "first_row_ring"),
    "full_matrix_ring": (".rings", "full_matrix_ring"),
    "direct_product": (".rings", "direct_product"),
    "quotient_ring": (".rings", "quotient_ring"),
    "decompose": (".rings", "decompose"),
    "is_isomorphic": (".rings", "is_isomorphic"),
    "enumerate_rings": (".rings", "enumerate_rings"),
    "enumerate_order": (".rings", "enumerate_order"),
    "dumps_ring": (".rings", "dumps_ring"),
    "loads_ring": (".rings", "loads_ring"),
    "ZdGraph": (".graph", "ZdGraph"),
    "build_graph": (".graph", "build_graph"),
    "endpoint_sets": (".graph", "endpoint_sets"),
    "distances": (".graph", "distances"),
    "graph_to_dot": (".graph", "graph_to_dot"),
    "TheoremReport": (".verify", "TheoremReport"),
    "Verdict": (".verify", "Verdict"),
    "run_suite": (".verify", "run_suite"),
    "LabConfig": (".config", "LabConfig"),
}


def __getattr__(name: str):
    if name not in _LAZY_IMPORTS:
        raise AttributeError(f"module {__name__!r} has no attribute {name!r}")

    module_name, attr_name = _LAZY_IMPORTS[name]
    module = importlib.import_module(module_name, __package__)
    value = getattr(module, attr_name)
    globals()[name] = value
    return value
