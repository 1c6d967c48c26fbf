"""Exact ground truth: vertex graphs of small polytopes and dual graphs of complexes."""

from . import kernels
from .complex import (
    ComplexPredicates,
    PureComplex,
    complex_predicates,
    cross_polytope_boundary,
    cycle,
    dual_diameter,
    octahedron_boundary,
    simplex_boundary,
)
from .crosscheck import cross_check, instance_parameters
from .fixtures import complex_corpus, polytope_corpus, random_polytope, random_polytopes, write_corpus
from .formats import format_complex, format_hrep, load, parse_complex, parse_hrep
from .polytope import (
    MAX_DIM,
    MAX_HALFSPACES,
    HPolytope,
    VertexRecord,
    cross_polytope,
    cube,
    enumerate_vertices,
    polytope_diameter,
    prism,
    simplex,
)

__all__ = [
    "MAX_DIM", "MAX_HALFSPACES", "ComplexPredicates", "HPolytope", "PureComplex",
    "VertexRecord", "complex_corpus", "complex_predicates", "cross_check",
    "cross_polytope", "cross_polytope_boundary", "cube", "cycle", "dual_diameter",
    "enumerate_vertices", "format_complex", "format_hrep", "instance_parameters",
    "kernels", "load", "octahedron_boundary", "parse_complex", "parse_hrep",
    "polytope_corpus", "polytope_diameter", "prism", "random_polytope",
    "random_polytopes", "simplex", "simplex_boundary", "write_corpus",
]
