"""Exact workbench for Fock-Goncharov quantum cluster algebras."""

from .builders import DiskSeed, TriangleQuiver, build_disk_seed, build_triangle
from .qtorus import TorusElement, frozen_weight, is_casimir, is_global_monomial
from .quiver import IceQuiver, Vertex, amalgamate, mutate_quiver, quiver_equal_upto
from .rootdata import cartan_data, longest_word, star_involution, validate_reduced_word
from .scalars import Scalar
from .transport import MutationPath, QuotientTorus, divide_right, mutation_images, transport
from .tropical import LusztigDatum, TropicalPoint, count_F0_dim, trop_eval, trop_mutate
from .uq import KappaContext, UqExpression, braid_T, pbw_elements, relation_suite

__version__ = "0.1.0"

__all__ = [
    "DiskSeed",
    "IceQuiver",
    "KappaContext",
    "LusztigDatum",
    "MutationPath",
    "QuotientTorus",
    "Scalar",
    "TorusElement",
    "TriangleQuiver",
    "TropicalPoint",
    "UqExpression",
    "Vertex",
    "amalgamate",
    "braid_T",
    "build_disk_seed",
    "build_triangle",
    "cartan_data",
    "count_F0_dim",
    "divide_right",
    "frozen_weight",
    "is_casimir",
    "is_global_monomial",
    "longest_word",
    "mutate_quiver",
    "mutation_images",
    "pbw_elements",
    "quiver_equal_upto",
    "relation_suite",
    "star_involution",
    "transport",
    "trop_eval",
    "trop_mutate",
    "validate_reduced_word",
]
