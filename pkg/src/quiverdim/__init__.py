"""Exact homological invariants of bound quiver and poset incidence algebras."""

from .algebra import (BoundQuiverAlgebra, Poset, Quiver, Relation, bound_quiver_algebra, connected_components,
                      incidence_algebra, opposite, poset_from_covers, poset_product)
from .exceptions import (InputError, NotAdmissibleError, ParseError, QuiverDimError, ResourceCeilingError,
                         UndeterminedError)
from .graph import (IndecGraph, diameter, enumerate_indecomposables, epsilon_reachable, find_epsilon_certificate,
                    hom_graph, sincere_certificate)
from .homology import ext_dim, gldim, injd, minimal_resolution, projd
from .linalg import GF, QQ, Field, Matrix, nullspace_basis, rref, solve
from .reps import (Representation, are_isomorphic, constant_diagram, fitting_decompose, hom_basis, hom_dim,
                   injective_at, is_indecomposable, is_sincere, projective_at, simple_at)
from .verdict import AnalyzeOptions, BoundReport, analyze, analyze_components

__version__ = "0.1.0"
