"""Canonical pretrees and trees from admissible families of vertex cuts."""

from .actions import Automorphism, induce, system_automorphisms, verify_equivariance
from .blobs import (Blob, Cut, Kind, PretreeElement, inseparable, is_inseparable_set,
                    maximal_inseparable_sets, pretree_elements, quotient_blobs)
from .cuts import AxiomReport, CutSystem, articulation_cuts, filter_admissible, validate
from .errors import (AxiomViolation, ConsistencyError, CutPretreeError, InputError,
                     PreconditionError, ResourceError)
from .pretree import (Interval, Pretree, adjacent, between, interval, median,
                      preseparability_witness, supremum, verify_pretree_axioms)
from .space import (Separation, Space, VertexSet, components, refine_separations,
                    separates, separates_from, separates_set, separation_between)
from .tree import SimplicialTree, export, realize, tree_path

__version__ = "0.1.0"
