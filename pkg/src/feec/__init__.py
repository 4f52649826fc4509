"""Exact-arithmetic bases and geometric decompositions for simplicial
finite element differential forms."""

from .assemble import assemble_basis, assembled_dimension, decompose, verify_direct_sum, verify_single_valued
from .combinat import IncreasingMap, MultiIndex, binom, complement, enumerate_increasing, enumerate_multiindices
from .dof import DofFunctional, build_dofs, dual_extend, integrate_top_form, pairing_matrix
from .extension import (
    ExtensionFamily,
    FamilyKind,
    VanishingOrder,
    characterization_equality,
    check_consistency,
    extend_bernstein,
    extend_full,
    extend_minus,
    vanishing_order_check,
)
from .forms import FaceRef, PolyForm, bary_monomial, canonicalize, dlambda, one, psi_form, psi_one_form, whitney
from .mesh import GlobalFace, Triangulation, load, loads
from .spaces import (
    FULL,
    FULL_ZERO,
    MINUS,
    MINUS_ZERO,
    Family,
    GeneratorDescriptor,
    SpaceKind,
    dim_space,
    enumerate_basis,
    enumerate_spanning,
    membership,
    rank_of,
    realize,
)

__all__ = [
    "IncreasingMap",
    "MultiIndex",
    "binom",
    "complement",
    "enumerate_increasing",
    "enumerate_multiindices",
    "FaceRef",
    "PolyForm",
    "bary_monomial",
    "canonicalize",
    "dlambda",
    "one",
    "psi_form",
    "psi_one_form",
    "whitney",
    "FULL",
    "FULL_ZERO",
    "MINUS",
    "MINUS_ZERO",
    "Family",
    "GeneratorDescriptor",
    "SpaceKind",
    "dim_space",
    "enumerate_basis",
    "enumerate_spanning",
    "membership",
    "rank_of",
    "realize",
    "ExtensionFamily",
    "FamilyKind",
    "VanishingOrder",
    "characterization_equality",
    "check_consistency",
    "extend_bernstein",
    "extend_full",
    "extend_minus",
    "vanishing_order_check",
    "GlobalFace",
    "Triangulation",
    "load",
    "loads",
    "assemble_basis",
    "assembled_dimension",
    "decompose",
    "verify_direct_sum",
    "verify_single_valued",
    "DofFunctional",
    "build_dofs",
    "dual_extend",
    "integrate_top_form",
    "pairing_matrix",
]
