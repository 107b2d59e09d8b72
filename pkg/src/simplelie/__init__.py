"""Exact-arithmetic toolkit for complex simple Lie algebras: root systems,
Chevalley structure constants, finite-order automorphisms by Kac coordinates,
symmetric-pair and orientation tables, Poincare polynomials of cohomological
representations, and rational number-field helpers."""

from .chevalley import (
    CompactBasisIndex,
    StructureConstants,
    bracket,
    compact_basis,
    compact_bracket,
    n_table_json,
    structure_constants,
    verify_structure_constants,
)
from .cohomology import (
    IntPolynomial,
    LeviSubset,
    coefficient_support,
    levi_subset,
    poincare_levi,
    poincare_simple,
    cycle_support_report,
)
from .kac import (
    AffineDiagram,
    FiniteOrderAutomorphism,
    KacCoordinates,
    LeviDescription,
    affine_diagram,
    eigenspace_dimensions,
    fixed_subalgebra,
    kac_automorphism,
    kac_coordinates,
    lift_diagram_automorphism,
    verify_fold,
)
from .numfield import (
    RationalPolynomial,
    construct_two_nonreal,
    eisenstein,
    primitive_shift,
    sturm_count,
    two_nonreal_certificate,
)
from .roots import (
    LieError,
    Root,
    RootSystem,
    SimpleType,
    build_root_system,
    cartan_pairing,
    exponents,
    root_string,
    transport_to_positive,
)
from .symspace import (
    HermitianKind,
    Involution,
    OrVerdict,
    StronglyOrthogonalSet,
    condition_or,
    emit_tables,
    hermitian_tube_classify,
    involution,
    involution_classes,
    strongly_orthogonal_set,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
