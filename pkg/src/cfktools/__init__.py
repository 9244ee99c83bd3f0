"""Staircase knot complexes over GF(2) and their concordance invariants."""

from .errors import (
    CFKError,
    IllegalBasisChange,
    InadmissiblePlan,
    InvalidParameter,
    InvalidTorusParameters,
    NoTermination,
    NotAKnotComplex,
    NotLSpaceForm,
)
from .laurent import LaurentPoly, alexander_torus, semigroup_elements, symmetry_check
from .staircase import (
    Staircase,
    Vertex,
    alexander_of_staircase,
    d1_closed_form,
    delta_whitehead,
    staircase_from_alexander,
    tau,
    tensor_vertex_multiset,
    vertices,
)
from .filtered import (
    Arrow,
    BasisChange,
    FilteredComplex,
    Generator,
    basis_change,
    complex_from_json_dict,
    disjoint_union,
    from_staircase,
    isomorphic_up_to_shift,
    remove_diagonals,
    split_summands,
    tensor,
    to_json_dict,
    validate,
)
from .homology import (
    AcyclicityReport,
    Cycle,
    d1_general,
    hat_generator,
    hat_homology_ranks,
    is_acyclic,
    solve_gf2,
)
from .doubles import (
    ClassificationReport,
    SplittingReport,
    build_double_complex,
    classify_iterates,
    delta_double_double,
    hfk_hat_double,
    splitting_plan,
    verify_splitting,
)

__version__ = "0.1.0"

__all__ = [
    "CFKError",
    "IllegalBasisChange",
    "InadmissiblePlan",
    "InvalidParameter",
    "InvalidTorusParameters",
    "NoTermination",
    "NotAKnotComplex",
    "NotLSpaceForm",
    "LaurentPoly",
    "alexander_torus",
    "semigroup_elements",
    "symmetry_check",
    "Staircase",
    "Vertex",
    "alexander_of_staircase",
    "d1_closed_form",
    "delta_whitehead",
    "staircase_from_alexander",
    "tau",
    "tensor_vertex_multiset",
    "vertices",
    "Arrow",
    "BasisChange",
    "FilteredComplex",
    "Generator",
    "basis_change",
    "complex_from_json_dict",
    "disjoint_union",
    "from_staircase",
    "isomorphic_up_to_shift",
    "remove_diagonals",
    "split_summands",
    "tensor",
    "to_json_dict",
    "validate",
    "AcyclicityReport",
    "Cycle",
    "d1_general",
    "hat_generator",
    "hat_homology_ranks",
    "is_acyclic",
    "solve_gf2",
    "ClassificationReport",
    "SplittingReport",
    "build_double_complex",
    "classify_iterates",
    "delta_double_double",
    "hfk_hat_double",
    "splitting_plan",
    "verify_splitting",
]
