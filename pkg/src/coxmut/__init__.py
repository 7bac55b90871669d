"""Mutation toolkit: diagrams, Coxeter presentations, exact geometry and
manifold invariants."""

from .exchange import (
    Diagram,
    DiagramError,
    ExchangeMatrix,
    InvalidMatrixError,
    apply_sequence,
    check_cycle_products,
    diagram_view,
    mutate,
    realize_matrix,
)
from .canonical import canonical_form, canonical_permutation
from .catalog import ComponentInfo, connected_components, finite_order, identify_component
from .mutation_class import (
    AffineType,
    ClassMember,
    FiniteType,
    MutationInfinite,
    OtherMutationFinite,
    classify_mutation_type,
    mutation_class,
)
from .presentation import (
    CoxeterMatrix,
    CycleRelator,
    CycleRelatorError,
    LabelError,
    Presentation,
    PresentationParseError,
    build_presentation,
    chordless_oriented_cycles,
    coxeter_data,
    cycle_relator,
    cycle_t_values,
    emit_presentation,
    evolve_generators,
    free_reduce,
    parse_presentation,
)
from .quadfield import QuadField
from .gram import (
    GeometricType,
    Signature,
    classify_components,
    elliptic_subsets,
    finite_subgroup_order,
    geometric_type,
    gram_matrix,
    ideal_vertex_subsets,
    is_elliptic,
    signature,
)
from .rootsystem import cartan_matrix, root_system, weyl_permutation_rep
from .permgroup import StabilizerChain, evaluate_word, subgroup_order, verify_relators
from .coset import CosetLimitExceeded, todd_coxeter
from .affine import (
    AffineRep,
    ClosureCapExceeded,
    affine_rep,
    bounded_closure_order,
    is_translation,
)
from .manifold import (
    CompanionBasis,
    CuspCensus,
    EuclideanQuotientReport,
    ManifoldReport,
    TorsionCertificate,
    WallTracking,
    companion_basis,
    count_cusps,
    custom_manifold_invariants,
    euclidean_quotient_report,
    manifold_invariants,
    orbifold_euler,
    report_to_dict,
    track_walls,
    verify_torsion_free,
    verify_torsion_free_affine,
)
from .tables import TABLE_1, TABLE_2, complete_graph_example, dynkin_matrix, run_row, run_table

__all__ = [name for name in dir() if not name.startswith("_")]
