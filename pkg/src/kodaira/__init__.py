"""Kodaira curves: combinatorial models, invariants, partner checks."""

from .catalog import (
    KodairaType,
    Subclass,
    TypeSpecError,
    build,
    catalog_types,
    classify,
    parse_type,
    subclass_of,
)
from .curves import (
    Component,
    ConfigurationError,
    CurveConfiguration,
    IntersectionMatrix,
    IntrinsicType,
    LocalType,
    SingularPoint,
    divisor_square,
    fiber_obstruction,
    gcd_multiplicity,
    intersection_matrix,
    is_fiber_like,
    radical_basis,
    reduce,
)
from .document import DocumentError, parse_document, serialize_document
from .graphs import Multigraph, bipartite_graph, dual_graph, first_betti, loop_rank
from .invariants import (
    DsgStatus,
    FreeAbelianGroup,
    InvariantProfile,
    K0Shape,
    PicardDescriptor,
    SingularitySummary,
    arithmetic_genus,
    dsg_status,
    euler_characteristic,
    grothendieck_group,
    invariant_profile,
    is_k_minus_one_regular,
    is_smooth,
    k0_shape,
    negative_k,
    picard_descriptor,
    singularity_summary,
)
from .partner import PartnerVerdict, VerdictKind, Witness, compare, partner_matrix

__all__ = [
    "Component",
    "ConfigurationError",
    "CurveConfiguration",
    "DocumentError",
    "DsgStatus",
    "FreeAbelianGroup",
    "IntersectionMatrix",
    "IntrinsicType",
    "InvariantProfile",
    "K0Shape",
    "KodairaType",
    "LocalType",
    "Multigraph",
    "PartnerVerdict",
    "PicardDescriptor",
    "SingularPoint",
    "SingularitySummary",
    "Subclass",
    "TypeSpecError",
    "VerdictKind",
    "Witness",
    "arithmetic_genus",
    "bipartite_graph",
    "build",
    "catalog_types",
    "classify",
    "compare",
    "divisor_square",
    "dsg_status",
    "dual_graph",
    "euler_characteristic",
    "fiber_obstruction",
    "first_betti",
    "gcd_multiplicity",
    "grothendieck_group",
    "intersection_matrix",
    "invariant_profile",
    "is_fiber_like",
    "is_k_minus_one_regular",
    "is_smooth",
    "k0_shape",
    "loop_rank",
    "negative_k",
    "parse_document",
    "parse_type",
    "partner_matrix",
    "picard_descriptor",
    "radical_basis",
    "reduce",
    "serialize_document",
    "singularity_summary",
    "subclass_of",
]
