"""Totally separable unit-sphere packings.

Construction of finite windows of the regular totally separable packings
generated by convex uniform tessellations in dimensions 2-4, tangent-
hyperplane certification of total separability, the separability measure,
contact-number formulas with their achieving polyomino constructions,
and the diagonal-cube family of (d+1)-regular packings.
"""

from .catalog import CatalogEntry, catalog_ids, constructible_ids, load_catalog
from .contact import (
    ContactGraph,
    RegularityVerdict,
    build_contact_graph,
    contact_count,
    contains_triangle,
    is_k_regular,
)
from .contact_numbers import (
    BoxSpec,
    Polyomino,
    box_packing,
    c2_formula,
    cd_upper_bound,
    choose_box,
    polyomino_oracle,
    quasi_square_packing,
)
from .core import (
    DEFAULT_TOL,
    Packing,
    Tolerance,
    ValidationResult,
    Window,
    interior_indices,
    min_pairwise_distance,
    rescale_to_contact,
    validate_packing,
)
from .diagonal import (
    DiagonalConstruction,
    diagonal_construction,
    interior_regularity_check,
    local_fingerprint,
    profile_complete_indices,
)
from .generators import (
    EntryCheck,
    OrbitSpec,
    check_entry_invariants,
    generate_apeirogon,
    generate_named,
    generate_triangular,
    orbit_generate,
    product_packing,
    signed_permutation_orbit,
)
from .packio import (
    build_verify_report,
    decode_packing,
    encode_packing,
    load_packing,
    save_packing,
)
from .separability import (
    SeparabilityReport,
    SepSequenceReport,
    TangentContact,
    certify_total_separability,
    plane_hits_interior,
    sep_measure_sequence,
    separability_measure,
    tangent_hyperplane,
)
from .svgfig import render_svg

__version__ = "0.1.0"

__all__ = [
    "BoxSpec",
    "CatalogEntry",
    "ContactGraph",
    "DEFAULT_TOL",
    "DiagonalConstruction",
    "EntryCheck",
    "OrbitSpec",
    "Packing",
    "Polyomino",
    "RegularityVerdict",
    "SepSequenceReport",
    "SeparabilityReport",
    "TangentContact",
    "Tolerance",
    "ValidationResult",
    "Window",
    "box_packing",
    "build_contact_graph",
    "build_verify_report",
    "c2_formula",
    "catalog_ids",
    "cd_upper_bound",
    "certify_total_separability",
    "check_entry_invariants",
    "choose_box",
    "constructible_ids",
    "contact_count",
    "contains_triangle",
    "decode_packing",
    "diagonal_construction",
    "encode_packing",
    "generate_apeirogon",
    "generate_named",
    "generate_triangular",
    "interior_indices",
    "interior_regularity_check",
    "is_k_regular",
    "load_catalog",
    "load_packing",
    "local_fingerprint",
    "min_pairwise_distance",
    "orbit_generate",
    "plane_hits_interior",
    "polyomino_oracle",
    "product_packing",
    "profile_complete_indices",
    "quasi_square_packing",
    "render_svg",
    "rescale_to_contact",
    "save_packing",
    "sep_measure_sequence",
    "separability_measure",
    "signed_permutation_orbit",
    "tangent_hyperplane",
    "validate_packing",
]
