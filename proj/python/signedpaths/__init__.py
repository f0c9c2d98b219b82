"""Signed permutations, lattice paths, barred permutations and threshold graphs."""

from ._core import *  # noqa: F401,F403
from ._core import (
    DomainError,
    ParseError,
    PreconditionError,
    ResourceError,
    SignedPermutation,
)

__all__ = [
    "DomainError",
    "ParseError",
    "PreconditionError",
    "ResourceError",
    "SignedPermutation",
    "audit_names",
    "canonical_degree_ordering",
    "chi",
    "chi_inverse",
    "descent_count",
    "descent_set",
    "eulerian",
    "eulerian_polynomial",
    "even_representative",
    "format_sbp",
    "height_function",
    "identity_names",
    "inversion_set",
    "is_smooth",
    "is_threshold",
    "mate",
    "path_representation",
    "psi",
    "psi_inverse",
    "render_ascii",
    "render_svg",
    "run_audit",
    "sbp_from_threshold",
    "signed_from_path",
    "signed_from_tg",
    "smooth_representative",
    "tg_is_lattice",
    "tg_pair",
    "threshold_counts",
    "threshold_from_sbp",
    "verify_identity",
    "weak_order_join_irreducibles",
]
