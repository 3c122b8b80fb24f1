"""Progressive (k,n)-threshold visual secret sharing.

Basis-matrix codebooks are read off the generalized Pascal's triangle,
verified exhaustively against the security/contrast definitions, and applied
to black-and-white images with expansion-free (1 pixel -> 1 pixel) encoding.
"""

from .backend import backend_name, get_backend
from .codebook import (
    BalanceError,
    BasisMatrixPair,
    CodebookSpec,
    SchemeParams,
    assign_sides,
    build_sequence,
    codebook_for,
    column_count,
    contrast_numerator,
    default_start_row,
    expand,
    theoretical_contrast,
    weight_block,
)
from .imaging import (
    BinaryImage,
    ShareSet,
    empirical_contrast,
    encode,
    encode_with_params,
    read_pbm,
    stack,
    write_pbm,
)
from .pascal import gbinom, triangle_slice
from .validator import (
    LemmaCheck,
    ReferenceComparison,
    SubsetDiff,
    ValidationReport,
    lemma_identity_check,
    predicted_diff,
    reference_compare,
    subset_diff,
    verify_scheme,
)

__version__ = "0.1.0"

__all__ = [
    "BalanceError",
    "BasisMatrixPair",
    "BinaryImage",
    "CodebookSpec",
    "LemmaCheck",
    "ReferenceComparison",
    "SchemeParams",
    "ShareSet",
    "SubsetDiff",
    "ValidationReport",
    "assign_sides",
    "backend_name",
    "build_sequence",
    "codebook_for",
    "column_count",
    "contrast_numerator",
    "default_start_row",
    "empirical_contrast",
    "encode",
    "encode_with_params",
    "expand",
    "gbinom",
    "get_backend",
    "lemma_identity_check",
    "predicted_diff",
    "read_pbm",
    "reference_compare",
    "stack",
    "subset_diff",
    "theoretical_contrast",
    "triangle_slice",
    "verify_scheme",
    "weight_block",
    "write_pbm",
]
