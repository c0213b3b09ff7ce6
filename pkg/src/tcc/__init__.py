"""Twisted centralizer codes over prime fields.

Fix a square matrix A over GF(p) and a constant a; the matrices B with
AB = aBA form a linear space, and column-stacking its members yields a
linear code of length n^2.  This package constructs those codes exactly,
computes their parameters, checks the spectral facts behind them, and
simulates their behaviour on a symbol-error channel.
"""

from .linalg import (
    Felt,
    FieldMismatchError,
    GuardExceededError,
    Matrix,
    MatrixFormatError,
    Prime,
    RrefResult,
    SingularMatrixError,
    Vector,
    format_matrix_text,
    inverse,
    is_prime,
    kernel_basis,
    kronecker,
    parse_matrix_text,
    rank,
    rref,
    unvec,
    vec,
)
from .comb import (
    CombParams,
    DefectiveMatrixError,
    Diagonalization,
    Spectrum,
    all_ones_eigencheck,
    comb_matrix,
    comb_spectrum,
    diagonalize,
    eigen_scan,
    special_matrix,
)
from .centralizer import (
    CentralizerBasis,
    TwistSpec,
    brute_force_centralizer,
    centralizer_code,
    conjugation_transfer,
    is_member,
    twisted_operator,
)
from .code import (
    AMBIGUOUS,
    UNIQUE,
    CodeReport,
    DecodeResult,
    LinearCode,
    analyze,
    code_from_basis,
    decode_nearest,
    encode,
    hamming_distance,
    is_codeword,
    min_distance,
)
from .channel import (
    ChannelStats,
    exhaustive_correction_check,
    exhaustive_detection_check,
    exhaustive_stats,
    inject_errors,
    monte_carlo,
)

__version__ = "0.1.0"

__all__ = [
    "AMBIGUOUS",
    "CentralizerBasis",
    "ChannelStats",
    "CodeReport",
    "CombParams",
    "DecodeResult",
    "DefectiveMatrixError",
    "Diagonalization",
    "Felt",
    "FieldMismatchError",
    "GuardExceededError",
    "LinearCode",
    "Matrix",
    "MatrixFormatError",
    "Prime",
    "RrefResult",
    "SingularMatrixError",
    "Spectrum",
    "TwistSpec",
    "UNIQUE",
    "Vector",
    "all_ones_eigencheck",
    "analyze",
    "brute_force_centralizer",
    "centralizer_code",
    "code_from_basis",
    "comb_matrix",
    "comb_spectrum",
    "conjugation_transfer",
    "decode_nearest",
    "diagonalize",
    "eigen_scan",
    "encode",
    "exhaustive_correction_check",
    "exhaustive_detection_check",
    "exhaustive_stats",
    "format_matrix_text",
    "hamming_distance",
    "inject_errors",
    "inverse",
    "is_codeword",
    "is_member",
    "is_prime",
    "kernel_basis",
    "kronecker",
    "min_distance",
    "monte_carlo",
    "parse_matrix_text",
    "rank",
    "rref",
    "special_matrix",
    "twisted_operator",
    "unvec",
    "vec",
]
