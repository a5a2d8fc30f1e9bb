"""twingood: twin-unit decompositions of matrices over small finite rings.

For a square matrix M over Z/n, GF(p^k), or a product of such rings, the
constructive side finds a unit U with M+U and M-U both invertible and
packages the proof as a machine-checkable certificate.  The oracle side
decides twin-goodness, k-goodness, and unit sum numbers of small rings by
exhaustive search, so the two can be checked against each other.
"""

from .construct import (
    TwinCertificate,
    abelian_twin_unit_2x2,
    division_twin_unit,
    edr_twin_unit,
    lift_mod_radical,
    twin_decompose,
    two_sum_decompose,
    verify_twin_certificate,
)
from .errors import (
    ConstructionVerificationFailed,
    DocumentParseError,
    Error,
    ExhaustionBoundExceeded,
    FieldTooSmall,
    NotSquare,
    NotTwinGood,
    NotTwoGood,
    NotUnitRegular,
    QuotientUnsolvable,
    RingMismatch,
    RingParseError,
    ShapeMismatch,
    UnsupportedRing,
)
from .matrices import (
    DiagonalReductionCertificate,
    Matrix,
    diagonal_reduction,
    random_matrix,
)
from .oracle import (
    INFINITY,
    OMEGA,
    GoodnessReport,
    goodness_report,
    is_k_good,
    is_twin_good_ring,
    k_good_ring,
    sweep,
    twin_witness,
    unit_sum_number,
)
from .rings import (
    DEFAULT_EXHAUSTION_BOUND,
    GaloisField,
    MatrixRing,
    ProductRing,
    Ring,
    Zmod,
    elements,
    has_factor_Z2_or_Z3,
    has_factor_Z2_or_Z3_exhaustive,
    idempotents,
    jacobson_radical,
    jacobson_radical_exhaustive,
    parse_family,
    parse_ring,
    two_sided_ideals,
    unit_regular_decompose,
    units,
)
from .serialize import (
    format_certificate_doc,
    format_matrix_doc,
    format_report_doc,
    format_sweep_table,
    format_value,
    parse_certificate_doc,
    parse_matrix_doc,
    parse_value,
)

__version__ = "0.1.0"
