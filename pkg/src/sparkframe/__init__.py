"""Exact and numeric construction and certification of full spark frames.

Frames are orbits of a generating vector under diagonal/shift operator
families: induced representations of Z_N x| H, or exponent families
D_lambda T^k.  A frame is full spark when every d of its vectors form a basis.
"""

__version__ = "0.1.0"
TOOL_VERSION = f"sparkframe {__version__}"

from .exactalg import Cyclotomic, CycPolynomial, ExactMatrix, det_exact, rank_exact
from .groups import (
    SemidirectGroup,
    UnitSubgroup,
    Verdict,
    deficiency_verdict,
    induced_rep,
)
from .framecore import (
    FrameMatrix,
    GeneratingVector,
    SparkCertificate,
    frame_bounds,
    full_spark_exact,
    full_spark_numeric,
    is_tight,
    orbit_frame,
)
from .criteria import (
    consecutive_minor_check,
    dft_submatrix_full_spark,
    evans_all_minors_check,
    tight_columns_check,
    uniform_distribution_check,
)
from .genfamily import ExponentFamily, Transcendental, certify_family_full_spark
from .erasure import ErasurePattern, erasure_trial, reconstruct, transmit
