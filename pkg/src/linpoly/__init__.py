"""Fast arithmetic with linearized and skew polynomials, and Gabidulin codes built on it."""

from .counting import OpCounter
from .errors import *  # noqa: F401,F403
from .fastmul import MatBackend, count_field_ops, sp_mul_fast, use_backend
from .field import GF, make_field
from .gabidulin import (
    DecodeResult,
    ErasureInfo,
    GabidulinCode,
    channel,
    decode_error_erasure,
    decode_errors,
    encode,
    expand,
    rank_of_word,
)
from .interp import check_interpolation, interpolate
from .leea import right_leea
from .matiso import MatrixIso, mulmod_fragmented, mulmod_matrix, phi, phi_inv
from .qtransform import QTContext, qt_forward, qt_inverse
from .skewpoly import SkewPoly, evaluate, frobenius_modulus, ldiv, mod_right, mul_naive, q_reverse, rdiv
from .subspace import mpe, mpe_general, msp
