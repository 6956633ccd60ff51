"""Schatten p-norms, dual exponents, extremal witnesses, and norm inequalities.

Exponents are floats in [1, inf].  Infinity is ``math.inf`` and is always an
explicit branch (the operator norm is the top singular value, never a large-p
approximation).  The serialized form of an exponent is either the string
``"inf"`` or a decimal number >= 1.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import InvalidExponentError, InvalidInputError
from .linalg import as_matrix, inner

# Singular values below this floor are dropped for exponents close to 1, where
# raising denormal noise to the power p and summing can pollute the result.
_UNDERFLOW_FLOOR = 1e-300


def require_exponent(p) -> float:
    """Validate a Schatten exponent and return it as a float."""
    try:
        p = float(p)
    except (TypeError, ValueError) as exc:
        raise InvalidExponentError(f"exponent must be a number or inf: {exc}") from exc
    if math.isnan(p) or p < 1.0:
        raise InvalidExponentError(f"exponent must satisfy 1 <= p <= inf, got {p}")
    return p


def dual_exponent(p) -> float:
    """The exponent p* with 1/p + 1/p* = 1; maps 1 <-> inf and fixes 2."""
    p = require_exponent(p)
    if p == 1.0:
        return math.inf
    if math.isinf(p):
        return 1.0
    return p / (p - 1.0)


def parse_exponent(text: str) -> float:
    """Parse the serialized exponent form: ``"inf"`` or a decimal >= 1."""
    if not isinstance(text, str):
        raise InvalidExponentError(f"expected an exponent string, got {type(text).__name__}")
    stripped = text.strip()
    if stripped == "inf":
        return math.inf
    try:
        value = float(stripped)
    except ValueError as exc:
        raise InvalidExponentError(f"cannot parse exponent {text!r}") from exc
    if math.isinf(value) or math.isnan(value):
        raise InvalidExponentError('infinity must be spelled "inf"')
    return require_exponent(value)


def format_exponent(p) -> str:
    """Inverse of :func:`parse_exponent`."""
    p = require_exponent(p)
    return "inf" if math.isinf(p) else repr(p)


def singular_values(X) -> np.ndarray:
    """Singular values of ``X`` in non-increasing order."""
    return np.linalg.svd(as_matrix(X), compute_uv=False)


def pnorm(values, p, axis: int = -1):
    """p-norm of a (possibly batched) spectrum along ``axis``.

    Scales by the peak entry before powering so large exponents neither
    overflow nor underflow.
    """
    p = require_exponent(p)
    a = np.abs(np.asarray(values, dtype=float))
    if math.isinf(p):
        return a.max(axis=axis)
    if p < 1.0001:
        a = np.where(a < _UNDERFLOW_FLOOR, 0.0, a)
    if p == 1.0:
        return a.sum(axis=axis)
    peak = a.max(axis=axis, keepdims=True)
    safe = np.where(peak > 0.0, peak, 1.0)
    out = ((a / safe) ** p).sum(axis=axis) ** (1.0 / p) * np.squeeze(safe, axis=axis)
    return out


def schatten_norm(X, p) -> float:
    """Schatten p-norm: the p-norm of the singular value spectrum."""
    return float(pnorm(singular_values(X), p))


def holder_weights(values, ball_exponent) -> np.ndarray:
    """Unit-q-norm weights maximizing ``sum(values * w)`` for q = ball_exponent.

    ``values`` may be signed (eigenvalue spectra are allowed); the optimum is
    ``||values||_{q*}``.  q = 1 puts all weight on the largest magnitude
    (first index on ties), q = inf weights every nonzero entry by its sign,
    and finite q > 1 uses magnitudes to the power 1/(q-1).  Rows that are
    entirely zero come back as zero weights.  Operates on the last axis.
    """
    q = require_exponent(ball_exponent)
    v = np.asarray(values, dtype=float)
    a = np.abs(v)
    sign = np.sign(v)
    if q == 1.0:
        idx = a.argmax(axis=-1)[..., None]
        top = np.take_along_axis(sign, idx, axis=-1)
        w = np.zeros_like(v)
        np.put_along_axis(w, idx, top, axis=-1)
        return w
    if math.isinf(q):
        return sign
    peak = a.max(axis=-1, keepdims=True)
    scaled = np.divide(a, peak, out=np.zeros_like(a), where=peak > 0.0)
    w = sign * scaled ** (1.0 / (q - 1.0))
    denom = (np.abs(w) ** q).sum(axis=-1, keepdims=True) ** (1.0 / q)
    return np.divide(w, denom, out=np.zeros_like(w), where=denom > 0.0)


def duality_witness(X, p) -> np.ndarray:
    """A matrix Y with ``||Y||_{p*} = 1`` and ``<Y, X> = ||X||_p``.

    Built from the SVD of ``X``: same singular vectors, values proportional
    to ``s_i**(p-1)``.  The p = 1 limit weights the whole nonzero spectrum
    flatly, the p = inf limit keeps only the top singular pair.
    """
    p = require_exponent(p)
    A = as_matrix(X)
    U, s, Vh = np.linalg.svd(A, full_matrices=False)
    if s[0] <= 0.0:
        raise InvalidInputError("duality witness is undefined for the zero matrix")
    w = holder_weights(s, dual_exponent(p))
    return (U * w) @ Vh


def block_norm_bounds(X, block_rows: int, block_cols: int, p) -> tuple[float, float]:
    """The pair ``(sum_ij ||X_ij||_p^2, ||X||_p^2)`` for an even block partition.

    ``block_rows`` and ``block_cols`` count blocks per side; the matrix must
    split evenly.  For p <= 2 the first entry is at most the second, for
    p >= 2 the order reverses (with equality at p = 2).
    """
    A = as_matrix(X)
    p = require_exponent(p)
    block_rows = int(block_rows)
    block_cols = int(block_cols)
    if block_rows < 1 or block_cols < 1:
        raise InvalidInputError("block counts must be positive")
    rows, cols = A.shape
    if rows % block_rows or cols % block_cols:
        raise InvalidInputError(
            f"matrix of shape {A.shape} does not partition into {block_rows}x{block_cols} blocks"
        )
    h = rows // block_rows
    w = cols // block_cols
    blocks_sq = 0.0
    for i in range(block_rows):
        for j in range(block_cols):
            blk = A[i * h : (i + 1) * h, j * w : (j + 1) * w]
            blocks_sq += schatten_norm(blk, p) ** 2
    return float(blocks_sq), float(schatten_norm(A, p) ** 2)


def hoelder_gap(X, Y, p) -> float:
    """``||X||_p ||Y||_{p*} - |<X, Y>|``; non-negative up to roundoff."""
    p = require_exponent(p)
    A = as_matrix(X)
    B = as_matrix(Y)
    if A.shape != B.shape:
        raise InvalidInputError(f"hoelder_gap needs equal shapes, got {A.shape} and {B.shape}")
    return float(schatten_norm(A, p) * schatten_norm(B, dual_exponent(p)) - abs(inner(A, B)))
