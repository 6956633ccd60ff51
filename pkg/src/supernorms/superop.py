"""Super-operators in generalized Kraus form.

A :class:`SuperOp` holds two equal-length lists of dim_out x dim_in matrices
and acts as ``Phi(X) = sum_i A_i X B_i^*``.  Maps given in completely positive
form use a single list (``B_i = A_i``).  Instances are immutable; the stored
stacks are read-only arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .linalg import as_matrix


def _as_kraus_stack(mats, what: str) -> np.ndarray:
    if isinstance(mats, np.ndarray) and mats.ndim == 3:
        arr = np.array(mats, dtype=np.complex128)
        if arr.shape[0] == 0:
            raise InvalidInputError(f"{what} needs at least one Kraus term")
        if not np.isfinite(arr).all():
            raise InvalidInputError(f"{what} entries must be finite")
        return arr
    try:
        mats = list(mats)
    except TypeError as exc:
        raise InvalidInputError(f"{what} must be a sequence of matrices") from exc
    if not mats:
        raise InvalidInputError(f"{what} needs at least one Kraus term")
    stack = [as_matrix(m) for m in mats]
    shape = stack[0].shape
    for m in stack[1:]:
        if m.shape != shape:
            raise InvalidInputError(f"{what} matrices must share one shape, got {shape} and {m.shape}")
    return np.stack(stack)


@dataclass(frozen=True)
class SuperOp:
    """Generalized Kraus representation ``X -> sum_i A_i X B_i^*``.

    ``kraus_left`` and ``kraus_right`` are (n_terms, dim_out, dim_in) stacks.
    """

    kraus_left: np.ndarray
    kraus_right: np.ndarray

    def __post_init__(self):
        left = _as_kraus_stack(self.kraus_left, "kraus_left")
        right = _as_kraus_stack(self.kraus_right, "kraus_right")
        if left.shape != right.shape:
            raise InvalidInputError(
                f"kraus lists must match in length and shape, got {left.shape} and {right.shape}"
            )
        left.setflags(write=False)
        right.setflags(write=False)
        object.__setattr__(self, "kraus_left", left)
        object.__setattr__(self, "kraus_right", right)

    @classmethod
    def from_kraus(cls, left, right=None) -> "SuperOp":
        """Build from Kraus lists; omitting ``right`` gives the CP form B_i = A_i."""
        left = _as_kraus_stack(left, "kraus_left")
        return cls(left, left if right is None else right)

    @property
    def n_terms(self) -> int:
        return self.kraus_left.shape[0]

    @property
    def dim_out(self) -> int:
        return self.kraus_left.shape[1]

    @property
    def dim_in(self) -> int:
        return self.kraus_left.shape[2]

    @property
    def cp_form(self) -> bool:
        """True when the two lists are entrywise equal (map stored in CP form)."""
        return bool(np.array_equal(self.kraus_left, self.kraus_right))


def identity_superop(dim: int) -> SuperOp:
    """The identity map on dim x dim matrices."""
    if int(dim) < 1:
        raise InvalidInputError("dimension must be positive")
    eye = np.eye(int(dim), dtype=np.complex128)[None, :, :]
    return SuperOp.from_kraus(eye)


def apply(phi: SuperOp, X) -> np.ndarray:
    """Evaluate ``Phi(X) = sum_i A_i X B_i^*``."""
    A = as_matrix(X)
    if A.shape != (phi.dim_in, phi.dim_in):
        raise InvalidInputError(
            f"input must be {phi.dim_in}x{phi.dim_in}, got {A.shape}"
        )
    T = phi.kraus_left @ A
    return np.einsum("kab,kcb->ac", T, phi.kraus_right.conj())


def adjoint_apply(phi: SuperOp, Y) -> np.ndarray:
    """Evaluate the trace-inner-product adjoint ``Phi^*(Y) = sum_i A_i^* Y B_i``."""
    A = as_matrix(Y)
    if A.shape != (phi.dim_out, phi.dim_out):
        raise InvalidInputError(
            f"adjoint input must be {phi.dim_out}x{phi.dim_out}, got {A.shape}"
        )
    T = phi.kraus_left.conj().transpose(0, 2, 1) @ A
    return np.einsum("kab,kbc->ac", T, phi.kraus_right)


def tensor_identity(phi: SuperOp, ancilla_dim: int) -> SuperOp:
    """The map ``Phi (x) Id`` on the enlarged space, ancilla as the fast index."""
    k = int(ancilla_dim)
    if k < 1:
        raise InvalidInputError("ancilla dimension must be at least 1")
    eye = np.eye(k, dtype=np.complex128)
    left = np.stack([np.kron(m, eye) for m in phi.kraus_left])
    right = np.stack([np.kron(m, eye) for m in phi.kraus_right])
    return SuperOp(left, right)


def left_cp_map(phi: SuperOp) -> SuperOp:
    """The CP map built from the left Kraus list alone: ``X -> sum_i A_i X A_i^*``."""
    return SuperOp(phi.kraus_left, phi.kraus_left)


def right_cp_map(phi: SuperOp) -> SuperOp:
    """The CP map built from the right Kraus list alone: ``X -> sum_i B_i X B_i^*``."""
    return SuperOp(phi.kraus_right, phi.kraus_right)


def choi_matrix(phi: SuperOp) -> np.ndarray:
    """Block operator whose (i, j) block is ``Phi(|i><j|)``."""
    n = phi.dim_in
    m = phi.dim_out
    C = np.einsum("kai,kbj->iajb", phi.kraus_left, phi.kraus_right.conj())
    return C.reshape(n * m, n * m)


def is_completely_positive(phi: SuperOp, tol: float = 1e-9) -> bool:
    """True iff the Choi block operator is Hermitian and PSD within ``tol``."""
    C = choi_matrix(phi)
    if np.linalg.norm(C - C.conj().T, 2) > tol:
        return False
    lam = np.linalg.eigvalsh((C + C.conj().T) / 2)
    return bool(lam.min() >= -tol)


def is_trace_preserving(phi: SuperOp, tol: float = 1e-9) -> bool:
    """True iff ``sum_i B_i^* A_i = I`` within ``tol`` in operator norm."""
    M = np.einsum("kba,kbc->ac", phi.kraus_right.conj(), phi.kraus_left)
    return bool(np.linalg.norm(M - np.eye(phi.dim_in), 2) <= tol)


def difference(phi0: SuperOp, phi1: SuperOp) -> SuperOp:
    """The map ``phi0 - phi1`` as one generalized Kraus representation."""
    if (phi0.dim_in, phi0.dim_out) != (phi1.dim_in, phi1.dim_out):
        raise InvalidInputError("difference requires matching dimensions")
    left = np.concatenate([phi0.kraus_left, phi1.kraus_left])
    right = np.concatenate([phi0.kraus_right, -phi1.kraus_right])
    return SuperOp(left, right)


def remix(phi: SuperOp, mixer) -> SuperOp:
    """Re-express the same map through different Kraus lists.

    For an invertible n_terms x n_terms matrix M, the left list is recombined
    by M and the right list by the inverse adjoint of M, which leaves the
    action of the map unchanged while changing :func:`left_cp_map` and
    :func:`right_cp_map`.
    """
    M = as_matrix(mixer)
    if M.shape != (phi.n_terms, phi.n_terms):
        raise InvalidInputError(
            f"mixer must be {phi.n_terms}x{phi.n_terms}, got {M.shape}"
        )
    try:
        inv = np.linalg.inv(M)
    except np.linalg.LinAlgError as exc:
        raise InvalidInputError("mixer must be invertible") from exc
    left = np.einsum("ji,iab->jab", M, phi.kraus_left)
    right = np.einsum("ji,iab->jab", inv.conj().T, phi.kraus_right)
    return SuperOp(left, right)
