"""Induced super-operator norms via multi-restart alternating ascent.

The target quantity sup { ||Phi(X)||_p : ||X||_q = 1 } is treated as the
bilinear form Re<Y, Phi(X)> maximized jointly over the unit p*-ball in Y and
the unit q-ball in X.  Each partial maximization has a closed form (a Hoelder
witness read off a singular value or eigenvalue decomposition), so the
optimizer alternates the two exact half-steps.  The objective value never
decreases along the iteration, every iterate is feasible, and the reported
value is therefore a certified lower bound whatever the convergence status.

All restarts advance together as one stacked array; a restart drops out of
the stack once its gain or step falls under the configured tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import InvalidInputError, PreconditionError, UnsupportedInstanceError
from .schatten import dual_exponent, format_exponent, holder_weights, pnorm, require_exponent
from .superop import (
    SuperOp,
    apply,
    is_completely_positive,
    left_cp_map,
    remix,
    right_cp_map,
    tensor_identity,
)

# grid points evaluated per vectorized sweep of the brute-force oracle
_ORACLE_CHUNK = 1 << 18

_CONSTRAINTS = ("full", "hermitian", "psd")


@dataclass(frozen=True)
class NormQuery:
    """Which norm to compute: ``||Phi (x) I_k||_{q -> p}``, optionally over
    Hermitian inputs only.  ``stabilize_dim = 0`` means no ancilla."""

    q: float
    p: float
    hermitian_restricted: bool = False
    stabilize_dim: int = 0

    def __post_init__(self):
        object.__setattr__(self, "q", require_exponent(self.q))
        object.__setattr__(self, "p", require_exponent(self.p))
        object.__setattr__(self, "hermitian_restricted", bool(self.hermitian_restricted))
        k = int(self.stabilize_dim)
        if k < 0:
            raise InvalidInputError(f"stabilize_dim must be >= 0, got {k}")
        object.__setattr__(self, "stabilize_dim", k)


@dataclass(frozen=True)
class OptimizerConfig:
    restarts: int = 32
    max_iterations: int = 5000
    step_tolerance: float = 1e-9
    objective_tolerance: float = 1e-10
    seed: int = 42

    def __post_init__(self):
        object.__setattr__(self, "restarts", int(self.restarts))
        object.__setattr__(self, "max_iterations", int(self.max_iterations))
        object.__setattr__(self, "step_tolerance", float(self.step_tolerance))
        object.__setattr__(self, "objective_tolerance", float(self.objective_tolerance))
        object.__setattr__(self, "seed", int(self.seed))
        if self.restarts < 1:
            raise InvalidInputError("restarts must be >= 1")
        if self.max_iterations < 1:
            raise InvalidInputError("max_iterations must be >= 1")
        if not (self.step_tolerance > 0.0 and self.objective_tolerance > 0.0):
            raise InvalidInputError("tolerances must be positive")


@dataclass(frozen=True)
class NormEstimate:
    """Outcome of one optimization.

    ``value`` is recomputed from ``achiever`` after post-processing, so
    re-evaluating the achiever reproduces it exactly; the achiever has unit
    q-norm and is Hermitian when the query was Hermitian-restricted.
    ``best_restart`` is the lowest restart index attaining the maximum.
    """

    value: float
    achiever: np.ndarray
    restarts_used: int
    best_restart: int
    converged: bool

    def __post_init__(self):
        self.achiever.setflags(write=False)


def _apply_batch(left: np.ndarray, right: np.ndarray, X: np.ndarray) -> np.ndarray:
    # X: (r, din, din) -> (r, dout, dout)
    out = None
    for k in range(left.shape[0]):
        term = (left[k] @ X) @ right[k].conj().T
        out = term if out is None else out + term
    return out


def _adjoint_batch(left: np.ndarray, right: np.ndarray, Y: np.ndarray) -> np.ndarray:
    # Y: (r, dout, dout) -> (r, din, din), the adjoint wrt tr(Y* .)
    out = None
    for k in range(left.shape[0]):
        term = (left[k].conj().T @ Y) @ right[k]
        out = term if out is None else out + term
    return out


def _frobenius(X: np.ndarray) -> np.ndarray:
    return np.sqrt(np.einsum("rab,rab->r", X, X.conj()).real)


def _ball_witness(Z: np.ndarray, q: float, constraint: str) -> np.ndarray:
    """Batched maximizer of Re<Z, X> over the unit q-ball of the given set.

    ``full`` uses the singular triplet of Z, ``hermitian`` the eigensystem of
    its Hermitian part, ``psd`` additionally clamps the spectrum (falling
    back to the top eigendirection when nothing positive remains).
    """
    if constraint == "full":
        U, s, Vh = np.linalg.svd(Z)
        w = holder_weights(s, q)
        return (U * w[..., None, :]) @ Vh
    H = (Z + Z.conj().transpose(0, 2, 1)) / 2.0
    lam, V = np.linalg.eigh(H)
    if constraint == "psd":
        lam = np.maximum(lam, 0.0)
        dead = lam[..., -1] <= 0.0
        if np.any(dead):
            lam[dead, -1] = 1.0
    w = holder_weights(lam, q)
    return (V * w[..., None, :]) @ V.conj().transpose(0, 2, 1)


def _unit_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return z / np.linalg.norm(z)


def _start_stack(n: int, q: float, constraint: str, cfg: OptimizerConfig, split) -> np.ndarray:
    """Initial iterates: deterministic structured guesses in the first slots
    (maximally entangled projector when an ancilla split is known, normalized
    identity, uniform-superposition projector), Gaussian draws after that."""
    starts = np.zeros((cfg.restarts, n, n), dtype=np.complex128)
    hints = []
    if split is not None:
        base, anc = split
        m = min(base, anc)
        omega = np.zeros(n, dtype=np.complex128)
        omega[[i * anc + i for i in range(m)]] = 1.0 / math.sqrt(m)
        hints.append(np.outer(omega, omega.conj()))
    hints.append(np.eye(n, dtype=np.complex128) / pnorm(np.ones(n), q))
    u = np.full(n, 1.0 / math.sqrt(n), dtype=np.complex128)
    hints.append(np.outer(u, u.conj()))
    n_hints = min(len(hints), cfg.restarts)
    for i in range(n_hints):
        starts[i] = hints[i]
    streams = np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)
    for r in range(n_hints, cfg.restarts):
        rng = np.random.default_rng(streams[r])
        if q == 1.0:
            u = _unit_vector(rng, n)
            v = u if constraint in ("hermitian", "psd") else _unit_vector(rng, n)
            starts[r] = np.outer(u, v.conj())
            continue
        G = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        if constraint == "hermitian":
            G = (G + G.conj().T) / 2.0
        elif constraint == "psd":
            G = G.conj().T @ G
        starts[r] = G / pnorm(np.linalg.svd(G, compute_uv=False), q)
    return starts


def _ascend(phi: SuperOp, q: float, p: float, constraint: str, cfg: OptimizerConfig, split):
    left = phi.kraus_left
    right = phi.kraus_right
    n = phi.dim_in
    p_dual = dual_exponent(p)
    X = _start_stack(n, q, constraint, cfg, split)
    values = np.full(cfg.restarts, -np.inf)
    converged = np.zeros(cfg.restarts, dtype=bool)
    active = np.arange(cfg.restarts)
    for _ in range(cfg.max_iterations):
        Xa = X[active]
        U, s, Vh = np.linalg.svd(_apply_batch(left, right, Xa))
        vals = pnorm(s, p, axis=-1)
        gain = vals - values[active]
        values[active] = vals
        wy = holder_weights(s, p_dual)
        Y = (U * wy[..., None, :]) @ Vh
        Xn = _ball_witness(_adjoint_batch(left, right, Y), q, constraint)
        stalled = _frobenius(Xn) <= 1e-14
        if np.any(stalled):
            Xn[stalled] = Xa[stalled]
        step = _frobenius(Xn - Xa)
        X[active] = Xn
        done = (np.abs(gain) <= cfg.objective_tolerance * (1.0 + np.abs(vals))) | (
            step <= cfg.step_tolerance
        )
        if np.any(done):
            converged[active[done]] = True
            active = active[~done]
            if active.size == 0:
                break
    final = pnorm(np.linalg.svd(_apply_batch(left, right, X), compute_uv=False), p, axis=-1)
    best = int(np.argmax(final))
    return X[best], best, bool(converged[best])


def _polish_achiever(X: np.ndarray, q: float, constraint: str) -> np.ndarray:
    A = np.array(X, dtype=np.complex128)
    if constraint in ("hermitian", "psd"):
        A = (A + A.conj().T) / 2.0
    if constraint == "psd":
        lam, V = np.linalg.eigh(A)
        A = (V * np.maximum(lam, 0.0)) @ V.conj().T
    elif constraint == "hermitian" and A.trace().real < 0.0:
        A = -A
    nrm = float(pnorm(np.linalg.svd(A, compute_uv=False), q))
    if nrm <= 0.0:
        A = np.zeros_like(A)
        A[0, 0] = 1.0
        nrm = 1.0
    return A / nrm


def _estimate(phi_eff: SuperOp, q: float, p: float, constraint: str, cfg: OptimizerConfig, split) -> NormEstimate:
    if constraint not in _CONSTRAINTS:
        raise InvalidInputError(f"unknown constraint {constraint!r}")
    Xbest, best, conv = _ascend(phi_eff, q, p, constraint, cfg, split)
    achiever = _polish_achiever(Xbest, q, constraint)
    value = float(pnorm(np.linalg.svd(apply(phi_eff, achiever), compute_uv=False), p))
    return NormEstimate(
        value=value,
        achiever=achiever,
        restarts_used=cfg.restarts,
        best_restart=best,
        converged=conv,
    )


def _effective(phi: SuperOp, stabilize_dim: int):
    if stabilize_dim > 0:
        split = (phi.dim_in, stabilize_dim) if stabilize_dim >= 2 else None
        return tensor_identity(phi, stabilize_dim), split
    return phi, None


def norm_q_to_p(phi: SuperOp, query: NormQuery, config: OptimizerConfig | None = None) -> NormEstimate:
    """Best lower bound on the queried induced norm over ``restarts`` runs."""
    cfg = config if config is not None else OptimizerConfig()
    phi_eff, split = _effective(phi, query.stabilize_dim)
    constraint = "hermitian" if query.hermitian_restricted else "full"
    return _estimate(phi_eff, query.q, query.p, constraint, cfg, split)


def norm_1_to_p(
    phi: SuperOp,
    p,
    hermitian_restricted: bool = False,
    config: OptimizerConfig | None = None,
) -> NormEstimate:
    """The q = 1 induced norm; its achievers are rank-one by construction."""
    return norm_q_to_p(phi, NormQuery(1.0, p, hermitian_restricted), config)


def cp_norm(phi: SuperOp, query: NormQuery, config: OptimizerConfig | None = None) -> NormEstimate:
    """The induced norm of a completely positive map, searched over PSD
    inputs only (for CP maps this loses nothing and the achiever is a state
    when q = 1).  The query's ``hermitian_restricted`` flag is immaterial
    here since the PSD cone sits inside the Hermitian space."""
    if not is_completely_positive(phi):
        raise PreconditionError("cp_norm requires a completely positive map")
    cfg = config if config is not None else OptimizerConfig()
    phi_eff, split = _effective(phi, query.stabilize_dim)
    return _estimate(phi_eff, query.q, query.p, "psd", cfg, split)


def stabilized_norm(
    phi: SuperOp,
    p,
    hermitian_restricted: bool = False,
    config: OptimizerConfig | None = None,
) -> NormEstimate:
    """``||Phi (x) I_n||_{1 -> p}`` with ancilla n = dim_in.

    Enlarging the ancilla beyond the input dimension cannot change the
    value, so this single computation defines the stabilized norm; p = 1
    without the Hermitian restriction is the familiar distinguishability
    norm of channel pairs.
    """
    query = NormQuery(1.0, p, hermitian_restricted, stabilize_dim=phi.dim_in)
    return norm_q_to_p(phi, query, config)


def factorization_bound(
    phi: SuperOp, query: NormQuery, config: OptimizerConfig | None = None
) -> tuple[float, float]:
    """The pair (||Phi||_{q->p}, sqrt(||Phi_L||^H_{q->p} ||Phi_R||^H_{q->p})).

    The first entry never exceeds the second beyond optimizer slack; the
    right-hand side depends on the stored Kraus representation.
    """
    cfg = config if config is not None else OptimizerConfig()
    plain = replace(query, hermitian_restricted=False)
    herm = replace(query, hermitian_restricted=True)
    lhs = norm_q_to_p(phi, plain, cfg).value
    lv = norm_q_to_p(left_cp_map(phi), herm, cfg).value
    rv = norm_q_to_p(right_cp_map(phi), herm, cfg).value
    return lhs, math.sqrt(lv * rv)


def _chunked_indices(sizes, chunk: int):
    """Yield integer index blocks covering the cartesian grid of the sizes."""
    total = math.prod(sizes)
    for start in range(0, total, chunk):
        flat = np.arange(start, min(start + chunk, total))
        yield np.unravel_index(flat, sizes)


def _pair_pnorm(hi: np.ndarray, lo: np.ndarray, p: float) -> np.ndarray:
    """p-norm of two-entry non-negative spectra, fast paths for 1, 2, inf."""
    if p == 1.0:
        return hi + lo
    if p == 2.0:
        return np.sqrt(hi * hi + lo * lo)
    if math.isinf(p):
        return np.maximum(hi, lo)
    return pnorm(np.stack([hi, lo], axis=-1), p, axis=-1)


def _flat_out_pnorm(out_flat: np.ndarray, dout: int, p: float) -> np.ndarray:
    """Schatten p-norms of a stack of row-major flattened square outputs."""
    if dout == 2:
        f = (np.abs(out_flat) ** 2).sum(axis=-1)
        if p == 2.0:
            return np.sqrt(f)
        det = out_flat[:, 0] * out_flat[:, 3] - out_flat[:, 1] * out_flat[:, 2]
        g = np.sqrt(np.maximum(f * f - 4.0 * np.abs(det) ** 2, 0.0))
        hi = np.sqrt((f + g) / 2.0)
        lo = np.sqrt(np.maximum((f - g) / 2.0, 0.0))
        return _pair_pnorm(hi, lo, p)
    s = np.linalg.svd(out_flat.reshape(-1, dout, dout), compute_uv=False)
    return pnorm(s, p, axis=-1)


def _transfer_matrix(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """The (dout^2, din^2) matrix acting on row-major vectorized inputs."""
    return sum(np.kron(left[k], right[k].conj()) for k in range(left.shape[0]))


def brute_force_oracle(phi: SuperOp, query: NormQuery, resolution: int) -> float:
    """Grid maximum over a dense parameterization of the feasible set.

    Only qubit input spaces are in scope.  ``resolution`` counts grid points
    per angle.  For q = 1 and q = inf the grid walks the extreme points of
    the input ball directly (rank-one matrices, reflections, unitaries), so
    the objective stays smooth in the angles: 2 angles when Hermitian, 4 and
    3 otherwise.  For finite q > 1 there is no such reduction and the grid
    covers the sphere of coordinate vectors, 3 angles for the Hermitian 2x2
    space and 7 for the full one, so the unrestricted finite-q grid is only
    usable at very coarse resolutions.  The result is always a valid lower
    bound and converges to the norm as the resolution grows.
    """
    R = int(resolution)
    if R < 2:
        raise InvalidInputError("resolution must be at least 2")
    if query.stabilize_dim:
        raise UnsupportedInstanceError("the oracle does not handle stabilized queries")
    if phi.dim_in > 2:
        raise UnsupportedInstanceError(
            f"oracle grids require dim_in <= 2, got {phi.dim_in}"
        )
    q, p = query.q, query.p
    dout = phi.dim_out
    if phi.dim_in == 1:
        out = _apply_batch(phi.kraus_left, phi.kraus_right, np.ones((1, 1, 1), dtype=np.complex128))
        return float(pnorm(np.linalg.svd(out[0], compute_uv=False), p))
    transfer_t = _transfer_matrix(phi.kraus_left, phi.kraus_right).T
    thetas = np.linspace(0.0, math.pi, R)
    phis = np.linspace(0.0, 2.0 * math.pi, R, endpoint=False)
    best = 0.0

    def push(flat, dens=None):
        nonlocal best
        vals = _flat_out_pnorm(flat @ transfer_t, dout, p)
        if dens is not None:
            vals = vals / dens
        best = max(best, float(vals.max()))

    if q == 1.0:
        # rank-one inputs: the trace-norm ball's extreme points are u v*
        # (v = u when restricted to the Hermitian cone, up to overall sign)
        ca, sa = np.cos(thetas / 2.0), np.sin(thetas / 2.0)
        ph = np.exp(1j * phis)
        if query.hermitian_restricted:
            for i0, i1 in _chunked_indices((R, R), _ORACLE_CHUNK):
                a, s = ca[i0], sa[i0]
                b = s * ph[i1]
                flat = np.empty((a.size, 4), dtype=np.complex128)
                flat[:, 0] = a * a
                flat[:, 1] = a * b.conj()
                flat[:, 2] = a * b
                flat[:, 3] = s * s
                push(flat)
        else:
            for i0, i1, i2, i3 in _chunked_indices((R, R, R, R), _ORACLE_CHUNK):
                ua, ub = ca[i0], sa[i0] * ph[i1]
                va, vb = ca[i2], sa[i2] * ph[i3]
                flat = np.empty((ua.size, 4), dtype=np.complex128)
                flat[:, 0] = ua * va.conj()
                flat[:, 1] = ua * vb.conj()
                flat[:, 2] = ub * va.conj()
                flat[:, 3] = ub * vb.conj()
                push(flat)
        return best
    if math.isinf(q):
        # extreme points of the operator-norm ball: reflections 2 psi psi* - I
        # (plus I itself) in the Hermitian case, unitaries otherwise; sampling
        # them directly avoids the eigenvalue-crossing kink a normalized
        # direction grid would have to straddle
        if query.hermitian_restricted:
            push(np.array([[1.0, 0.0, 0.0, 1.0]], dtype=np.complex128))
            ca, sa = np.cos(thetas / 2.0), np.sin(thetas / 2.0)
            ph = np.exp(1j * phis)
            for i0, i1 in _chunked_indices((R, R), _ORACLE_CHUNK):
                a, s = ca[i0], sa[i0]
                b = s * ph[i1]
                flat = np.empty((a.size, 4), dtype=np.complex128)
                flat[:, 0] = 2.0 * a * a - 1.0
                flat[:, 1] = 2.0 * a * b.conj()
                flat[:, 2] = 2.0 * a * b
                flat[:, 3] = 1.0 - 2.0 * a * a
                push(flat)
            return best
        axes = [thetas, thetas, phis]
        cos_t = [np.cos(a) for a in axes]
        sin_t = [np.sin(a) for a in axes]
        for idx in _chunked_indices((R, R, R), _ORACLE_CHUNK):
            m = idx[0].size
            x = np.empty((m, 4))
            running = np.ones(m)
            for d in range(3):
                x[:, d] = running * cos_t[d][idx[d]]
                running = running * sin_t[d][idx[d]]
            x[:, 3] = running
            z1 = x[:, 0] + 1j * x[:, 1]
            z2 = x[:, 2] + 1j * x[:, 3]
            flat = np.empty((m, 4), dtype=np.complex128)
            flat[:, 0] = z1
            flat[:, 1] = -z2.conj()
            flat[:, 2] = z2
            flat[:, 3] = z1.conj()
            push(flat)
        return best
    # 1 < q < inf: walk the unit sphere of real coordinate vectors (4 for the
    # Hermitian 2x2 space, 8 otherwise) and rescale by the direction's q-norm
    n_angles = 3 if query.hermitian_restricted else 7
    axes = [thetas] * (n_angles - 1) + [phis]
    cos_t = [np.cos(a) for a in axes]
    sin_t = [np.sin(a) for a in axes]
    for idx in _chunked_indices(tuple(R for _ in axes), _ORACLE_CHUNK):
        m = idx[0].size
        x = np.empty((m, n_angles + 1))
        running = np.ones(m)
        for d in range(n_angles):
            x[:, d] = running * cos_t[d][idx[d]]
            running = running * sin_t[d][idx[d]]
        x[:, n_angles] = running
        flat = np.empty((m, 4), dtype=np.complex128)
        if query.hermitian_restricted:
            flat[:, 0] = x[:, 0]
            flat[:, 1] = x[:, 2] + 1j * x[:, 3]
            flat[:, 2] = x[:, 2] - 1j * x[:, 3]
            flat[:, 3] = x[:, 1]
            mean = (x[:, 0] + x[:, 1]) / 2.0
            rad = np.sqrt((x[:, 0] - x[:, 1]) ** 2 / 4.0 + x[:, 2] ** 2 + x[:, 3] ** 2)
            dens = _pair_pnorm(np.abs(mean + rad), np.abs(mean - rad), q)
        else:
            flat[:, 0] = x[:, 0] + 1j * x[:, 1]
            flat[:, 1] = x[:, 2] + 1j * x[:, 3]
            flat[:, 2] = x[:, 4] + 1j * x[:, 5]
            flat[:, 3] = x[:, 6] + 1j * x[:, 7]
            # the coordinate vector is unit, so the squared Frobenius norm is 1
            det = flat[:, 0] * flat[:, 3] - flat[:, 1] * flat[:, 2]
            g = np.sqrt(np.maximum(1.0 - 4.0 * np.abs(det) ** 2, 0.0))
            hi = np.sqrt((1.0 + g) / 2.0)
            lo = np.sqrt(np.maximum((1.0 - g) / 2.0, 0.0))
            dens = _pair_pnorm(hi, lo, q)
        push(flat, dens)
    return best


def explore_open_question(
    phi: SuperOp,
    question: int,
    q=1.0,
    p=1.0,
    samples: int = 20,
    config: OptimizerConfig | None = None,
) -> dict:
    """Numeric survey data for the three representation/stabilization
    questions; exploratory output only, no verdict is attached.

    Question 1 samples invertible re-mixings of an equivalent Kraus pair
    (identity mixer first) and tracks the smallest observed product
    ``||Phi_L||^H_{1->p} * ||Phi_R||^H_{1->p}`` against the squared
    stabilized norm.  Questions 2 and 3 tabulate ``||Phi (x) I_k||_{q->p}``
    for ancilla sizes k = 1 .. dim_in + 2; question 3 requires a completely
    positive input and adds the Hermitian-restricted column.
    """
    cfg = config if config is not None else OptimizerConfig()
    if phi.dim_in > 3 or phi.dim_out > 3:
        raise UnsupportedInstanceError("exploration is limited to dimensions <= 3")
    q = require_exponent(q)
    p = require_exponent(p)
    question = int(question)
    if question == 1:
        stab = stabilized_norm(phi, p, hermitian_restricted=False, config=cfg).value
        herm = NormQuery(1.0, p, hermitian_restricted=True)
        rng = np.random.default_rng(np.random.SeedSequence([cfg.seed, 101]))
        n = phi.n_terms
        records = []
        for i in range(max(1, int(samples))):
            if i == 0:
                mixer = np.eye(n, dtype=np.complex128)
            else:
                mixer = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
                for _ in range(10):
                    if np.linalg.cond(mixer) < 1e4:
                        break
                    mixer = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            mixed = remix(phi, mixer)
            lv = norm_q_to_p(left_cp_map(mixed), herm, cfg).value
            rv = norm_q_to_p(right_cp_map(mixed), herm, cfg).value
            records.append({"sample": i, "left": lv, "right": rv, "product": lv * rv})
        return {
            "question": 1,
            "p": format_exponent(p),
            "stabilized_squared": stab * stab,
            "min_product": min(r["product"] for r in records),
            "samples": records,
        }
    if question in (2, 3):
        if question == 3 and not is_completely_positive(phi):
            raise PreconditionError("question 3 concerns completely positive maps")
        profile = []
        for k in range(1, phi.dim_in + 3):
            query = NormQuery(q, p, False, stabilize_dim=k)
            row = {"ancilla": k, "value": norm_q_to_p(phi, query, cfg).value}
            if question == 3:
                row["hermitian_value"] = norm_q_to_p(
                    phi, replace(query, hermitian_restricted=True), cfg
                ).value
            profile.append(row)
        return {
            "question": question,
            "q": format_exponent(q),
            "p": format_exponent(p),
            "profile": profile,
        }
    raise InvalidInputError(f"question must be 1, 2, or 3, got {question}")
