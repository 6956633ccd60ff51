"""Randomized verification suites for the norm identities and inequalities.

Each claim id names one checkable statement.  ``verify`` runs its suite over
seeded random instances (plus the fixed example maps where the statement is
about those), aggregates the worst residual, and reports pass/fail against
the claim's tolerance.  Residuals are violation slacks for inequalities and
absolute differences for equalities, so a report passes exactly when every
checked instance met its bound.

Claims about optimized quantities use tolerance 2e-3 (two independent
optimizations carry restart variance); claims that reduce to plain linear
algebra use 1e-8 .. 1e-10.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .channels import build_example, random_cp_channel, random_superop
from .errors import InvalidInputError
from .optimize import (
    NormQuery,
    OptimizerConfig,
    brute_force_oracle,
    factorization_bound,
    norm_1_to_p,
    norm_q_to_p,
    stabilized_norm,
)
from .schatten import (
    block_norm_bounds,
    duality_witness,
    dual_exponent,
    format_exponent,
    hoelder_gap,
    schatten_norm,
)
from .superop import difference
from .linalg import inner

_EXPONENT_GRID = (1.0, 1.5, 2.0, 3.0, math.inf)
_DIMS_ROTATION = ((2, 2), (2, 3), (3, 2), (3, 3))


@dataclass(frozen=True)
class VerificationReport:
    claim_id: str
    trials: int
    worst_residual: float
    tolerance: float
    passed: bool
    seed: int
    details: tuple

    def to_obj(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "trials": self.trials,
            "worst_residual": self.worst_residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "seed": self.seed,
            "details": list(self.details),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), separators=(",", ":"))


def _trial_seeds(seed: int, salt: int, count: int) -> list[int]:
    rng = np.random.default_rng(np.random.SeedSequence([int(seed) & ((1 << 64) - 1), salt]))
    return [int(s) for s in rng.integers(0, 2**63 - 1, size=count)]


def _rng(seed: int, salt: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed) & ((1 << 64) - 1), salt]))


def _random_matrix(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def _label(q, p) -> str:
    return f"q={format_exponent(q)},p={format_exponent(p)}"


def _run_theorem1(seed, trials, restarts):
    """CP maps: the unrestricted and Hermitian-restricted norms coincide."""
    seeds = _trial_seeds(seed, 1, trials)
    details = []
    for i in range(trials):
        din, dout = _DIMS_ROTATION[i % len(_DIMS_ROTATION)]
        phi = random_cp_channel(din, dout, 2 + i % 2, seeds[i])
        cfg = OptimizerConfig(restarts=restarts, seed=seeds[i])
        worst, at = 0.0, ""
        for q in _EXPONENT_GRID:
            for p in _EXPONENT_GRID:
                plain = norm_q_to_p(phi, NormQuery(q, p), cfg).value
                herm = norm_q_to_p(phi, NormQuery(q, p, True), cfg).value
                r = abs(plain - herm)
                if r > worst:
                    worst, at = r, _label(q, p)
        details.append(
            {"trial": i, "dims": [din, dout], "seed": seeds[i], "residual": worst, "worst_case": at}
        )
    return details


def _run_lemma1(seed, trials, restarts):
    """||Phi||_{q->p} <= sqrt(||Phi_L||^H ||Phi_R||^H) for the stored Kraus pair."""
    seeds = _trial_seeds(seed, 2, trials)
    details = []
    for i in range(trials):
        din, dout = _DIMS_ROTATION[i % len(_DIMS_ROTATION)]
        phi = random_superop(din, dout, 2 + i % 2, seeds[i])
        cfg = OptimizerConfig(restarts=restarts, seed=seeds[i])
        worst, at = 0.0, ""
        for q in _EXPONENT_GRID:
            for p in _EXPONENT_GRID:
                lhs, rhs = factorization_bound(phi, NormQuery(q, p), cfg)
                r = max(0.0, lhs - rhs)
                if r > worst:
                    worst, at = r, _label(q, p)
        details.append(
            {"trial": i, "dims": [din, dout], "seed": seeds[i], "residual": worst, "worst_case": at}
        )
    return details


def _run_prop_counterexamples(seed, trials, restarts):
    """The fixed maps where the Hermitian restriction strictly loses value."""
    seeds = _trial_seeds(seed, 3, 1)
    cfg = OptimizerConfig(restarts=restarts, seed=seeds[0])
    details = []

    def case(name, got, want):
        details.append({"case": name, "value": got, "expected": want, "residual": abs(got - want)})

    simple = build_example("simple_nonhermitian")
    for q in (1.0, 2.0, 4.0):
        for p in (1.0, math.inf):
            case(f"simple plain {_label(q, p)}", norm_q_to_p(simple, NormQuery(q, p), cfg).value, 1.0)
            case(
                f"simple hermitian {_label(q, p)}",
                norm_q_to_p(simple, NormQuery(q, p, True), cfg).value,
                2.0 ** (-1.0 / q),
            )
    qinf = build_example("qinf_nonhermitian")
    for p in (1.0, math.inf):
        case(f"qinf plain {_label(math.inf, p)}", norm_q_to_p(qinf, NormQuery(math.inf, p), cfg).value, 1.0)
        case(
            f"qinf hermitian {_label(math.inf, p)}",
            norm_q_to_p(qinf, NormQuery(math.inf, p, True), cfg).value,
            1.0 / math.sqrt(2.0),
        )
    ident, depol = build_example("depolarizing_pair")
    dd = difference(ident, depol)
    for p in (1.5, 2.0, math.inf):
        inv_p = 0.0 if math.isinf(p) else 1.0 / p
        case(f"depolarizing plain p={format_exponent(p)}", norm_1_to_p(dd, p, config=cfg).value, 1.0)
        case(
            f"depolarizing hermitian p={format_exponent(p)}",
            norm_1_to_p(dd, p, True, config=cfg).value,
            2.0**inv_p / 2.0,
        )
    phi0, phi1 = build_example("dim4_pair")
    d4 = difference(phi0, phi1)
    root2 = math.sqrt(2.0)
    case("dim4 plain p=1", norm_1_to_p(d4, 1.0, config=cfg).value, 2.0)
    case("dim4 hermitian p=1", norm_1_to_p(d4, 1.0, True, config=cfg).value, root2)
    case(
        "dim4 hermitian p=1 oracle res=400",
        brute_force_oracle(d4, NormQuery(1.0, 1.0, True), 400),
        root2,
    )
    return details


def _run_theorem2(seed, trials, restarts):
    """Tensoring with an identity changes nothing once p >= 2 and q <= 2."""
    seeds = _trial_seeds(seed, 4, trials)
    details = []
    for i in range(trials):
        din, dout = _DIMS_ROTATION[i % len(_DIMS_ROTATION)]
        phi = random_superop(din, dout, 2 + i % 2, seeds[i])
        cfg = OptimizerConfig(restarts=restarts, seed=seeds[i])
        worst, at = 0.0, ""
        for q in (1.0, 1.5, 2.0):
            for p in (2.0, 3.0, math.inf):
                base = norm_q_to_p(phi, NormQuery(q, p), cfg).value
                for anc in (2, 3):
                    stab = norm_q_to_p(phi, NormQuery(q, p, False, anc), cfg).value
                    r = abs(stab - base)
                    if r > worst:
                        worst, at = r, f"{_label(q, p)},ancilla={anc}"
        details.append(
            {"trial": i, "dims": [din, dout], "seed": seeds[i], "residual": worst, "worst_case": at}
        )
    return details


def _run_theorem3(seed, trials, restarts):
    """An ancilla of the input dimension already saturates the stabilized norm."""
    seeds = _trial_seeds(seed, 5, trials)
    details = []
    for i in range(trials):
        din, dout = _DIMS_ROTATION[i % len(_DIMS_ROTATION)]
        phi = random_superop(din, dout, 2 + i % 2, seeds[i])
        cfg = OptimizerConfig(restarts=restarts, seed=seeds[i])
        worst, at = 0.0, ""
        for p in _EXPONENT_GRID:
            for herm in (False, True):
                at_cap = norm_q_to_p(phi, NormQuery(1.0, p, herm, din), cfg).value
                beyond = norm_q_to_p(phi, NormQuery(1.0, p, herm, din + 1), cfg).value
                r = abs(at_cap - beyond)
                if r > worst:
                    worst, at = r, f"p={format_exponent(p)},hermitian={herm}"
        details.append(
            {"trial": i, "dims": [din, dout], "seed": seeds[i], "residual": worst, "worst_case": at}
        )
    return details


def _run_transpose_instability(seed, trials, restarts):
    """||T||_p = 1 but ||T (x) I_n||_{1->p} = n^(2/p)/n on n-dimensional inputs."""
    seeds = _trial_seeds(seed, 6, 1)
    cfg = OptimizerConfig(restarts=restarts, seed=seeds[0])
    details = []
    for n in (2, 3):
        T = build_example(f"transpose({n})")
        for p in (1.0, 1.5, 2.0):
            plain = norm_1_to_p(T, p, config=cfg).value
            stab = stabilized_norm(T, p, config=cfg).value
            want = n ** (2.0 / p) / n
            details.append(
                {
                    "case": f"transpose({n}) plain p={format_exponent(p)}",
                    "value": plain,
                    "expected": 1.0,
                    "residual": abs(plain - 1.0),
                }
            )
            details.append(
                {
                    "case": f"transpose({n}) stabilized p={format_exponent(p)}",
                    "value": stab,
                    "expected": want,
                    "residual": abs(stab - want),
                }
            )
    return details


def _run_ahw_fact(seed, trials, restarts):
    """For CP maps the Hermitian 1->p norm ignores tensoring with an identity."""
    seeds = _trial_seeds(seed, 7, trials)
    details = []
    for i in range(trials):
        din, dout = _DIMS_ROTATION[i % len(_DIMS_ROTATION)]
        phi = random_cp_channel(din, dout, 2 + i % 2, seeds[i])
        cfg = OptimizerConfig(restarts=restarts, seed=seeds[i])
        worst, at = 0.0, ""
        for p in (1.0, 2.0, math.inf):
            base = norm_q_to_p(phi, NormQuery(1.0, p, True), cfg).value
            stab = norm_q_to_p(phi, NormQuery(1.0, p, True, 2), cfg).value
            r = abs(base - stab)
            if r > worst:
                worst, at = r, f"p={format_exponent(p)}"
        details.append(
            {"trial": i, "dims": [din, dout], "seed": seeds[i], "residual": worst, "worst_case": at}
        )
    return details


def _run_duality(seed, trials, restarts):
    """The dual-norm witness attains ||X||_p with a unit dual-norm certificate."""
    rng = _rng(seed, 8)
    details = []
    for i in range(trials):
        n = int(rng.integers(2, 7))
        m = int(rng.integers(2, 7))
        X = _random_matrix(rng, n, m)
        worst, at = 0.0, ""
        for p in _EXPONENT_GRID:
            Y = duality_witness(X, p)
            r = max(
                abs(inner(Y, X) - schatten_norm(X, p)),
                abs(schatten_norm(Y, dual_exponent(p)) - 1.0),
            )
            if r > worst:
                worst, at = r, f"p={format_exponent(p)}"
        details.append({"trial": i, "shape": [n, m], "residual": worst, "worst_case": at})
    return details


def _run_hoelder(seed, trials, restarts):
    rng = _rng(seed, 9)
    details = []
    for i in range(trials):
        n = int(rng.integers(2, 7))
        m = int(rng.integers(2, 7))
        X = _random_matrix(rng, n, m)
        Y = _random_matrix(rng, n, m)
        worst, at = 0.0, ""
        for p in _EXPONENT_GRID:
            r = max(0.0, -hoelder_gap(X, Y, p))
            if r > worst:
                worst, at = r, f"p={format_exponent(p)}"
        details.append({"trial": i, "shape": [n, m], "residual": worst, "worst_case": at})
    return details


def _run_block_bounds(seed, trials, restarts):
    """Squared block norms bound the squared full norm from the p-dependent side."""
    rng = _rng(seed, 10)
    details = []
    for i in range(trials):
        br = int(rng.integers(1, 4))
        bc = int(rng.integers(1, 4))
        h = int(rng.integers(1, 4))
        w = int(rng.integers(1, 4))
        X = _random_matrix(rng, br * h, bc * w)
        worst, at = 0.0, ""
        for p in _EXPONENT_GRID:
            lhs, rhs = block_norm_bounds(X, br, bc, p)
            if p <= 2.0:
                r = max(0.0, lhs - rhs)
            else:
                r = max(0.0, rhs - lhs)
            if p == 2.0:
                r = abs(lhs - rhs)
            if r > worst:
                worst, at = r, f"p={format_exponent(p)}"
        details.append(
            {"trial": i, "blocks": [br, bc], "block_shape": [h, w], "residual": worst, "worst_case": at}
        )
    return details


def _run_monotone_p(seed, trials, restarts):
    """||A||_p <= ||A||_q whenever p >= q."""
    rng = _rng(seed, 11)
    details = []
    for i in range(trials):
        n = int(rng.integers(2, 7))
        m = int(rng.integers(2, 7))
        A = _random_matrix(rng, n, m)
        worst, at = 0.0, ""
        for qi, q in enumerate(_EXPONENT_GRID):
            for p in _EXPONENT_GRID[qi:]:
                r = max(0.0, schatten_norm(A, p) - schatten_norm(A, q))
                if r > worst:
                    worst, at = r, _label(q, p)
        details.append({"trial": i, "shape": [n, m], "residual": worst, "worst_case": at})
    return details


# claim id -> (tolerance, runner); order fixes the "all" iteration order
_REGISTRY = {
    "theorem1": (2e-3, _run_theorem1),
    "lemma1": (2e-3, _run_lemma1),
    "prop_counterexamples": (2e-3, _run_prop_counterexamples),
    "theorem2": (2e-3, _run_theorem2),
    "theorem3": (2e-3, _run_theorem3),
    "transpose_instability": (2e-3, _run_transpose_instability),
    "ahw_fact": (2e-3, _run_ahw_fact),
    "duality": (1e-8, _run_duality),
    "hoelder": (1e-9, _run_hoelder),
    "block_bounds": (1e-9, _run_block_bounds),
    "monotone_p": (1e-10, _run_monotone_p),
}


def claim_ids() -> tuple[str, ...]:
    return tuple(_REGISTRY)


def claim_tolerance(claim_id: str) -> float:
    if claim_id not in _REGISTRY:
        raise InvalidInputError(f"unknown claim id {claim_id!r}")
    return _REGISTRY[claim_id][0]


def verify(claim_id: str, seed: int = 42, trials: int = 50, restarts: int = 32) -> VerificationReport:
    """Run one claim's suite and report the worst observed residual.

    Claims built on fixed example maps (``prop_counterexamples``,
    ``transpose_instability``) check their fixed case list and ignore
    ``trials``; the reported trial count is always the number of detail
    records produced.
    """
    if claim_id not in _REGISTRY:
        raise InvalidInputError(
            f"unknown claim id {claim_id!r}; known: {', '.join(_REGISTRY)}"
        )
    trials = int(trials)
    restarts = int(restarts)
    if trials < 1:
        raise InvalidInputError("trials must be >= 1")
    if restarts < 1:
        raise InvalidInputError("restarts must be >= 1")
    tolerance, runner = _REGISTRY[claim_id]
    details = runner(int(seed), trials, restarts)
    worst = max((d["residual"] for d in details), default=0.0)
    return VerificationReport(
        claim_id=claim_id,
        trials=len(details),
        worst_residual=float(worst),
        tolerance=tolerance,
        passed=bool(worst <= tolerance),
        seed=int(seed),
        details=tuple(details),
    )
