import math

import numpy as np
import pytest

from supernorms import (
    InvalidExponentError,
    InvalidInputError,
    NormQuery,
    OptimizerConfig,
    PreconditionError,
    SuperOp,
    UnsupportedInstanceError,
    apply,
    brute_force_oracle,
    build_example,
    cp_norm,
    difference,
    explore_open_question,
    factorization_bound,
    identity_superop,
    is_hermitian,
    norm_1_to_p,
    norm_q_to_p,
    pnorm,
    random_cp_channel,
    random_superop,
    random_unitary,
    schatten_norm,
    stabilized_norm,
    tensor_identity,
)

EXPONENTS = [1.0, 1.5, 2.0, math.inf]


def eval_on(phi: SuperOp, X: np.ndarray, p: float) -> float:
    return schatten_norm(apply(phi, X), p)


def test_norm_query_validation():
    q = NormQuery("2", 1)
    assert q.q == 2.0 and q.p == 1.0 and not q.hermitian_restricted
    with pytest.raises(InvalidExponentError):
        NormQuery(0.5, 1.0)
    with pytest.raises(InvalidExponentError):
        NormQuery(1.0, math.nan)
    with pytest.raises(InvalidInputError):
        NormQuery(1.0, 1.0, stabilize_dim=-1)


def test_optimizer_config_validation():
    cfg = OptimizerConfig(restarts=3.0)
    assert cfg.restarts == 3
    for bad in (
        dict(restarts=0),
        dict(max_iterations=0),
        dict(step_tolerance=0.0),
        dict(objective_tolerance=-1.0),
    ):
        with pytest.raises(InvalidInputError):
            OptimizerConfig(**bad)


@pytest.mark.parametrize("n", [2, 3])
def test_identity_map_closed_form(n, quick_cfg):
    ident = identity_superop(n)
    for q in EXPONENTS:
        for p in EXPONENTS:
            iq = 0.0 if math.isinf(q) else 1.0 / q
            ip = 0.0 if math.isinf(p) else 1.0 / p
            want = n ** max(0.0, ip - iq)
            got = norm_q_to_p(ident, NormQuery(q, p), quick_cfg).value
            assert got == pytest.approx(want, abs=1e-7), (q, p)


def test_unitary_conjugation_has_unit_norm(quick_cfg):
    U = random_unitary(3, 4)
    phi = SuperOp.from_kraus(U[None])
    for p in EXPONENTS:
        assert norm_q_to_p(phi, NormQuery(p, p), quick_cfg).value == pytest.approx(1.0, abs=1e-8)


def test_simple_example_norm_gap(quick_cfg):
    simple = build_example("simple_nonhermitian")
    for q in (1.0, 2.0, 4.0):
        plain = norm_q_to_p(simple, NormQuery(q, 1.0), quick_cfg).value
        herm = norm_q_to_p(simple, NormQuery(q, 1.0, True), quick_cfg).value
        assert plain == pytest.approx(1.0, abs=1e-6)
        assert herm == pytest.approx(2.0 ** (-1.0 / q), abs=1e-6)


def test_dim4_difference_values(quick_cfg):
    d4 = difference(*build_example("dim4_pair"))
    assert norm_1_to_p(d4, 1.0, config=quick_cfg).value == pytest.approx(2.0, abs=1e-5)
    assert norm_1_to_p(d4, 1.0, True, config=quick_cfg).value == pytest.approx(
        math.sqrt(2.0), abs=1e-5
    )


def test_transpose_plain_vs_stabilized(quick_cfg):
    T = build_example("transpose(2)")
    assert norm_1_to_p(T, 1.0, config=quick_cfg).value == pytest.approx(1.0, abs=1e-6)
    est = stabilized_norm(T, 1.0, config=quick_cfg)
    assert est.value == pytest.approx(2.0, abs=1e-5)
    assert est.achiever.shape == (4, 4)


def test_stabilized_norm_matches_explicit_query(quick_cfg):
    phi = random_superop(2, 2, 2, 21)
    direct = norm_q_to_p(phi, NormQuery(1.0, 2.0, False, 2), quick_cfg)
    wrapped = stabilized_norm(phi, 2.0, config=quick_cfg)
    assert wrapped.value == direct.value


def test_cp_map_norms_agree_across_routes(quick_cfg):
    phi = random_cp_channel(2, 3, 2, 0)
    for q, p in [(1.0, 1.0), (2.0, 1.5), (math.inf, math.inf)]:
        plain = norm_q_to_p(phi, NormQuery(q, p), quick_cfg).value
        herm = norm_q_to_p(phi, NormQuery(q, p, True), quick_cfg).value
        psd = cp_norm(phi, NormQuery(q, p), quick_cfg).value
        assert abs(plain - herm) <= 2e-3
        assert abs(plain - psd) <= 2e-3


def test_cp_norm_rejects_non_cp_maps(quick_cfg):
    with pytest.raises(PreconditionError):
        cp_norm(build_example("transpose(2)"), NormQuery(1.0, 1.0), quick_cfg)


def test_achiever_invariants_plain(quick_cfg):
    phi = random_superop(2, 3, 2, 31)
    query = NormQuery(1.5, 2.0)
    est = norm_q_to_p(phi, query, quick_cfg)
    assert schatten_norm(est.achiever, 1.5) == pytest.approx(1.0, abs=1e-9)
    assert eval_on(phi, est.achiever, 2.0) == pytest.approx(est.value, abs=1e-10)
    assert not est.achiever.flags.writeable
    assert est.restarts_used == quick_cfg.restarts
    assert 0 <= est.best_restart < quick_cfg.restarts


def test_achiever_invariants_hermitian(quick_cfg):
    phi = random_superop(3, 2, 2, 32)
    est = norm_q_to_p(phi, NormQuery(2.0, 1.0, True), quick_cfg)
    assert is_hermitian(est.achiever, tol=1e-12)
    assert schatten_norm(est.achiever, 2.0) == pytest.approx(1.0, abs=1e-9)
    assert eval_on(phi, est.achiever, 1.0) == pytest.approx(est.value, abs=1e-10)


def test_achiever_invariants_psd(quick_cfg):
    phi = random_cp_channel(3, 2, 2, 33)
    est = cp_norm(phi, NormQuery(1.0, 1.0), quick_cfg)
    lam = np.linalg.eigvalsh(est.achiever)
    assert lam.min() >= -1e-12
    assert lam.sum() == pytest.approx(1.0, abs=1e-9)


def test_achiever_lives_on_stabilized_space(quick_cfg):
    phi = random_superop(2, 2, 2, 34)
    est = norm_q_to_p(phi, NormQuery(1.0, 1.0, False, 3), quick_cfg)
    assert est.achiever.shape == (6, 6)
    big = tensor_identity(phi, 3)
    assert eval_on(big, est.achiever, 1.0) == pytest.approx(est.value, abs=1e-10)


def test_results_are_deterministic(quick_cfg):
    phi = random_superop(2, 2, 2, 35)
    query = NormQuery(2.0, math.inf, True)
    a = norm_q_to_p(phi, query, quick_cfg)
    b = norm_q_to_p(phi, query, quick_cfg)
    assert a.value == b.value
    assert np.array_equal(a.achiever, b.achiever)
    assert (a.best_restart, a.converged) == (b.best_restart, b.converged)
    other = norm_q_to_p(phi, query, OptimizerConfig(restarts=12, seed=8))
    assert other.value == pytest.approx(a.value, abs=1e-8)


def test_zero_map(quick_cfg):
    zero = SuperOp.from_kraus(np.zeros((1, 2, 2)), np.zeros((1, 2, 2)) + 0.0)
    est = norm_q_to_p(zero, NormQuery(1.0, 1.0), quick_cfg)
    assert est.value == 0.0
    assert est.converged


def test_ancilla_never_hurts(quick_cfg):
    phi = random_superop(2, 2, 2, 36)
    base = norm_1_to_p(phi, 1.0, config=quick_cfg).value
    prev = base
    for k in (2, 3):
        cur = norm_q_to_p(phi, NormQuery(1.0, 1.0, False, k), quick_cfg).value
        assert cur >= prev - 2e-3
        prev = cur


def test_factorization_bound_holds(quick_cfg):
    phi = random_superop(2, 2, 2, 37)
    lhs, rhs = factorization_bound(phi, NormQuery(1.5, 2.0), quick_cfg)
    assert lhs <= rhs + 2e-3


def test_oracle_identity_small_grid():
    v = brute_force_oracle(identity_superop(2), NormQuery(1.0, 1.0), 50)
    assert v == pytest.approx(1.0, abs=1e-3)


def test_oracle_dim4_hermitian():
    d4 = difference(*build_example("dim4_pair"))
    v = brute_force_oracle(d4, NormQuery(1.0, 1.0, True), 200)
    assert v == pytest.approx(math.sqrt(2.0), abs=1e-3)


def test_oracle_simple_hermitian_q2():
    simple = build_example("simple_nonhermitian")
    v = brute_force_oracle(simple, NormQuery(2.0, 1.0, True), 200)
    assert v == pytest.approx(2.0 ** -0.5, abs=1e-2)


def test_oracle_full_rank_one_grid():
    simple = build_example("simple_nonhermitian")
    v = brute_force_oracle(simple, NormQuery(1.0, 1.0), 30)
    assert v == pytest.approx(1.0, abs=1e-3)


def test_oracle_full_sphere_grid_is_a_lower_bound():
    simple = build_example("simple_nonhermitian")
    v = brute_force_oracle(simple, NormQuery(2.0, 1.0), 10)
    assert 0.9 <= v <= 1.0 + 1e-9


def test_oracle_reflection_grid_for_qinf_hermitian():
    qinf = build_example("qinf_nonhermitian")
    v = brute_force_oracle(qinf, NormQuery(math.inf, 1.0, True), 200)
    assert v == pytest.approx(2.0 ** -0.5, abs=1e-4)


def test_oracle_unitary_grid_for_qinf():
    v = brute_force_oracle(identity_superop(2), NormQuery(math.inf, 2.0), 50)
    assert v == pytest.approx(math.sqrt(2.0), abs=1e-6)
    qinf = build_example("qinf_nonhermitian")
    assert brute_force_oracle(qinf, NormQuery(math.inf, 1.0), 60) == pytest.approx(1.0, abs=1e-3)


def test_oracle_brackets_optimizer(quick_cfg):
    phi = random_superop(2, 2, 2, 38)
    query = NormQuery(2.0, 2.0, True)
    est = norm_q_to_p(phi, query, quick_cfg).value
    v = brute_force_oracle(phi, query, 60)
    assert v <= est + 1e-3
    assert est <= v + 5e-2


def test_oracle_scalar_input_space():
    phi = SuperOp.from_kraus(np.array([[[1.0], [0.0]]]))
    assert brute_force_oracle(phi, NormQuery(3.0, 2.0), 7) == pytest.approx(1.0)


def test_oracle_rejects_out_of_scope_queries():
    phi = random_superop(2, 2, 2, 39)
    with pytest.raises(InvalidInputError):
        brute_force_oracle(phi, NormQuery(1.0, 1.0), 1)
    with pytest.raises(UnsupportedInstanceError):
        brute_force_oracle(phi, NormQuery(1.0, 1.0, False, 2), 10)
    with pytest.raises(UnsupportedInstanceError):
        brute_force_oracle(random_superop(3, 2, 2, 40), NormQuery(1.0, 1.0), 10)


def test_explore_ancilla_profile_for_transpose(quick_cfg):
    out = explore_open_question(build_example("transpose(2)"), 2, config=quick_cfg)
    assert out["question"] == 2
    assert out["q"] == "1.0" and out["p"] == "1.0"
    values = [row["value"] for row in out["profile"]]
    assert [row["ancilla"] for row in out["profile"]] == [1, 2, 3, 4]
    assert values[0] == pytest.approx(1.0, abs=2e-3)
    for v in values[1:]:
        assert v == pytest.approx(2.0, abs=2e-3)


def test_explore_representation_products(quick_cfg):
    phi = random_cp_channel(2, 2, 1, 41)
    out = explore_open_question(phi, 1, p=1.0, samples=3, config=quick_cfg)
    assert out["question"] == 1
    assert len(out["samples"]) == 3
    assert out["samples"][0]["sample"] == 0
    products = [r["product"] for r in out["samples"]]
    assert out["min_product"] == min(products)
    # representation-independent upper bound: stabilized^2 <= every product
    assert out["stabilized_squared"] <= out["min_product"] + 2e-2


def test_explore_cp_profile_includes_hermitian_column(quick_cfg):
    phi = random_cp_channel(2, 2, 2, 42)
    out = explore_open_question(phi, 3, p=2.0, config=quick_cfg)
    for row in out["profile"]:
        assert abs(row["value"] - row["hermitian_value"]) <= 2e-3


def test_explore_validation(quick_cfg):
    with pytest.raises(PreconditionError):
        explore_open_question(build_example("transpose(2)"), 3, config=quick_cfg)
    with pytest.raises(InvalidInputError):
        explore_open_question(identity_superop(2), 4, config=quick_cfg)
    with pytest.raises(UnsupportedInstanceError):
        explore_open_question(random_superop(4, 4, 2, 0), 2, config=quick_cfg)


def test_norm_wrapper_routes_match(quick_cfg):
    phi = random_superop(2, 2, 2, 43)
    assert (
        norm_1_to_p(phi, 2.0, config=quick_cfg).value
        == norm_q_to_p(phi, NormQuery(1.0, 2.0), quick_cfg).value
    )


def test_pnorm_reexport_smoke():
    assert pnorm([3.0, 4.0], 2.0) == pytest.approx(5.0)
