import json
import math

import pytest

from supernorms import InvalidInputError, VerificationReport, claim_ids, claim_tolerance, verify

ALL_CLAIMS = (
    "theorem1",
    "lemma1",
    "prop_counterexamples",
    "theorem2",
    "theorem3",
    "transpose_instability",
    "ahw_fact",
    "duality",
    "hoelder",
    "block_bounds",
    "monotone_p",
)

# claims whose residuals come from plain linear algebra run at full trial
# counts in the acceptance module; here every suite gets a smoke budget
FAST = dict(trials=2, restarts=16)


def test_claim_registry():
    assert claim_ids() == ALL_CLAIMS
    assert claim_tolerance("theorem1") == pytest.approx(2e-3)
    assert claim_tolerance("monotone_p") == pytest.approx(1e-10)
    with pytest.raises(InvalidInputError):
        claim_tolerance("theorem9")


def test_unknown_claim_rejected():
    with pytest.raises(InvalidInputError):
        verify("not_a_claim", **FAST)


def test_bad_budgets_rejected():
    with pytest.raises(InvalidInputError):
        verify("duality", trials=0)
    with pytest.raises(InvalidInputError):
        verify("duality", trials=5, restarts=0)


@pytest.mark.parametrize("claim", ALL_CLAIMS)
def test_each_suite_passes_at_smoke_budget(claim):
    report = verify(claim, seed=42, **FAST)
    assert isinstance(report, VerificationReport)
    assert report.passed, f"{claim}: worst={report.worst_residual}"
    assert report.worst_residual <= report.tolerance
    assert report.trials == len(report.details)
    assert report.seed == 42
    assert all(d["residual"] >= 0.0 for d in report.details)


def test_report_passed_tracks_tolerance():
    report = verify("monotone_p", trials=3)
    assert report.passed == (report.worst_residual <= report.tolerance)


def test_fixed_case_suites_ignore_trials():
    a = verify("transpose_instability", **FAST)
    b = verify("transpose_instability", trials=9, restarts=FAST["restarts"])
    assert a.trials == b.trials == 12
    cases = [d["case"] for d in a.details]
    assert "transpose(2) stabilized p=1.0" in cases
    assert "transpose(3) stabilized p=2.0" in cases


def test_counterexample_suite_cross_checks_oracle():
    report = verify("prop_counterexamples", trials=1, restarts=16)
    oracle_cases = [d for d in report.details if "oracle" in d["case"]]
    assert len(oracle_cases) == 1
    assert oracle_cases[0]["expected"] == pytest.approx(math.sqrt(2.0))
    assert oracle_cases[0]["residual"] <= 1e-3


def test_report_json_shape_and_key_order():
    report = verify("duality", trials=2)
    text = report.to_json()
    assert text == report.to_json()
    obj = json.loads(text)
    assert list(obj) == ["claim_id", "trials", "worst_residual", "tolerance", "passed", "seed", "details"]
    assert obj["claim_id"] == "duality"
    assert isinstance(obj["details"], list) and len(obj["details"]) == 2


def test_verify_is_deterministic_in_the_seed():
    a = verify("hoelder", seed=5, trials=3)
    b = verify("hoelder", seed=5, trials=3)
    c = verify("hoelder", seed=6, trials=3)
    assert a.to_json() == b.to_json()
    assert a.to_json() != c.to_json()
