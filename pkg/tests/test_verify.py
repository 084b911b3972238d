import json

import pytest

from transirr.verify import THEOREMS, VerifyError, evaluate_point, parse_range, theorem_points, verify

CLEAN = ["P1.2", "P1.3", "P1.5", "T2", "C2.3", "C2.4", "T2.5", "T2.6", "L3.2", "T3.3", "T3.5", "P4.1", "T4.2", "Dp-layers", "Ai-layers"]
WITH_FINDINGS = ["T1", "T3.1", "C3.4", "R3", "ClaimA-layers"]


def test_registry_is_complete():
    assert set(THEOREMS) == set(CLEAN) | set(WITH_FINDINGS)


def test_parse_range():
    assert parse_range("a=1..4") == ("a", [1, 2, 3, 4])
    assert parse_range("k = 5,2,3..4") == ("k", [2, 3, 4, 5])
    for bad in ["a", "=1..2", "a=x..3", "a=4..1"]:
        with pytest.raises(VerifyError):
            parse_range(bad)


def test_theorem_points_errors():
    with pytest.raises(VerifyError, match="unknown theorem"):
        theorem_points("T9")
    with pytest.raises(VerifyError, match="takes ranges"):
        theorem_points("T2", {"z": [1]})
    with pytest.raises(VerifyError, match="no feasible"):
        theorem_points("T1", {"k1": [5], "k2": [3], "k3": [4]})


def test_t26_points_stay_in_window():
    for p in theorem_points("T2.6"):
        assert (p["k"] + 2 * p["a"]) % 4 == 2


@pytest.mark.parametrize("theorem", CLEAN)
def test_clean_theorems_exit_zero(theorem):
    report = verify(theorem)
    assert report.exit_code == 0, report.summary()["mismatches"][:3]
    assert report.points == report.agreements + report.no_verdict


@pytest.mark.parametrize("theorem", WITH_FINDINGS)
def test_findings_are_discrepancies_not_errors(theorem):
    report = verify(theorem)
    assert not report.has_errors
    assert report.exit_code == 3
    assert all(m["category"] == "discrepancy" for m in report.mismatches)


def test_r3_mismatch_is_only_a3():
    report = verify("R3")
    assert [m["params"] for m in report.mismatches] == [{"a": 3}]


def test_c34_mismatches():
    report = verify("C3.4")
    assert [m["params"]["a"] for m in report.mismatches] == [2, 6, 9]


def test_parallel_matches_serial():
    ranges = {"a": list(range(1, 6)), "k": list(range(2, 6))}
    serial = verify("T3.1", ranges)
    parallel = verify("T3.1", ranges, jobs=2)
    assert serial.records == parallel.records


def test_resume_from_report(tmp_path):
    out = tmp_path / "r.jsonl"
    first = verify("T2", {"a": [1, 2], "k": [2, 3]}, out=str(out))
    assert len(out.read_text().splitlines()) == 4
    second = verify("T2", {"a": [1, 2, 3], "k": [2, 3]}, out=str(out))
    lines = [json.loads(x) for x in out.read_text().splitlines()]
    assert len(lines) == 6
    assert second.records[:2] == first.records[:2]


def test_record_shape():
    rec = evaluate_point("C2.4", {"a": 2})
    assert rec["verdict"] == "NotIrregular" and rec["oracle_irregular"] is False
    assert rec["outcome"] == "agree"
    assert rec["checks"][0]["ok"]
