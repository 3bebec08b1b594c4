import json

import pytest

from gl3census import closed_form, verify
from gl3census.modring import factorize
from gl3census.oracle import CountTable


def table(n, counts):
    return CountTable(factorize(n), tuple(counts))


def test_diff_tables_identical_all_pass():
    a = table(3, (3312, 3960, 3960))
    results = verify.diff_tables(a, table(3, (3312, 3960, 3960)))
    assert len(results) == 3
    assert all(r.passed for r in results)


def test_diff_tables_flags_single_difference():
    a = table(3, (3312, 3960, 3960))
    b = table(3, (3311, 3960, 3960))
    results = verify.diff_tables(a, b, check_id="unit-test")
    fails = [r for r in results if not r.passed]
    assert len(fails) == 1
    assert fails[0].check_id == "unit-test"
    assert dict(fails[0].params)["x"] == 0


def test_diff_tables_rejects_modulus_mismatch():
    with pytest.raises(verify.ModulusMismatch):
        verify.diff_tables(table(3, (0, 0, 0)), table(5, (0,) * 5))


def test_check_result_json_shape():
    r = verify.result("demo", 1, 2, p=3, label="C11")
    assert not r.passed and r.status == "fail"
    payload = json.loads(r.to_json())
    assert payload == {
        "check_id": "demo",
        "params": {"label": "C11", "p": 3},
        "expected": 1,
        "actual": 2,
        "status": "fail",
    }


def test_registry_covers_every_claim():
    # each claim must be reachable from the registered checks
    tags = [tag for tag, _ in verify._CHECKS]
    for claim, prefixes in verify.CLAIM_COVERAGE.items():
        hit = any(t.startswith(pref) or pref.startswith(t) for t in tags for pref in prefixes)
        assert hit, claim


def test_corrupted_formula_is_detected(monkeypatch):
    # negative control: a wrong closed form must surface as failures
    real = closed_form.count_prime_zero

    def broken(p):
        return real(p) + (1 if p == 3 else 0)

    monkeypatch.setattr(closed_form, "count_prime_zero", broken)
    ctx = verify._Ctx(profile=verify.QUICK, threads=1, seed=verify.DEFAULT_SEED)
    results = verify._zero_count_branches(ctx)
    assert any(not r.passed for r in results)


def test_quick_suite_passes_and_is_thread_independent():
    one = verify.run_suite("quick", threads=1)
    assert all(r.passed for r in one), [r.to_json() for r in one if not r.passed]
    assert not verify.coverage_gaps(one)
    two = verify.run_suite("quick", threads=2)
    assert verify.to_json_lines(one) == verify.to_json_lines(two)


def test_render_table_summarizes():
    results = [verify.result("demo", 1, 1, p=3), verify.result("demo", 1, 2, p=5)]
    text = verify.render_table(results)
    assert "1/2 checks passed" in text
    assert "FAIL" in text and "PASS" in text
