import json

import pytest

from checkerboard import verify


@pytest.mark.parametrize("suite", ["crossmethod", "identities", "noncomm", "eulerian", "fair", "ideal"])
def test_suites_pass_with_small_parameters(suite):
    rep = verify.run_suite(suite, verify.VerifyParams(d_max=3, n_max=12, order=20))
    assert rep.passed, rep.to_text()


def test_misprint_is_expected_not_failed():
    rep = verify.run_suite("specializations", verify.VerifyParams(order=30))
    statuses = {c.name: c.status for c in rep.checks}
    assert statuses["printed_array_misprint"] == "expected"
    assert rep.exit_code == 0


def test_skipped_ideal_without_flag():
    rep = verify.run_suite("ideal", verify.VerifyParams(d_max=5))
    assert [c.status for c in rep.checks] == ["pass", "pass", "pass", "skipped"]
    assert rep.passed


def test_report_json_is_deterministic():
    p = verify.VerifyParams(d_max=2, n_max=8)
    a = json.dumps(verify.run_suite("crossmethod", p).to_json(), sort_keys=True)
    b = json.dumps(verify.run_suite("crossmethod", p).to_json(), sort_keys=True)
    assert a == b and "elapsed" not in a


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify.run_suite("nope")
