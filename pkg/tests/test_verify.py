import json

from kleinepw import verify


def test_registry_integrity():
    ids = [cid for cid, _, _, _ in verify.CHECKS]
    assert len(ids) == len(set(ids)), "duplicate check ids"
    for cid, suites, statement, _ in verify.CHECKS:
        assert suites <= set(verify.SUITES) - {"all"}
        assert statement and len(statement) < 120
    # every suite selects at least one check
    for suite in verify.SUITES:
        if suite == "all":
            continue
        assert any(suite in suites for _, suites, _, _ in verify.CHECKS), suite


def test_reports_are_ordered_and_serializable():
    ctx = verify.VerifyContext()
    reports = verify.run_suite("hermitian", ctx)
    ids = [r.check_id for r in reports]
    assert ids == sorted(ids)
    for r in reports:
        payload = json.dumps(r.to_json())
        assert "verdict" in payload
    assert verify.exit_code(reports) == 0


def test_skipped_checks_do_not_fail_exit_code():
    ctx = verify.VerifyContext(slow=False, primes=(101,))
    skipped = verify.VerificationReport("x", "s", verify.SKIP)
    passed = verify.VerificationReport("y", "s", verify.PASS)
    failed = verify.VerificationReport("z", "s", verify.FAIL)
    assert verify.exit_code([skipped, passed]) == 0
    assert verify.exit_code([skipped, passed, failed]) == 1
    assert verify.exit_code([verify.VerificationReport("w", "s", verify.BUDGET)]) == 1


def test_frac_and_cyclo_serialization():
    from fractions import Fraction

    from kleinepw.cyclo import CycloNum, lambda_embed

    assert verify.frac_str(Fraction(3, 2)) == "3/2"
    assert verify.frac_str(Fraction(4, 2)) == "2"
    lam = lambda_embed()
    blob = verify.cyclo_json(lam)
    assert blob["pretty"] == "λ"
    assert blob["coefficients"][1] == "1"
    blob = verify.cyclo_json(lam.conj())
    assert blob["pretty"] == "λ̄"
    blob = verify.cyclo_json(CycloNum.from_rational(Fraction(-1, 2), 11))
    assert blob["pretty"] == "-1/2"
