"""One test per acceptance criterion; each prints a single PASS/FAIL line.

All relations are exact integers.  Run on its own with
``pytest tests/test_acceptance.py -v`` (the summary section lists the lines)
or ``python3 tests/test_acceptance.py``.
"""
import time

import pytest

from thetaorbits import verify as V


def _run(ids):
    return [V.run_claim(c) for c in ids]


def _summary(results):
    bad = [f"{r.claim_id}({r.reason})" for r in results if r.status != "pass"]
    return "; ".join(bad) if bad else f"{len(results)} claims pass"


def _check(acceptance_line, number, ids, label, extra=""):
    t0 = time.perf_counter()
    results = _run(ids)
    ok = all(r.status == "pass" for r in results)
    acceptance_line(number, ok, f"{label}: {_summary(results)}{extra} [{time.perf_counter() - t0:.1f}s]")
    return results, ok


def test_criterion_01_a5_census(acceptance_line):
    t0 = time.perf_counter()
    (r,), ok = _check(acceptance_line, 1, ["a5"], "A5 census")
    assert r.measured["beta"] == 8
    assert r.measured["histogram"] == {2: 4, 4: 4}
    assert ok, r.reason
    assert time.perf_counter() - t0 < 5


def test_criterion_02_minimal_simple_groups(acceptance_line):
    ids = [f"prop2.{n}" for n in ("L2_7", "L2_8", "L2_13", "L2_17", "L2_23", "L2_27", "L2_32", "L3_3", "Sz8")]
    res, ok = _check(acceptance_line, 2, ids, "involution with beta >= 8")
    for r in res:
        assert r.measured["max_involution_beta"] >= 8, r.claim_id
    assert ok


def test_criterion_03_sl2_char2(acceptance_line):
    ids = [f"sl2_char2.q{q}" for q in (4, 8, 16, 32, 64)]
    res, ok = _check(acceptance_line, 3, ids, "Y = 1/y and beta >= (q-2)/2")
    for r, q in zip(res, (4, 8, 16, 32, 64)):
        assert r.measured["identity_holds"] == r.measured["admissible"]
        assert 2 * r.measured["beta"] >= q - 2
    assert ok


def test_criterion_04_sl2_odd(acceptance_line):
    qs = (5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31)
    res, ok = _check(acceptance_line, 4, [f"sl2_odd.q{q}" for q in qs],
                     "lambda count, Y = -1/y, beta >= (q-5)/4")
    for r, q in zip(res, qs):
        assert r.measured["lambda_count"] == r.expected["lambda_count"]
        assert 4 * r.measured["beta"] >= q - 5
    assert ok


def test_criterion_05_basic_properties(acceptance_line):
    ids = ["lemma1.a", "lemma1.b", "lemma1.c.q5", "lemma1.c.q7", "lemma1.c.q9", "lemma1.d.A5xA5"]
    res, ok = _check(acceptance_line, 5, ids, "monotonicity, central quotient, product formula")
    d = res[-1]
    # the product formula is taken literally: beta + 1 must be exactly 81
    assert d.measured["beta_product_plus_1"] == 81, (
        f"measured beta+1 = {d.measured['beta_product_plus_1']} (gcd sum {d.measured['gcd_sum']})")
    assert ok


def test_criterion_06_conjugate_count_bound(acceptance_line):
    res, ok = _check(acceptance_line, 6, ["lemma2.A6", "lemma2.A7"], "beta_G(u) >= |C:C n N| * 8")
    for r in res:
        assert r.measured["beta_L"] == 8
        assert r.measured["beta_G"] >= r.measured["rhs"]
    assert ok


def test_criterion_07_a10(acceptance_line):
    (r,), ok = _check(acceptance_line, 7, ["lemma3.n10_m2"], "|C_A10(u)| = 384, beta >= 576")
    assert r.measured["C_An(u)"] == 384
    assert r.measured["beta"] >= 576
    assert r.seconds < 120
    assert ok


def test_criterion_08_suzuki(acceptance_line):
    res, ok = _check(acceptance_line, 8, ["suzuki.q8", "suzuki.q32"], "Suzuki laws and recurrences")
    q8 = res[0]
    assert q8.measured["C_G(u)"] == 64
    assert q8.measured["beta"] >= 8
    assert ok


def test_criterion_09_engel_affine(acceptance_line):
    _, ok = _check(acceptance_line, 9, [f"engel_affine.q{q}" for q in (4, 5, 7, 8, 9, 16, 32)],
                   "orbit count (q-1)/ord(h-1) in A")
    assert ok


def test_criterion_10_solubility_and_nilpotency(acceptance_line):
    ids = V.select("solubility") + V.select("nilpotency")
    _, ok = _check(acceptance_line, 10, ids, "series verdicts match orbit criteria")
    assert ok


def test_criterion_11_radical_and_bounds(acceptance_line):
    ids = ["radical.prod_A5_S4", "radical.SL25", "bounds.A5", "bounds.SL27", "bounds.prod_A5_S4"]
    res, ok = _check(acceptance_line, 11, ids, "radicals and kappa bounds")
    assert res[0].measured["radical_order"] == 24 and res[0].measured["index"] == 60
    assert res[1].measured["radical_order"] == 2
    assert res[2].measured["kappa"] == 8
    assert ok


def test_criterion_12_engine_cross_validation(acceptance_line):
    ids = V.select("crossval")
    res, ok = _check(acceptance_line, 12, ids, "peeling vs Brent on corpus groups of order <= 1000")
    assert len(res) >= 20
    assert ok


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
