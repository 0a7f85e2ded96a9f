import json

import pytest

from thetaorbits import verify as V


def test_ids_unique_and_selectable():
    ids = V.claim_ids()
    assert len(ids) == len(set(ids))
    assert V.select("prop2") == [i for i in ids if i.startswith("prop2.")]
    assert V.select("suzuki.q8") == ["suzuki.q8"]
    assert V.select("all") == ids
    assert V.select("suzuki.q") == []          # prefixes match whole id segments
    with pytest.raises(KeyError):
        V.run("nothing")


def test_records_are_json_and_reproducible():
    a = V.run_claim("a5").to_record()
    b = V.run_claim("a5").to_record()
    a.pop("seconds"), b.pop("seconds")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a["status"] == "pass"


def test_lemma3_precondition_skips():
    r = V.verify_lemma3(9, 1)
    assert r.status == "skipped" and "m >= 2" in r.reason


def test_lambda_counts():
    assert V.lambda_count(13) == (4, 4)
    assert V.lambda_count(7) == (2, 2)
    for q in (5, 9, 11, 25, 27):
        got, want = V.lambda_count(q)
        assert got == want


def test_minimal_non_soluble():
    from thetaorbits.families import cached_group
    assert V.minimal_non_soluble(cached_group("A5"))[0]
    assert not V.minimal_non_soluble(cached_group("S5"))[0]     # contains A5
    assert not V.minimal_non_soluble(cached_group("S4"))[0]


def test_trivially_tight_instance():
    r = V.run_claim("lemma2.A5")
    assert r.status == "pass"
    assert r.measured["rhs"] == r.measured["beta_L"] == r.measured["beta_G"] == 8


def test_bound_check_fields():
    bc = V.theorem_bounds("A5")
    assert (bc.kappa, bc.radical_index, bc.simple) == (8, 60, True)
    assert bc.bound_exponent == 200
    soluble = V.theorem_bounds("S4")
    assert soluble.kappa == 0 and soluble.radical_index == 1


def test_floor_loglog():
    assert V.floor_loglog8(8) == 0
    assert V.floor_loglog8(8 ** 8 - 1) == 0
    assert V.floor_loglog8(8 ** 8) == 1


def test_engel_small_cases():
    assert V.run_claim("engel_affine.q5").status == "pass"
    assert V.run_claim("engel_affine.q8").status == "pass"


def test_product_claim_records_gcd_sum():
    r = V.run_claim("lemma1.d_bound.A5xA5")
    assert r.status == "pass"
    assert r.measured["gcd_sum"] == r.measured["beta_product_plus_1"] == 177
