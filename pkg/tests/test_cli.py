import json

import pytest

from thetaorbits.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def jsonl(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_orbits_a5(capsys, tmp_path):
    code, out, _ = run(capsys, "orbits", "--group", "A5", "--u", "(1,2)(3,4)", "--json",
                       "--cache-dir", str(tmp_path))
    assert code == 0
    (rec,) = jsonl(out)
    assert rec["payload"]["beta"] == 8
    assert rec["format"] == 1 and rec["tool"] == "thetaorbits"
    assert rec["config"]["group"] == "A5"


def test_orbits_abelian_all_zero(capsys):
    code, out, _ = run(capsys, "orbits", "--group", "C6", "--restrict", "all", "--json", "--no-cache")
    assert code == 0
    recs = jsonl(out)
    assert len(recs) == 6
    assert all(r["payload"]["beta"] == 0 for r in recs)


def test_orbits_sz8_involutions(capsys):
    code, out, _ = run(capsys, "orbits", "--group", "Sz:8", "--restrict", "involutions", "--json")
    assert code == 0
    recs = jsonl(out)
    assert len(recs) == 1                       # one class of involutions
    assert recs[0]["payload"]["beta"] >= 8


def test_table_mode_carries_same_numbers(capsys):
    code, out, _ = run(capsys, "orbits", "--group", "A5", "--u", "(1,2)(3,4)")
    assert code == 0
    assert "beta = 8" in out
    assert "2:4, 4:4" in out


@pytest.mark.parametrize("spec,order,index", [("prod(A5,S4)", 24, 60), ("S4", 24, 1), ("SL2:5", 2, 60)])
def test_radical(capsys, spec, order, index):
    code, out, _ = run(capsys, "radical", "--group", spec, "--json")
    assert code == 0
    p = jsonl(out)[0]["payload"]
    assert (p["radical_order"], p["index"]) == (order, index)
    assert p["certificate"]["maximal"]


def test_soluble_classes_order_beta(capsys):
    code, out, _ = run(capsys, "soluble", "--group", "S4", "--json")
    p = jsonl(out)[0]["payload"]
    assert code == 0 and p["soluble"] and p["theta_kappa_two_elements"] == 0
    code, out, _ = run(capsys, "classes", "--group", "A5", "--json")
    assert code == 0 and len(jsonl(out)) == 5
    code, out, _ = run(capsys, "order", "--group", "PSL3:3", "--json")
    assert code == 0 and jsonl(out)[0]["payload"]["enumerated"] == 5616
    code, out, _ = run(capsys, "beta", "--group", "A5", "--restrict", "involutions", "--json")
    assert code == 0 and jsonl(out)[0]["payload"]["beta"] == 8


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--q", "8", "--json",
                       "--element", "[[0,0,0,1],[0,0,1,0],[0,1,0,0],[1,0,0,0]]")
    assert code == 0
    p = jsonl(out)[0]["payload"]
    assert (p["a"], p["b"], p["k"], p["c"], p["d"]) == ("0", "0", "1", "0", "0")
    code, out, _ = run(capsys, "decompose", "--q", "8", "--element",
                       "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]")
    assert code == 0 and "Borel" in out


def test_verify_pass_and_fail(capsys):
    code, out, _ = run(capsys, "verify", "a5", "--json")
    assert code == 0
    assert jsonl(out)[0]["payload"]["status"] == "pass"
    code, out, _ = run(capsys, "verify", "suzuki.q8")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "lemma1.d.A5xA5")
    assert code == 1


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "prop2", "--list")
    assert code == 0 and "prop2.L2_32" in out.split()


@pytest.mark.parametrize("argv,code", [
    (["verify", "no.such.claim"], 2),
    (["orbits", "--group", "Q9"], 2),
    (["orbits", "--group", "A5", "--u", "(1,2)"], 2),      # odd permutation is not in A5
    (["orbits", "--group", "A12", "--cap", "1000"], 3),
    (["orbits", "--group", "A5", "--cap", "0"], 2),
    (["frobnicate"], 2),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code
