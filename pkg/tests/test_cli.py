import io
import json
import subprocess
import sys

import pytest

from bruhatpipes.cli import main
from bruhatpipes.perm import parse_perm
from bruhatpipes.poly import Polynomial, monomial, schubert

FLIP_IN = ["2,1,4,3", "2,3,4,1", "2,4,3,1", "4,3,2,1"]
FLIP_OUT = ["2,1,4,3", "4,1,3,2", "4,3,1,2", "4,3,2,1"]
BPD_CHAIN = ["2,1,6,5,3,4", "2,1,6,5,4,3", "3,1,6,5,4,2", "3,5,6,4,2,1", "4,6,5,3,2,1", "6,5,4,3,2,1"]


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), stdout=out)
    return code, out.getvalue()


def lines(text):
    return [json.loads(x) for x in text.splitlines() if x.strip()]


def test_enum_counts():
    want = schubert((2, 5, 1, 4, 3)).evaluate_ones()
    assert run(["enum", "bpd", "--perm", "25143", "--format", "count"]) == (0, f"{want}\n")
    assert run(["enum", "pd", "--perm", "25143", "--format", "count"]) == (0, f"{want}\n")
    assert run(["enum", "hpd", "--perm", "25143", "--tau", "PBBPB", "--format", "count"]) == (0, f"{want}\n")
    assert run(["enum", "pd", "--perm", "21", "--format", "count"]) == (0, "1\n")
    assert run(["enum", "ft", "--perm", "2,5,1,4,3", "--format", "count"]) == (0, f"{want}\n")
    assert run(["enum", "chains", "--perm", "25143", "--gamma", "1,4,2,3", "--format", "count"]) == (0, f"{want}\n")


def test_enum_json_lines():
    code, out = run(["enum", "bpd", "--perm", "132"])
    assert code == 0
    objs = lines(out)
    assert {o["kind"] for o in objs} == {"bpd"}
    assert sorted(tuple(o["weight"]) for o in objs) == [(0, 1), (1, 0)]
    code, out = run(["enum", "chains", "--perm", "2143", "--gamma", "321"])
    assert code == 0
    total = Polynomial()
    for o in lines(out):
        total = total + monomial(o["weight"])
    assert total == schubert((2, 1, 4, 3))


def test_enum_ascii():
    code, out = run(["enum", "pd", "--perm", "21", "--format", "ascii"])
    assert (code, out) == (0, "+r\nr\n")


def test_enum_errors():
    assert run(["enum", "bpd", "--perm", "1,1,2"])[0] == 2
    assert run(["enum", "hpd", "--perm", "123"])[0] == 2
    assert run(["enum", "hpd", "--perm", "123", "--tau", "PB"])[0] == 2
    assert run(["enum", "chains", "--perm", "123"])[0] == 2
    assert run(["enum", "nope", "--perm", "123"])[0] == 2


def test_schubert_methods_agree():
    code, out = run(["schubert", "--perm", "132", "--method", "dd"])
    assert (code, out) == (0, "x1 + x2\n")
    assert run(["schubert", "--perm", "12", "--method", "bpd"]) == (0, "1\n")
    dd = run(["schubert", "--perm", "25143", "--method", "dd", "--json"])[1]
    for method in ("transition", "pd", "bpd"):
        assert json.loads(run(["schubert", "--perm", "25143", "--method", method, "--json"])[1])["polynomial"] == \
            json.loads(dd)["polynomial"]
    chain = run(["schubert", "--perm", "25143", "--method", "chain", "--gamma", "1,4,2,3", "--json"])[1]
    assert json.loads(chain)["polynomial"] == json.loads(dd)["polynomial"]
    assert run(["schubert", "--perm", "25143", "--method", "chain"])[0] == 2


def test_map_flip_and_unflip():
    code, out = run(["map", "flip"], json.dumps(FLIP_IN))
    assert code == 0 and json.loads(out) == FLIP_OUT
    code, out = run(["map", "unflip"], json.dumps(FLIP_OUT))
    assert code == 0 and json.loads(out) == FLIP_IN
    code, out = run(["map", "flip", "--roundtrip"], json.dumps(FLIP_IN))
    assert code == 0 and json.loads(out)["ok"]


def test_map_chain_bpd_round_trip():
    code, out = run(["map", "chain-bpd", "--inverse"], json.dumps(BPD_CHAIN))
    assert code == 0
    D = json.loads(out)
    assert D["kind"] == "bpd"
    code, out = run(["map", "chain-bpd"], json.dumps(D))
    assert code == 0 and json.loads(out) == BPD_CHAIN


def test_map_phi_then_psi_inverse():
    D = run(["map", "chain-bpd", "--inverse"], json.dumps(BPD_CHAIN))[1]
    code, T = run(["map", "phi"], D)
    assert code == 0 and json.loads(T)["kind"] == "ft"
    code, out = run(["map", "psi", "--inverse"], T)
    assert code == 0 and json.loads(out) == BPD_CHAIN
    code, out = run(["map", "phi", "--inverse"], T)
    assert code == 0 and json.loads(out) == json.loads(D)


def test_map_chain_pd_and_tau():
    pd_chain = ["2,5,1,4,3", "5,3,1,4,2", "5,4,1,3,2", "5,4,3,2,1", "5,4,3,2,1"]
    code, out = run(["map", "chain-pd", "--inverse", "--roundtrip"], json.dumps(pd_chain))
    assert code == 0 and json.loads(out)["ok"]
    tau_chain = ["2,5,1,4,3", "5,3,1,4,2", "5,3,1,4,2", "5,4,1,3,2", "5,4,3,2,1"]
    code, out = run(["map", "chain-tau", "--inverse", "--tau", "PBBPB"], json.dumps(tau_chain))
    assert code == 0
    H = json.loads(out)
    assert H["tiles"] == ["+~~+j", "|L++-", "|.|L-", "+-j..", "L----"]
    assert run(["map", "chain-tau", "--inverse"], json.dumps(tau_chain))[0] == 2


def test_map_growth():
    doc = {"k1": 2, "k2": 3, "c1": ["2,1,4,3", "2,4,1,3", "3,4,1,2"], "c2": ["3,4,1,2", "3,4,2,1"]}
    code, out = run(["map", "growth", "--roundtrip"], json.dumps(doc))
    assert code == 0
    res = json.loads(out)
    assert res["ok"]
    assert res["image"] == {"k1": 3, "k2": 2, "c1": ["2,1,4,3", "2,3,4,1"], "c2": ["2,3,4,1", "2,4,3,1", "3,4,2,1"]}


def test_map_json_lines_input():
    text = json.dumps(FLIP_IN) + "\n" + json.dumps(["4,3,2,1"] * 4) + "\n"
    code, out = run(["map", "flip"], text)
    assert code == 0
    assert lines(out) == [FLIP_OUT, ["4,3,2,1"] * 4]


def test_map_error_codes():
    assert run(["map", "flip"], json.dumps(FLIP_OUT))[0] == 1
    assert run(["map", "flip"], '{"x": 1}')[0] == 2
    assert run(["map", "flip"], "not json")[0] == 2
    assert run(["map", "flip"], "")[0] == 2
    assert run(["map", "chain-bpd"], '{"kind": "pd", "tiles": []}')[0] == 2
    assert run(["map", "growth"], '{"k1": 2}')[0] == 2


def test_verify_examples():
    code, out = run(["verify", "theorem-4-2", "--n", "3"])
    rep = json.loads(out)
    assert code == 0 and rep["cases"] == 6 and rep["failures"] == []
    code, out = run(["verify", "corollary-2-9", "--n", "2"])
    rep = json.loads(out)
    assert code == 0 and rep["cases"] == 2
    code, out = run(["verify", "conjecture-7-1", "--n", "4"])
    assert code == 0 and json.loads(out)["failures"] == []
    assert set(rep) == {"check", "n", "cases", "failures", "elapsed_ms"}


def test_verify_errors():
    assert run(["verify", "no-such-check"])[0] == 2
    assert run(["verify", "eq-3", "--n", "0"])[0] == 2
    assert run(["verify", "eq-3", "--jobs", "0"])[0] == 2


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "bruhatpipes.cli", "schubert", "--perm", "312"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout == "x1^2\n"
    assert parse_perm("312") == (3, 1, 2)
