import io
import json

import pytest

from rsdeep.cli import run


def invoke(argv):
    out = io.StringIO()
    code = run(argv, out=out)
    text = out.getvalue()
    return code, (json.loads(text) if text.lstrip().startswith("{") else text)


def test_field_info():
    code, rep = invoke(["field", "info", "--p", "3", "--h", "2"])
    assert code == 0
    assert rep["q"] == 9 and rep["modulus"] == [1, 0, 1]


def test_code_build():
    code, rep = invoke(["code", "build", "--p", "7", "--k", "3",
                        "--eval", "0,1,2,3,4"])
    assert code == 0
    assert rep["n"] == 5 and len(rep["G"]) == 3 and len(rep["H"]) == 2


def test_mds_check():
    code, rep = invoke(["code", "mds-check", "--p", "5", "--k", "2",
                        "--eval", "0,1,2,3"])
    assert code == 0 and rep["mds"]


def test_deephole_verify_example():
    code, rep = invoke(["deephole", "verify", "--p", "7", "--k", "3",
                        "--eval", "0,1,2,3,4,5"])
    assert code == 0
    assert rep["match"]
    assert rep["bruteforce"]["count"] == 2 == rep["theorem"]["count"]


def test_radius_full_line():
    code, rep = invoke(["radius", "--p", "2", "--h", "2", "--k", "2",
                        "--full-line"])
    assert code == 0 and rep["radius"] == 3


def test_extend_roth_seroussi():
    code, rep = invoke(["extend", "roth-seroussi", "--p", "5", "--k", "3",
                        "--n", "5"])
    assert code == 0 and rep["match"]
    assert rep["bruteforce"]["points"] == [[0, 0, 1]]


def test_rnc_complete():
    code, rep = invoke(["rnc", "complete", "--p", "5", "--n", "3"])
    assert code == 0 and rep["complete"]
    code, rep = invoke(["rnc", "complete", "--p", "2", "--h", "2",
                        "--n", "3"])
    assert code == 0 and not rep["complete"]


def test_orbits_decompose():
    code, rep = invoke(["orbits", "decompose", "--p", "5"])
    assert code == 0
    assert rep["orbit_sizes"] == {"O1_RNC": 6, "O2": 15, "O3": 10}


def test_orbits_stabilizer():
    code, rep = invoke(["orbits", "stabilizer", "--p", "5",
                        "--family", "O2"])
    assert code == 0 and rep["order"] == 8


def test_red3_verify_seeded():
    code, rep = invoke(["red3", "verify", "--p", "3", "--h", "2",
                        "--k", "3", "--seed", "11"])
    assert code == 0 and rep["match"]
    assert rep["seed"] == 11
    # same seed, same output
    code2, rep2 = invoke(["red3", "verify", "--p", "3", "--h", "2",
                          "--k", "3", "--seed", "11"])
    assert rep2 == rep


def test_arcs_count_with_enumeration():
    code, rep = invoke(["arcs", "count", "--p", "2", "--h", "2", "--n", "5",
                        "--family", "M1", "--enumerate"])
    assert code == 0
    assert rep["counts"]["closed_form"] == 120
    assert rep["counts"]["enumerated"] == 120
    assert rep["counts"]["arc_pairs"] == 2


def test_arcs_canonical_fixture(tmp_path):
    fx = tmp_path / "ext.json"
    fx.write_text(json.dumps({
        "field": {"p": 2, "h": 3},
        "matrix": [[1, 1, 1, 1, 1, 1],
                   [0, 1, 2, 3, 4, 0],
                   [0, 1, 4, 5, 6, 1]]}))
    code, rep = invoke(["arcs", "canonical", "--fixture", str(fx)])
    assert code == 0
    assert rep["family"] == "M3"


def test_hyperoval_classes():
    code, rep = invoke(["hyperoval", "classes", "--p", "2", "--h", "2"])
    assert code == 0 and rep["match"] and rep["count"] == 1


def test_conjecture_check():
    code, rep = invoke(["conjecture", "check", "--p", "5", "--k", "2"])
    assert code == 0 and rep["holds"]


def test_bad_args_exit_2():
    code, rep = invoke(["deephole", "enumerate", "--p", "13", "--k", "99"])
    assert code == 2
    code, _ = invoke(["orbits", "stabilizer", "--p", "5"])
    assert code == 2   # missing --family


def test_csv_format():
    out = io.StringIO()
    code = run(["deephole", "enumerate", "--p", "5", "--k", "3",
                "--n", "5", "--format", "csv"], out=out)
    assert code == 0
    lines = out.getvalue().strip().splitlines()
    assert lines[0] == "syndrome,witness,delta"
    assert len(lines) == 2


def test_fixture_errors(tmp_path):
    from rsdeep.fixtures import FixtureError, load_fixture
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"field": {"p": 5}, "k": 2,
                               "eval": [0, 1, 1, 2]}))
    with pytest.raises(FixtureError):
        load_fixture(str(bad))
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"field": {"p": 7}, "k": 3,
                                "eval": [0, 1, 2, 3, 4]}))
    F, code_obj, matrix = load_fixture(str(good))
    assert code_obj.n == 5 and matrix is None
    mism = tmp_path / "mism.json"
    mism.write_text(json.dumps({"field": {"p": 7}, "k": 3,
                                "eval": [0, 1, 2, 3, 4],
                                "matrix": [[1, 1, 1, 1, 1],
                                           [0, 1, 2, 3, 4],
                                           [0, 1, 4, 2, 3]]}))
    with pytest.raises(FixtureError):
        load_fixture(str(mism))
