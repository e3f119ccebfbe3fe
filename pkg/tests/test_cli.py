import json

import pytest

from spinweil.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def run_json(capsys, *argv):
    rc, out = run(capsys, *argv, "--json")
    return rc, json.loads(out)


B_JSON = ('[["0","1","0","0"],["-1","0","0","0"],'
          '["0","0","0","2"],["0","0","-2","0"]]')


def test_spinor_forward(capsys):
    rc, doc = run_json(capsys, "spinor", "--B", B_JSON)
    assert rc == 0
    assert doc["z"] == ["1", "1", "0", "0", "2", "-2", "0", "0"]
    assert doc["isotropic"] is True


def test_spinor_invert(capsys):
    rc, doc = run_json(capsys, "spinor", "--invert",
                       '["1","1","0","0","2","-2","0","0"]')
    assert rc == 0
    assert doc["B"][0][1] == "1"
    assert doc["B"][2][3] == "2"
    assert doc["roundtrip_z"] == ["1", "1", "0", "0", "2", "-2", "0", "0"]


def test_spinor_roundtrip_through_input(capsys, tmp_path):
    rc, doc = run_json(capsys, "spinor", "--B", B_JSON)
    path = tmp_path / "spinor.json"
    path.write_text(json.dumps(doc))
    rc2, doc2 = run_json(capsys, "spinor", "--input", str(path))
    assert rc2 == 0
    assert doc2 == doc


def test_spinor_invert_requires_isotropic(capsys):
    rc = main(["spinor", "--invert", '["1","0","0","0","1","0","0","0"]'])
    assert rc == 1


def test_spinor_needs_an_input(capsys):
    rc = main(["spinor"])
    assert rc == 2


def test_malformed_json_is_usage_error(capsys):
    rc = main(["spinor", "--B", "[[not json"])
    assert rc == 2


def test_unknown_verb_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_cayley_n_two(capsys):
    rc, doc = run_json(capsys, "cayley", "--n", "2")
    assert rc == 0
    assert doc["closed_form_constant"] == "1/4"
    # the closed form for n = 2 is -2 alpha^2 + 16 beta + 4 gamma
    closed = {tuple(t["indices"]): t["coeff"] for t in doc["closed_form"]}
    assert closed[(1, 2, 3, 4)] == "16"
    assert closed[(5, 6, 7, 8)] == "4"
    assert closed[(1, 2, 5, 6)] == "4"  # -2 * (-2) on the sorted blade


def test_cayley_roundtrip_through_input(capsys, tmp_path):
    rc, doc = run_json(capsys, "cayley", "--n", "3")
    path = tmp_path / "cayley.json"
    path.write_text(json.dumps(doc))
    rc2, doc2 = run_json(capsys, "cayley", "--input", str(path))
    assert rc2 == 0 and doc2 == doc


def test_weil_family_default(capsys):
    rc, doc = run_json(capsys, "weil-family", "--seed", "5")
    assert rc == 0
    assert doc["report"]["discriminant_trivial"] is True
    assert doc["d"] == "4"
    assert doc["h2_split"]["profile"] == [16, 6, 6]


def test_weil_family_roundtrip(capsys, tmp_path):
    rc, doc = run_json(capsys, "weil-family", "--seed", "5")
    path = tmp_path / "weil.json"
    path.write_text(json.dumps(doc))
    rc2, doc2 = run_json(capsys, "weil-family", "--input", str(path))
    assert rc2 == 0 and doc2 == doc


def test_weil_field_scan(capsys):
    rc, doc = run_json(capsys, "weil-family", "--field-scan", "--seed", "5")
    assert rc == 0
    parts = [row["squarefree_part"] for row in doc["fields"]]
    assert parts == [1, 2, 3, 5]
    assert all(row["discriminant_trivial"] for row in doc["fields"])


def test_ks_verb(capsys):
    rc, doc = run_json(capsys, "ks", "--seed", "5")
    assert rc == 0
    assert doc["report"]["even_algebra_dim"] == 32
    assert doc["report"]["center_center_dim"] == 2


def test_invariants_verb(capsys):
    rc, doc = run_json(capsys, "invariants")
    assert rc == 0
    assert doc["stabilizer_of_spinor_dim"] == 21
    assert doc["stabilizer_of_pair_dim"] == 15


def test_verify_single_suite(capsys):
    rc, doc = run_json(capsys, "verify", "--suite", "mukai")
    assert rc == 0
    assert all(r["passed"] for r in doc["results"])


def test_verify_unknown_suite(capsys):
    rc = main(["verify", "--suite", "nonsense"])
    assert rc == 2
