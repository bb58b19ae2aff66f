import contextlib
import io
import json

from affinestrata.cli import run_cli


def run(args):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = run_cli(args)
    return code, out.getvalue(), err.getvalue()


M1_0 = '{"type":"A","coeffs":["1","0","0","1","0","0"]}'
M5_1_POS = '{"type":"A","coeffs":["1","0","0","0","2","2"]}'
M5_1_NEG = '{"type":"A","coeffs":["1","0","0","0","2","-2"]}'


def test_classify_command():
    code, out, _ = run(["classify", M1_0])
    assert code == 0
    doc = json.loads(out)
    assert doc["orbit"]["id"] == "M1_0"
    assert doc["flags"]["primary"] == "flat"


def test_classify_parse_error_exit_2():
    code, out, err = run(["classify", '{"type":"A","coeffs":["1","0"]}'])
    assert code == 2
    assert out == ""
    assert json.loads(err)["error"] == "usage"


def test_ricci_command():
    code, out, _ = run(["ricci", '{"type":"B","coeffs":["0","3","1","0","0","1"]}'])
    assert code == 0
    doc = json.loads(out)
    assert doc["cleared"] is True
    assert doc["ricci"] == [["0", "1"], ["-1", "0"]]
    assert doc["alternating"] == "1"


def test_equiv_command():
    code, out, _ = run(["equiv", M5_1_POS, M5_1_NEG])
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "equivalent"
    assert [["1", "0"], ["0", "-1"]] in doc["witnesses"]
    code, out, _ = run(["equiv", M1_0, '{"type":"A","coeffs":["0","0","0","0","0","0"]}'])
    assert code == 1
    assert json.loads(out)["status"] == "not_equivalent"


def test_equiv_mixed_types_is_usage_error():
    code, _, err = run(["equiv", M1_0, '{"type":"B","coeffs":["0","0","0","0","0","0"]}'])
    assert code == 2
    assert json.loads(err)["error"] == "usage"


def test_isotropy_command():
    code, out, _ = run(["isotropy", '{"type":"A","coeffs":["0","0","0","0","1","0"]}'])
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == 2
    assert doc["families"][0]["template"] == "[[a^2, b], [0, a]]"
    # rank-two input is honestly undecided
    code, out, _ = run(["isotropy", '{"type":"A","coeffs":["0","1","0","0","1","0"]}'])
    assert code == 1
    assert json.loads(out)["status"] == "undecided"


def test_param_command():
    code, out, _ = run(["param", "M2_1", "-1/2"])
    assert code == 0
    assert json.loads(out)["coeffs"] == ["-1", "0", "-1/2", "0", "0", "0"]
    code, out, _ = run(["param", "V1", "1", "0", "3"])
    assert code == 0
    assert json.loads(out)["coeffs"] == ["0", "3", "1", "0", "0", "1"]
    code, out, _ = run(["param", "flat_a", "0", "1", "1", "0"])
    assert code == 0
    assert json.loads(out)["coeffs"] == ["2", "0", "0", "2", "1", "0"]
    code, _, err = run(["param", "M2_1", "0"])
    assert code == 2  # constraint violation reported as usage
    code, _, err = run(["param", "NOPE"])
    assert code == 2


def test_catalog_command():
    code, out, _ = run(["catalog"])
    assert code == 0
    doc = json.loads(out)
    ids = {e["id"] for e in doc["catalog"]}
    assert {"M0_0", "M5_1", "N2_0", "N1_alt", "N2_alt+"} <= ids
    entry = next(e for e in doc["catalog"] if e["id"] == "M2_1")
    assert entry["arity"] == 1 and entry["constraints"]


def test_verify_command_deterministic():
    code1, out1, _ = run(["verify", "--seed", "1", "--samples", "3"])
    code2, out2, _ = run(["verify", "--seed", "1", "--samples", "3"])
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["all_passed"] is True


def test_verify_check_filter():
    code, out, _ = run(["verify", "--seed", "1", "--samples", "2", "--check", "action_laws"])
    assert code == 0
    doc = json.loads(out)
    assert [c["id"] for c in doc["checks"]] == ["action_laws"]


def test_stdin_input(monkeypatch):
    import sys

    monkeypatch.setattr(sys, "stdin", io.StringIO(M1_0))
    code, out, _ = run(["ricci", "-"])
    assert code == 0
    assert json.loads(out)["ricci"] == [["0", "0"], ["0", "0"]]


def test_file_input(tmp_path):
    path = tmp_path / "model.json"
    path.write_text(M1_0, encoding="utf-8")
    code, out, _ = run(["classify", f"@{path}"])
    assert code == 0
    assert json.loads(out)["orbit"]["id"] == "M1_0"
    code, _, err = run(["classify", "@/nonexistent/path.json"])
    assert code == 2
