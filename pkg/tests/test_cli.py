import json

import pytest

from haefliger import cli
from haefliger.diagram import diagram_to_dict
from haefliger.generator import generator_diagram
from haefliger.linking import curves_to_dict

from helpers import hopf_link


def run_cli(capsys, *args):
    code = cli.run(list(args))
    out = capsys.readouterr().out
    return code, out


def write_hopf(tmp_path):
    path = tmp_path / "hopf.json"
    path.write_text(json.dumps(curves_to_dict(list(hopf_link()))))
    return str(path)


def write_generator_diagram(tmp_path):
    path = tmp_path / "gen.json"
    path.write_text(json.dumps(diagram_to_dict(generator_diagram(1))))
    return str(path)


def test_lk_command(capsys, tmp_path):
    code, out = run_cli(capsys, "lk", write_hopf(tmp_path))
    assert code == 0
    assert out == "lk: 1\n"


def test_lk_json_with_quadrature(capsys, tmp_path):
    code, out = run_cli(
        capsys, "--format", "json", "lk", write_hopf(tmp_path),
        "--quadrature", "128",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["lk"] == 1
    assert abs(doc["quadrature"] - 1.0) < 1e-2


def test_lk_custom_axis(capsys, tmp_path):
    code, out = run_cli(capsys, "lk", write_hopf(tmp_path), "--axis", "0,1,0")
    assert code == 0
    assert out == "lk: 1\n"


def test_writhe_command(capsys, tmp_path):
    path = tmp_path / "curve.json"
    path.write_text(json.dumps({
        "components": [[[0, 0, 0], [2, 2, 0], [2, 0, 1], [0, 2, 1]]]
    }))
    code, out = run_cli(capsys, "writhe", str(path))
    assert code == 0
    assert out == "writhe_0: -1\n"


def test_delta_h_command(capsys, tmp_path):
    path = write_generator_diagram(tmp_path)
    code, out = run_cli(capsys, "delta-h", path, "--switch", "1")
    assert code == 0
    assert out == "delta_h: 1\n"
    code, out = run_cli(
        capsys, "--format", "json", "delta-h", path, "--switch", "1,2"
    )
    assert json.loads(out) == {"delta_h": {"num": 2, "den": 1}}


def test_vfinite_command(capsys, tmp_path):
    path = write_generator_diagram(tmp_path)
    code, out = run_cli(
        capsys, "--format", "json", "vfinite", path,
        "--indices", "1,2,3", "--h0", "5/3",
    )
    assert code == 0
    assert json.loads(out)["v"] == {"num": 0, "den": 1}
    code, out = run_cli(
        capsys, "--format", "json", "vfinite", path,
        "--indices", "1", "--verbose",
    )
    doc = json.loads(out)
    assert doc["v"] == {"num": 1, "den": 1}
    assert doc["h_S_"] == {"num": 0, "den": 1}
    assert doc["h_S_1"] == {"num": -1, "den": 1}


def test_e_jump_command(capsys):
    code, out = run_cli(
        capsys, "--format", "json", "e-jump",
        "--kind", "indefinite_tangency", "--k", "1", "--index", "1",
        "--joins", "--lk00", "2", "--lk11", "1",
    )
    assert code == 0
    assert json.loads(out)["jump"] == {"num": 3, "den": 4}
    code, out = run_cli(
        capsys, "e-jump", "--kind", "triple_point",
        "--pattern", "i_eq_j",
    )
    assert out == "jump: 0\n"


def test_generator_command(capsys):
    code, out = run_cli(capsys, "--format", "json", "generator", "--k", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["diagram"]["m"] == 6
    assert len(doc["diagram"]["lk"]) == 6
    code, out = run_cli(
        capsys, "--format", "json", "generator", "--curves",
        "--resolution", "16",
    )
    doc = json.loads(out)
    assert len(doc["curves"]["components"]) == 12
    assert len(doc["labels"]) == 12


def test_v2_command(capsys):
    code, out = run_cli(capsys, "v2", "O1+U2+O3+U1+O2+U3+")
    assert code == 0
    assert out == "v2: 1\n"
    code, out = run_cli(
        capsys, "--format", "json", "v2", "O1+U2+O3+U1+O2+U3+", "--verbose"
    )
    doc = json.loads(out)
    assert doc["v2"] == 1
    assert doc["x_pairing"] == 3
    assert doc["descending_set"] == ["2"]


def test_jacobian_command(capsys):
    for k in (1, 2, 3):
        code, out = run_cli(capsys, "jacobian", "--k", str(k))
        assert code == 0
        assert out == "det: -1\n"


def test_murai_ohba_command(capsys, tmp_path):
    code, out = run_cli(
        capsys, "--format", "json", "murai-ohba", write_hopf(tmp_path)
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["delta_h"] == {"num": 1, "den": 1}
    assert doc["switch"] == [1]
    assert doc["diagram"]["m"] == 2


def test_json_output_is_deterministic(capsys, tmp_path):
    path = write_hopf(tmp_path)
    _, first = run_cli(capsys, "--format", "json", "lk", path)
    _, second = run_cli(capsys, "--format", "json", "lk", path)
    assert first == second


def test_error_exit_codes(capsys, tmp_path):
    assert cli.run(["lk", str(tmp_path / "missing.json")]) == 2
    capsys.readouterr()
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "k": 1, "m": 2,
        "lk": [{"i": 1, "ei": 0, "j": 9, "ej": 0, "value": 1}],
    }))
    assert cli.run(["delta-h", str(bad), "--switch", "1"]) == 3
    capsys.readouterr()
    assert cli.run(["v2", "O1+X"]) == 11
    capsys.readouterr()
    assert cli.run(["v2", "O1+U1-"]) == 12
    capsys.readouterr()
