"""Command-line interface behavior and exit codes."""

import json

from click.testing import CliRunner

from coxmut.cli import main
from coxmut.exchange import ExchangeMatrix

A3_JSON = '{"n": 3, "b": [[0, 1, 0], [-1, 0, 1], [0, -1, 0]]}'
B3_JSON = '{"n": 3, "b": [[0, 1, 0], [-1, 0, 1], [0, -2, 0]], "d": [1, 1, 2]}'


def write(path, text):
    with open(path, "w") as fh:
        fh.write(text)


def test_mutate_roundtrip(tmp_path):
    runner = CliRunner()
    inp = tmp_path / "m.json"
    write(inp, A3_JSON)
    result = runner.invoke(main, ["mutate", "-i", str(inp), "-k", "1"])
    assert result.exit_code == 0
    out = ExchangeMatrix.from_json(result.output)
    assert out.b == ((0, -1, 1), (1, 0, -1), (-1, 1, 0))
    # writing to a file and mutating back restores the input
    mid = tmp_path / "mid.json"
    result = runner.invoke(main, ["mutate", "-i", str(inp), "-k", "1", "-o", str(mid)])
    assert result.exit_code == 0
    result = runner.invoke(main, ["mutate", "-i", str(mid), "-k", "1"])
    assert ExchangeMatrix.from_json(result.output) == ExchangeMatrix.from_json(A3_JSON)


def test_mutate_invalid_input_exits_1(tmp_path):
    runner = CliRunner()
    inp = tmp_path / "bad.json"
    write(inp, '{"b": [[0, 1], [-2, 0]]}')
    result = runner.invoke(main, ["mutate", "-i", str(inp), "-k", "0"])
    assert result.exit_code == 1
    assert "skew-symmetrizability" in result.output

    result = runner.invoke(main, ["mutate", "-i", str(tmp_path / "missing.json"), "-k", "0"])
    assert result.exit_code == 1


def test_mutate_vertex_out_of_range_exits_1(tmp_path):
    runner = CliRunner()
    inp = tmp_path / "m.json"
    write(inp, A3_JSON)
    result = runner.invoke(main, ["mutate", "-i", str(inp), "-k", "9"])
    assert result.exit_code == 1


def test_class_lists_members(tmp_path):
    runner = CliRunner()
    inp = tmp_path / "m.json"
    write(inp, A3_JSON)
    result = runner.invoke(main, ["class", "-i", str(inp)])
    assert result.exit_code == 0
    lines = [json.loads(line) for line in result.output.splitlines() if line]
    assert lines[0]["witness"] == []
    assert len(lines) == len({json.dumps(l["b"]) for l in lines})


def test_class_cap_exits_3(tmp_path):
    runner = CliRunner()
    inp = tmp_path / "m.json"
    write(inp, A3_JSON)
    result = runner.invoke(main, ["class", "-i", str(inp), "--max", "2"])
    assert result.exit_code == 3


def test_class_cap_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("COXMUT_CAPS", "max_class=2")
    runner = CliRunner()
    inp = tmp_path / "m.json"
    write(inp, A3_JSON)
    result = runner.invoke(main, ["class", "-i", str(inp)])
    assert result.exit_code == 3


def test_classify(tmp_path):
    runner = CliRunner()
    inp = tmp_path / "m.json"
    write(inp, B3_JSON)
    result = runner.invoke(main, ["classify", "-i", str(inp)])
    assert result.exit_code == 0
    assert result.output.startswith("FiniteType B3")


def test_present_emits_grammar(tmp_path):
    from coxmut.presentation import parse_presentation

    runner = CliRunner()
    inp = tmp_path / "m.json"
    write(inp, B3_JSON)
    result = runner.invoke(main, ["present", "-i", str(inp)])
    assert result.exit_code == 0
    pres = parse_presentation(result.output)
    assert pres.n_generators == 3
    assert result.output.splitlines()[0] == "gens 3"


def test_analyze_json(tmp_path):
    runner = CliRunner()
    inp = tmp_path / "m.json"
    # the (3,4,4) triangle member of the B3 class
    write(inp, '{"b": [[0, -1, 1], [1, 0, -1], [-2, 2, 0]], "d": [1, 1, 2]}')
    result = runner.invoke(main, ["analyze", "-i", str(inp), "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["geometric_type"] == "hyperbolic"
    assert payload["chi"] == -4
    assert payload["genus"] == 3


def test_verify_pass_and_fail(tmp_path):
    runner = CliRunner()
    inp = tmp_path / "m.json"
    write(inp, '{"b": [[0, -1, 1], [1, 0, -1], [-2, 2, 0]], "d": [1, 1, 2]}')
    result = runner.invoke(main, ["verify", "-i", str(inp)])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["torsion_free"] is True
