import json

import pytest

from srreg.srreg import build_parser, main


@pytest.fixture(autouse=True)
def _isolated_cwd(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)


@pytest.fixture
def square_file(tmp_path):
    path = tmp_path / "square.txt"
    path.write_text("1 2\n2 3\n3 4\n1 4\n")
    return str(path)


@pytest.fixture
def triangle_graph_file(tmp_path):
    path = tmp_path / "k3.json"
    path.write_text(json.dumps({"type": "graph", "n": 3, "edges": [[1, 2], [1, 3], [2, 3]]}))
    return str(path)


def write_ideal(tmp_path, n, generators):
    path = tmp_path / "ideal.json"
    path.write_text(json.dumps({"type": "ideal", "n": n, "generators": generators}))
    return str(path)


def test_reg_text(square_file, capsys):
    assert main(["reg", square_file, "--oracle"]) == 0
    out = capsys.readouterr().out
    assert "reg I = 3" in out
    assert "reg S/I = 2" in out
    assert "polarization oracle reg S/I = 2" in out
    assert "witness" in out


def test_reg_json(square_file, capsys):
    assert main(["--json", "reg", square_file]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["reg_ideal"] == 3
    assert payload["field"] == "gf2"
    assert payload["witnesses"]


def test_power(tmp_path, capsys):
    assert main(["power", write_ideal(tmp_path, 2, ["x1", "x2"]), "-s", "2"]) == 0
    assert capsys.readouterr().out.strip() == "(x1^2, x1*x2, x2^2)"


def test_symbolic_from_graph(triangle_graph_file, capsys):
    assert main(["symbolic", triangle_graph_file, "-s", "2"]) == 0
    assert capsys.readouterr().out.strip() == "(x1*x2*x3, x1^2*x2^2, x1^2*x3^2, x2^2*x3^2)"


def test_colon_and_radical(tmp_path, capsys):
    path = write_ideal(tmp_path, 2, ["x1^2*x2", "x2^3"])
    assert main(["colon", path, "--by", "x1"]) == 0
    assert capsys.readouterr().out.strip() == "(x1*x2, x2^3)"
    assert main(["colon", path, "--by", "x1", "--radical"]) == 0
    assert capsys.readouterr().out.strip() == "(x2)"
    assert main(["radical", path]) == 0
    assert capsys.readouterr().out.strip() == "(x2)"


def test_degree_complex(tmp_path, square_file, capsys):
    assert main(["degree-complex", write_ideal(tmp_path, 2, ["x1*x2"]), "--a", "x1*x2"]) == 0
    assert capsys.readouterr().out.strip() == "void"
    assert main(["degree-complex", square_file, "--a", "1"]) == 0
    assert capsys.readouterr().out.strip() == "1 2\n1 4\n2 3\n3 4"


def test_intermediates(triangle_graph_file, capsys):
    assert main(["intermediates", triangle_graph_file, "-s", "2", "--json"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert [json.loads(line)["subset"] for line in lines] == [[], [1]]


def test_verify_theorem1_on_input(square_file, capsys):
    assert main(["verify-theorem1", square_file, "-s", "2"]) == 0
    out = capsys.readouterr().out
    assert "[PASS] verify-theorem1 input s=2" in out
    assert "verify-theorem1: 1 passed, 0 failed" in out


def test_scan_small_graphs_json(capsys):
    assert main(["scan-small-graphs", "--n", "3", "--json"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    summary = json.loads(lines[-1])
    assert summary["total"] == 5
    assert summary["failed"] == 0


def test_settings_file_and_flags(tmp_path, square_file, capsys):
    config = tmp_path / "run.yaml"
    config.write_text("field: q\n")
    assert main(["reg", square_file, "--config", str(config), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["field"] == "q"
    assert main(["reg", square_file, "--config", str(config), "--field", "gf3", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["field"] == "gf3"


@pytest.mark.parametrize("argv", [
    ["reg", "missing.json"],
    ["reg", "SQUARE", "--field", "gf4"],
    ["reg", "SQUARE", "--jobs", "0"],
    ["symbolic", "SQUARE", "-s", "4"],
    ["scan-small-graphs", "--n", "6"],
    ["colon", "SQUARE", "--by", "x9"],
    ["reg", "SQUARE", "--config", "absent.yaml"],
])
def test_errors_exit_with_two(argv, square_file):
    assert main([square_file if a == "SQUARE" else a for a in argv]) == 2


def test_verify_theorem1_over_rationals(tmp_path, capsys):
    path = tmp_path / "triangle.txt"
    path.write_text("1 2\n2 3\n1 3\n")
    assert main(["verify-theorem1", str(path), "-s", "1", "2", "--field", "q"]) == 0
    assert "2 passed" in capsys.readouterr().out


def test_flags_after_the_subcommand():
    args = build_parser().parse_args(["selftest", "--inject-fault", "--seed", "3"])
    assert args.inject_fault and args.seed == 3


def test_long_exponent_flag(triangle_graph_file, capsys):
    assert main(["symbolic", triangle_graph_file, "-s", "2"]) == 0
    short = capsys.readouterr().out
    assert main(["symbolic", triangle_graph_file, "--s", "2"]) == 0
    assert capsys.readouterr().out == short


def test_sampled_intermediates_flags(triangle_graph_file, capsys):
    argv = ["intermediates", triangle_graph_file, "--s", "2", "--mode", "sample", "--count", "4", "--seed", "1", "--json"]
    assert main(argv) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert [json.loads(line)["subset"] for line in lines] == [[], [1]]
    args = build_parser().parse_args(["scan-small-graphs", "--sample", "--count", "3"])
    assert args.mode == "sample" and args.count == 3 and args.s == 2


def test_abbreviated_flags_are_rejected(triangle_graph_file):
    with pytest.raises(SystemExit):
        build_parser().parse_args(["symbolic", triangle_graph_file, "--s", "2", "--se", "1"])
    with pytest.raises(SystemExit):
        build_parser().parse_args(["intermediates", triangle_graph_file, "--s", "2", "--mo", "sample"])


def test_sample_count_below_two_exits_with_two(triangle_graph_file):
    assert main(["intermediates", triangle_graph_file, "--s", "2", "--mode", "sample", "--count", "1"]) == 2


@pytest.mark.slow
def test_selftest_command(capsys):
    assert main(["selftest"]) == 0
    assert main(["selftest", "--inject-fault"]) == 1
