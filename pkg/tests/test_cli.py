import json

import pytest

from modred.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_index_set(capsys):
    code, out, _ = run_cli(["index-set", "--m", "2", "--ell", "3", "--s", "7"], capsys)
    assert code == 0
    assert json.loads(out) == [[0, 0], [1, 0], [2, 0], [3, 0], [0, 1]]


def test_digits(capsys):
    code, out, _ = run_cli(["digits", "--m", "2", "--ell", "3", "--s", "7"], capsys)
    assert code == 0
    assert json.loads(out) == {"m_minus1": 1, "digits": [0, 1], "s": 7}


def test_involute(capsys):
    code, out, _ = run_cli(
        ["involute", "--epsilon", "3", "--ell", "7", "--s", "4"], capsys
    )
    assert code == 0
    assert json.loads(out) == [["rho", "0", 2], ["rho", "2", 2]]


def test_involute_epsilon_one_is_config_error(capsys):
    code, _, err = run_cli(["involute", "--epsilon", "1", "--ell", "3", "--s", "2"], capsys)
    assert code == 2
    assert "error" in err


def test_reduce_steinberg_shape(capsys):
    code, out, _ = run_cli(["reduce-steinberg", "--m", "2", "--ell", "3", "--s", "5"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["context"]["m"] == 2
    levels = [c["level"] for c in payload["constituents"]]
    assert levels == [[0], [1], [2]]
    assert payload["constituents"][0]["parameter"] == [["rho", "0", 5]]


def test_reduce_lt_shape(capsys):
    code, out, _ = run_cli(
        ["reduce-lt", "--m", "2", "--ell", "3", "--s", "6", "--t", "4"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["constituents"]) == 2
    assert payload["constituents"][1]["opaque"][0]["kind"] == "mixed"


def test_jacquet_pair(capsys):
    code, out, _ = run_cli(
        ["jacquet", "--m", "2", "--ell", "3", "--s", "3", "--t", "1"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["factors"][0] == {"steinberg_arm": 1, "total": 1, "twist": "1"}
    assert payload["factors"][1] == {"steinberg_arm": 2, "total": 2, "twist": "-1/2"}


def test_jacquet_constituent(capsys):
    code, out, _ = run_cli(
        ["jacquet", "--m", "2", "--ell", "3", "--s", "5", "--t", "2", "--i", "1"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 2 and all(row["mult"] == 1 for row in payload)


def test_euler(capsys):
    code, out, _ = run_cli(["euler", "--m", "2", "--ell", "3", "--s", "8"], capsys)
    assert code == 0
    assert json.loads(out) == {"holds": True}


def test_disjoint(capsys):
    code, out, _ = run_cli(
        ["disjoint", "--m", "2", "--ell", "3", "--s", "5", "--t", "1", "--t1", "2"], capsys
    )
    assert code == 0
    assert json.loads(out) == {"disjoint": True}


def test_classical_pattern(capsys):
    code, out, _ = run_cli(["classical", "--pattern", "<1,>1,<1"], capsys)
    assert code == 0
    assert json.loads(out) == [
        {"partition": [2, 1, 1], "mult": 1},
        {"partition": [2, 2], "mult": 1},
    ]


def test_classical_borel_and_induct(capsys):
    code, out, _ = run_cli(["classical", "--borel", "3"], capsys)
    assert code == 0
    assert {"partition": [2, 1], "mult": 2} in json.loads(out)
    code, out, _ = run_cli(["classical", "--induct", "2x2"], capsys)
    assert code == 0
    assert len(json.loads(out)) == 3


def test_graph_json_and_dot(capsys):
    code, out, _ = run_cli(["graph-steinberg", "--m", "2", "--ell", "3", "--s", "5"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["edges"] == [[0, 1], [1, 2]]
    code, out, _ = run_cli(
        ["graph-lt", "--m", "2", "--ell", "3", "--s", "6", "--t", "4", "--dot"], capsys
    )
    assert code == 0
    assert out.startswith("digraph") and "n0 -> n1;" in out


def test_bad_config_exits_2(capsys):
    # epsilon incompatible with the witness q
    code, _, err = run_cli(
        ["index-set", "--ell", "7", "--epsilon", "2", "--q", "2", "--s", "3"], capsys
    )
    assert code == 2 and "error" in err
    code, _, err = run_cli(["index-set", "--ell", "3", "--s", "3"], capsys)
    assert code == 2


def test_missing_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_check_passes_and_reports(capsys):
    code, out, err = run_cli(["check"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert all(row["status"] == "pass" for row in payload["checks"])
    assert err.count("[pass]") == len(payload["checks"])


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run_cli(
        ["euler", "--m", "2", "--ell", "3", "--s", "4", "--out", str(target)], capsys
    )
    assert code == 0 and out == ""
    assert json.loads(target.read_text()) == {"holds": True}
