import io
import json

from chromsym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_text(capsys):
    code, out, err = run(capsys, "expand", "--graph", "claw", "--basis", "s")
    assert code == 0
    assert out.strip() == "s_{31} - s_{2^2} + 5s_{21^2} + 8s_{1^4}"


def test_expand_latex(capsys):
    code, out, _ = run(
        capsys, "expand", "--graph", "claw", "--basis", "s", "--format", "latex"
    )
    assert code == 0
    assert out.strip() == "X_G = s_{31}-s_{2^2}+5s_{21^2}+8s_{1^4}"


def test_expand_json_round_trips(capsys):
    code, out, _ = run(
        capsys, "expand", "--graph", "claw", "--basis", "s", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["graph"] == "claw"
    assert data["terms"][0] == {"partition": "3,1", "coeff": "1"}
    assert json.dumps(data, indent=2, sort_keys=False) + "\n" == out


def test_coeff(capsys):
    code, out, _ = run(
        capsys, "coeff", "--graph", "squid:5,1,1,1", "--shape", "3,3,2"
    )
    assert code == 0
    assert out.strip() == "-8"


def test_coeff_explain_sums_to_value(capsys):
    code, out, _ = run(
        capsys,
        "coeff", "--graph", "squid:5,1,1,1", "--shape", "3,3,2", "--explain",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "coefficient = -8"
    total = 0
    for line in lines[:-1]:
        term = [f for f in line.split() if f.startswith("term=")]
        assert len(term) == 1
        total += int(term[0].removeprefix("term="))
    assert total == -8


def test_check_exit_codes(capsys):
    code, out, _ = run(capsys, "check", "schur", "--graph", "claw")
    assert code == 1
    data = json.loads(out)
    assert data["answer"] == "not_positive"
    assert data["certificate"]["kind"] == "negative_coefficient"
    assert data["certificate"]["shape"] == "2,2"

    code, out, _ = run(capsys, "check", "schur", "--graph", "path:4")
    assert code == 0
    assert json.loads(out)["answer"] == "positive"

    code, out, _ = run(
        capsys, "check", "e", "--graph", "complete_tripartite:2,2,3"
    )
    assert code == 0

    code, out, _ = run(
        capsys, "check", "schur", "--graph", "claw", "--strategy", "fast"
    )
    assert code == 1
    assert json.loads(out)["certificate"]["kind"] == "unbalanced_bipartition"


def test_census_json(capsys):
    code, out, _ = run(capsys, "census", "--graph", "claw")
    assert code == 0
    data = json.loads(out)
    assert data["n"] == 4
    assert data["counts"] == [
        {"type": "3,1", "count": "1"},
        {"type": "2,1,1", "count": "3"},
        {"type": "1,1,1,1", "count": "1"},
    ]


def test_corpus_verify(capsys):
    code, out, _ = run(capsys, "corpus", "verify")
    assert code == 0
    assert "MISMATCH" not in out
    assert out.strip().splitlines()[-1].startswith("verified 23/23")

    code, out, _ = run(capsys, "corpus", "verify", "--id", "claw-s")
    assert code == 0
    assert "ok claw-s" in out

    code, _, err = run(capsys, "corpus", "verify", "--id", "nope")
    assert code == 2
    assert "no fixture" in err


def test_corpus_export(capsys):
    code, out, _ = run(capsys, "corpus", "export")
    assert code == 0
    data = json.loads(out)
    assert len(data) == 23
    assert {row["id"] for row in data} >= {"claw-s", "k34-s", "w5-e"}


def test_usage_errors(capsys):
    code, _, err = run(capsys, "expand", "--graph", "nosuch:3", "--basis", "m")
    assert code == 2
    assert "unknown family" in err

    code, _, _ = run(capsys, "expand", "--graph", "C", "--input-format",
                     "graph6", "--basis", "m")
    assert code == 2

    code, _, err = run(capsys, "coeff", "--graph", "claw", "--shape", "3,3")
    assert code == 2
    assert "weight" in err


def test_bad_subcommand_exits_2(capsys):
    assert main(["frobnicate"]) == 2
    capsys.readouterr()
    assert main([]) == 2
    capsys.readouterr()


def test_edge_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("CSF_EDGE_CAP", "2")
    code, _, err = run(capsys, "expand", "--graph", "claw", "--basis", "p")
    assert code == 2
    assert "cap of 2" in err
    monkeypatch.setenv("CSF_EDGE_CAP", "30")
    code, out, _ = run(capsys, "expand", "--graph", "claw", "--basis", "p")
    assert code == 0
    assert out.strip()


def test_stdin_graph6(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("C~"))
    code, out, _ = run(
        capsys,
        "expand", "--graph", "-", "--input-format", "graph6", "--basis", "e",
    )
    assert code == 0
    assert out.strip() == "24e_{4}"


def test_stdin_edge_list(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("0 1\n1 2\n"))
    code, out, _ = run(
        capsys,
        "expand", "--graph", "-", "--input-format", "edge_list", "--basis", "m",
    )
    assert code == 0
    assert out.strip() == "m_{21} + 6m_{1^3}"
