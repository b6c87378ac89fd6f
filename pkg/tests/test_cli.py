"""End-to-end CLI checks, all in process through main(argv)."""
import json

import pytest

from dowkit.cli import main
from dowkit.word_graph import WordGraph, build


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_normalize(capsys):
    code, out, err = run(capsys, "normalize", "2.7.2.7.1.1")
    assert (code, out, err) == (0, "121233\n", "")


def test_normalize_empty_word(capsys):
    assert run(capsys, "normalize", "-") == (0, "-\n", "")


def test_equiv(capsys):
    assert run(capsys, "equiv", "1212", "2121") == (0, "true\n", "")
    assert run(capsys, "equiv", "1212", "1221") == (0, "false\n", "")


def test_insert(capsys):
    code, out, err = run(capsys, "insert", "1232314554", "rho(2,4,6)")
    assert (code, out, err) == (0, "12367236714554\n", "")
    code, out, _ = run(capsys, "insert", "-", "tau(2,1,1)")
    assert (code, out) == (0, "1221\n")


def test_gen(capsys):
    assert run(capsys, "gen", "int(2,2)")[:2] == (0, "12342143\n")
    assert run(capsys, "gen", "nes(3,1)")[:2] == (0, "123321\n")
    assert run(capsys, "gen", "trho(2,3,2)")[:2] == (0, "12345126734567\n")
    assert run(capsys, "gen", "trho(2,1,3)")[:2] == (0, "12312453467567\n")
    code, _, err = run(capsys, "gen", "ttau(2,3,1)")
    assert code == 1 and err.startswith("error:")
    code, _, err = run(capsys, "gen", "int(2)")
    assert code == 1 and "int takes (h, nu)" in err


def test_pairs_text(capsys):
    code, out, _ = run(capsys, "pairs", "123123", "2")
    assert code == 0
    lines = out.splitlines()
    assert "w=123123 s1=rho(2,1,2) s2=rho(2,6,7) equiv=true type=Sequential family=trho" in lines
    assert all(line.startswith("w=123123 ") for line in lines)


def test_pairs_json(capsys):
    code, out, _ = run(capsys, "pairs", "11", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload and all(entry["equiv"] is True for entry in payload)
    assert {"w", "s1", "s2", "equiv", "type", "family"} <= set(payload[0])


def test_predict(capsys):
    code, out, _ = run(capsys, "predict", "123123", "2")
    assert code == 0
    assert "rho(2,1,4) rho(2,4,7)" in out.splitlines()
    code, out, _ = run(capsys, "predict", "11", "3", "--json")
    entries = json.loads(out)
    assert {"s1": "rho(3,1,2)", "s2": "rho(3,2,3)"} in entries


def test_patterns(capsys):
    code, out, _ = run(capsys, "patterns", "1212", "--kind", "rep")
    assert code == 0
    assert out.splitlines() == ["rep:12@1,3", "rep:1@1,3", "rep:2@2,4"]
    code, out, _ = run(capsys, "patterns", "12345126734567", "--kind", "rep", "--maximal")
    assert out.splitlines() == ["rep:12@1,6", "rep:345@3,10", "rep:67@8,13"]


def test_palindrome(capsys):
    assert run(capsys, "palindrome", "12324143")[:2] == (0, "true\n")
    assert run(capsys, "palindrome", "123132")[:2] == (0, "false\n")


def test_verify_theorems(capsys):
    code, out, err = run(capsys, "verify-theorems", "--max-size", "2", "--nu-max", "2")
    assert code == 0
    assert err == ""
    lines = out.splitlines()
    assert lines and all(line.endswith("PASS") for line in lines)
    assert any(line.startswith("no-mixed-kind-equivalences") for line in lines)
    assert any(line.startswith("generator-families") for line in lines)


def test_domain_error_exit_code(capsys):
    code, out, err = run(capsys, "normalize", "12a")
    assert code == 1
    assert out == ""
    assert err.startswith("error:")
    code, _, err = run(capsys, "insert", "1212", "rho(2,9,9)")
    assert code == 1 and err.startswith("error:")
    code, _, err = run(capsys, "pairs", "1213", "2")
    assert code == 1 and err.startswith("error:")


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_graph_workflow(tmp_path, capsys):
    out_file = tmp_path / "g.json"
    code, _, _ = run(capsys, "graph", "build", "--max-size", "2", "--out", str(out_file))
    assert code == 0
    assert WordGraph.from_json_bytes(out_file.read_bytes()) == build(2, 2)

    code, out, _ = run(capsys, "graph", "distance", str(out_file), "1212")
    assert (code, out) == (0, "1\n")

    code, out, _ = run(capsys, "graph", "export", str(out_file), "--format", "dot")
    assert code == 0
    assert out.startswith("digraph words {")

    code, _, err = run(capsys, "graph", "distance", str(tmp_path / "missing.json"), "11")
    assert code == 1 and err.startswith("error:")


def test_graph_build_respects_nu_cap(tmp_path, capsys):
    out_file = tmp_path / "g.json"
    code, _, _ = run(
        capsys,
        "graph", "build", "--max-size", "2", "--nu-cap", "1", "--out", str(out_file),
    )
    assert code == 0
    g = WordGraph.from_json_bytes(out_file.read_bytes())
    assert all(spec.nu == 1 for specs in g.edges.values() for spec in specs)
