"""End-to-end command-line behavior and exit codes."""

import io
import json

from partialcube import parse_graph, are_isomorphic_small
from partialcube.cli import main
from partialcube.constructions import cartesian_product, hypercube, path_graph
from partialcube.harness import VerificationReport


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_to_file_and_stdout(tmp_path, capsys):
    out = tmp_path / "q3.g"
    code, stdout, _ = run(["gen", "Q", "3", "-o", str(out)], capsys)
    assert code == 0 and stdout == ""
    assert parse_graph(out.read_text()) == hypercube(3)
    code, stdout, _ = run(["gen", "P", "4"], capsys)
    assert code == 0
    assert parse_graph(stdout) == path_graph(4)


def test_gen_bad_family(capsys):
    code, _, err = run(["gen", "nosuch", "1"], capsys)
    assert code == 2 and "error" in err


def test_check_ph_prints_value(tmp_path, capsys):
    f = tmp_path / "k23.g"
    run(["gen", "K23", "-o", str(f)], capsys)
    code, stdout, _ = run(["check", str(f), "--what", "ph"], capsys)
    assert code == 0
    assert stdout.strip() == "ph = 2"


def test_check_pc_exit_codes(tmp_path, capsys):
    k23 = tmp_path / "k23.g"
    q3 = tmp_path / "q3.g"
    run(["gen", "K23", "-o", str(k23)], capsys)
    run(["gen", "Q", "3", "-o", str(q3)], capsys)
    assert run(["check", str(q3), "--what", "pc"], capsys)[0] == 0
    code, stdout, _ = run(["check", str(k23), "--what", "pc"], capsys)
    assert code == 1 and "false" in stdout


def test_check_att_and_gated(tmp_path, capsys):
    k23 = tmp_path / "k23.g"
    c6 = tmp_path / "c6.g"
    run(["gen", "K23", "-o", str(k23)], capsys)
    run(["gen", "C", "6", "-o", str(c6)], capsys)
    assert run(["check", str(k23), "--what", "att"], capsys)[0] == 1
    code, stdout, _ = run(["check", str(c6), "--what", "gated"], capsys)
    assert code == 0 and "gated sets" in stdout


def test_product_command(tmp_path, capsys):
    a = tmp_path / "p2.g"
    b = tmp_path / "p3.g"
    run(["gen", "P", "2", "-o", str(a)], capsys)
    run(["gen", "P", "3", "-o", str(b)], capsys)
    code, stdout, _ = run(["product", str(a), str(b)], capsys)
    assert code == 0
    got = parse_graph(stdout)
    assert got == cartesian_product(path_graph(2), path_graph(3)).graph


def test_expand_contract_roundtrip(tmp_path, capsys):
    q2 = tmp_path / "q2.g"
    run(["gen", "Q", "2", "-o", str(q2)], capsys)
    code, stdout, _ = run(
        ["expand", str(q2), "--cover", "0,1,2,3", "1,3"], capsys
    )
    assert code == 0
    expanded = tmp_path / "exp.g"
    expanded.write_text(stdout)
    code, stdout, _ = run(["contract", str(expanded), "--class", "0"], capsys)
    assert code == 0
    parse_graph(stdout)


def test_expand_rejects_bad_cover(tmp_path, capsys):
    q2 = tmp_path / "q2.g"
    run(["gen", "Q", "2", "-o", str(q2)], capsys)
    code, _, err = run(["expand", str(q2), "--cover", "0", "3"], capsys)
    assert code == 2 and "error" in err


def test_contract_non_partial_cube_is_violation(tmp_path, capsys):
    k23 = tmp_path / "k23.g"
    run(["gen", "K23", "-o", str(k23)], capsys)
    code, _, err = run(["contract", str(k23), "--class", "0"], capsys)
    assert code == 1 and "not a partial cube" in err


def test_amalgam_command(tmp_path, capsys):
    c4 = tmp_path / "c4.g"
    run(["gen", "C", "4", "-o", str(c4)], capsys)
    code, stdout, _ = run(
        ["amalgam", str(c4), str(c4), "--glue", "0:0,1:1"], capsys
    )
    assert code == 0
    domino = cartesian_product(path_graph(2), path_graph(3)).graph
    assert are_isomorphic_small(parse_graph(stdout), domino) is not None


def test_embed_q3(tmp_path, capsys):
    q3 = tmp_path / "q3.g"
    run(["gen", "Q", "3", "-o", str(q3)], capsys)
    code, stdout, _ = run(["embed", str(q3)], capsys)
    assert code == 0
    lines = stdout.strip().splitlines()
    assert lines[0].startswith("# classes:") and len(lines) == 9
    assert lines[1].split()[1] == "000"


def test_embed_from_stdin(monkeypatch, capsys):
    from partialcube import serialize_graph

    monkeypatch.setattr("sys.stdin", io.StringIO(serialize_graph(hypercube(2))))
    code, stdout, _ = run(["embed"], capsys)
    assert code == 0
    assert len(stdout.strip().splitlines()) == 5


def test_embed_rejects_non_partial_cube(tmp_path, capsys):
    k23 = tmp_path / "k23.g"
    run(["gen", "K23", "-o", str(k23)], capsys)
    code, _, err = run(["embed", str(k23)], capsys)
    assert code == 1 and "not a partial cube" in err


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.g"
    bad.write_text("2 1\n0 0\n")
    code, _, err = run(["check", str(bad)], capsys)
    assert code == 2 and "line 2" in err


def test_verify_small_run(tmp_path, capsys):
    out_json = tmp_path / "report.json"
    out_csv = tmp_path / "report.csv"
    code, stdout, _ = run(
        [
            "verify",
            "--n",
            "4",
            "--random-count",
            "4",
            "--seed",
            "11",
            "--json",
            str(out_json),
            "--csv",
            str(out_csv),
        ],
        capsys,
    )
    assert code == 0
    assert "recognizer_agreement" in stdout and "total:" in stdout
    report = VerificationReport.from_json(out_json.read_text())
    assert report.counts()["fail"] == 0
    assert out_csv.read_text().startswith("graph_id,")
    payload = json.loads(out_json.read_text())
    assert "meta" in payload and payload["meta"]["corpus"]["max_exhaustive_n"] == 4
