import io

import pytest

from qrankwidth.cli import run


@pytest.fixture
def files(tmp_path):
    c5 = tmp_path / "c5.txt"
    c5.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    k3 = tmp_path / "k3.txt"
    k3.write_text("3 3\n0 1\n1 2\n0 2\n")
    dimacs = tmp_path / "p4.col"
    dimacs.write_text("c path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n")
    return tmp_path


def call(*argv):
    out = io.StringIO()
    code = run(list(map(str, argv)), out)
    return code, out.getvalue()


def test_width(files):
    code, text = call("width", "--graph", files / "c5.txt")
    assert code == 0
    assert text.strip() == "width=2 optimal=true method=exact field=q"
    code, text = call("width", "--graph", files / "p4.col", "--field", "gf2")
    assert text.strip() == "width=1 optimal=true method=exact field=gf2"


def test_width_emit_and_reuse(files):
    dec = files / "dec.txt"
    code, _ = call("width", "--graph", files / "c5.txt", "--emit-decomp", dec)
    assert code == 0
    code, text = call("width", "--graph", files / "c5.txt", "--decomp", dec)
    assert text.strip() == "width=2 optimal=false method=given field=q"


def test_width_greedy(files):
    code, text = call("width", "--graph", files / "c5.txt", "--method", "greedy", "--seed", "3")
    assert code == 0 and "method=greedy" in text and "optimal=false" in text


def test_solve(files):
    code, text = call("solve", "--graph", files / "c5.txt", "--problem", "dominating-set")
    assert code == 0
    assert text.startswith("status=optimal value=2 witness=")
    code, text = call("solve", "--graph", files / "c5.txt", "--problem", "independent-set", "--objective", "max")
    assert text.startswith("status=optimal value=2 ")
    code, text = call("solve", "--graph", files / "c5.txt", "--hgraph", files / "k3.txt")
    assert text.startswith("status=optimal") and text.count("|") == 2
    code, text = call("solve", "--graph", files / "k3.txt", "--sigma", "{0}", "--rho", "{1}")
    assert text.strip() == "status=optimal value=1 witness=0"
    code, text = call("solve", "--graph", files / "p4.col", "--problem", "d-dominating-set", "--param", "2")
    assert text.startswith("status=optimal value=")


def test_solve_infeasible(files):
    c4 = files / "c4.txt"
    c4.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
    code, text = call("solve", "--graph", c4, "--problem", "perfect-code")
    assert code == 0 and text.strip() == "status=infeasible"


def test_nec(files):
    code, text = call("nec", "--graph", files / "c5.txt", "-d", "2")
    lines = text.strip().splitlines()
    assert lines[0] == "cut,size,cutrk_q,cutrk_gf2,nec_d,nec_d_complement,bound"
    assert len(lines) == 1 + 7
    for row in lines[1:]:
        cut, size, q, gf2, nec, nec_c, bound = map(int, row.split(","))
        assert gf2 <= q
        assert max(nec, nec_c) <= bound


def test_gen(files):
    code, text = call("gen", "--family", "grid", "--rows", "2", "--cols", "3")
    assert code == 0
    assert text.splitlines()[0] == "6 7"
    out = files / "g.col"
    code, _ = call("gen", "--family", "gnp", "--n", "6", "--p", "0.5", "--seed", "9",
                   "--format", "dimacs", "--out", out)
    assert out.read_text().startswith("p edge 6 ")
    code, text = call("width", "--graph", out)
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["width", "--graph", "/no/such/file"],
    ["solve", "--graph", "GRAPH"],
    ["solve", "--graph", "GRAPH", "--problem", "nope"],
    ["solve", "--graph", "GRAPH", "--sigma", "{0}"],
    ["solve", "--graph", "GRAPH", "--sigma", "{x}", "--rho", "N"],
    ["nec", "--graph", "GRAPH", "-d", "0"],
    ["gen", "--family", "grid"],
    ["width"],
    ["bogus"],
])
def test_usage_errors(files, argv, capsys):
    argv = [str(files / "c5.txt") if a == "GRAPH" else a for a in argv]
    assert call(*argv)[0] == 2


def test_bad_graph_file_reports_line(files, capsys):
    bad = files / "bad.txt"
    bad.write_text("3 1\n0 7\n")
    code, _ = call("width", "--graph", bad)
    assert code == 2
    assert "line 2" in capsys.readouterr().err


def test_verify_quick():
    code, text = call("verify", "--quick")
    assert code == 0
    lines = text.strip().splitlines()
    assert len(lines) == 10
    assert all(line.startswith("[PASS]") for line in lines)
