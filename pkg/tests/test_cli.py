import subprocess
import sys

import pytest

from homcert.cli import main
from homcert.cochains import Cochain
from homcert.certificate import build_A, odd_cycle_complex
from homcert.gf2 import GF2Matrix
from homcert.graphs import cycle_graph, parse_edge_list
from homcert.hom import ComplexSlice


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def summary(out):
    lines = [ln for ln in out.splitlines() if ln.startswith("#summary")]
    assert len(lines) == 1
    return lines[0]


def test_verify_lemma_all_vertices(capsys):
    code, out, _ = run(capsys, "verify-lemma", "--r", "2", "--n", "4")
    assert code == 0
    assert sum("true" in ln for ln in out.splitlines() if ln.startswith("v=")) == 5
    assert summary(out) == "#summary r=2 n=4 vertices=5 lemma=ok"


def test_verify_lemma_single_vertex(capsys):
    code, out, _ = run(capsys, "verify-lemma", "--r", "1", "--n", "3", "--v", "2")
    assert code == 0 and "v=2: dB_v = A_(v-1) + A_(v+1) true" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["verify-lemma", "--r", "0", "--n", "3"],
        ["verify-lemma", "--r", "2", "--n", "4", "--v", "5"],
        ["verify-theorem", "--r", "1", "--n", "2"],
        ["verify-theorem", "--n", "4"],
        ["solve", "--r", "-1", "--n", "4"],
        ["betti", "--t", "wheel:4", "--g", "complete:3"],
        ["betti", "--t", "complete:3", "--g", "complete:3", "--quotient"],
        ["fvector", "--t", "cycle:2", "--g", "complete:3"],
        ["export", "--r", "2", "--n", "3"],
        ["verify-theorem", "--r", "x", "--n", "3"],
        [],
    ],
)
def test_bad_input_exits_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == 2


def test_verify_theorem(capsys):
    code, out, _ = run(capsys, "verify-theorem", "--r", "2", "--n", "4")
    assert code == 0
    assert summary(out).startswith("#summary r=2 n=4 lemma=ok theorem=ok |K|=30 |qAr|=6")
    code, out, _ = run(capsys, "verify-theorem", "--r", "3", "--n", "3")
    assert code == 0


def test_solve_odd_cycle(capsys):
    code, out, _ = run(capsys, "solve", "--r", "2", "--n", "4", "--rank-check")
    assert code == 0
    s = summary(out)
    assert "solvable=yes" in s and "rank_member=yes" in s and "certificate=ok" in s
    code, out, _ = run(capsys, "solve", "--r", "1", "--n", "3")
    assert code == 0


@pytest.mark.parametrize("method", ["dense", "sparse"])
def test_solve_edge_complex_unsolvable(capsys, method):
    code, out, _ = run(capsys, "solve", "--edge-complex", "--n", "4", "--method", method, "--rank-check")
    assert code == 1
    assert "solvable=no" in summary(out) and "rank_member=no" in summary(out)


def test_betti(capsys):
    code, out, _ = run(capsys, "betti", "--t", "edge", "--g", "complete:4", "--quotient")
    assert code == 0 and out.splitlines()[0] == "1 1 1"
    code, out, _ = run(capsys, "betti", "--t", "cycle:3", "--g", "complete:3")
    assert out.splitlines()[0] == "6"
    code, out, _ = run(capsys, "betti", "--t", "cycle:5", "--g", "complete:3")
    # 30 vertices and 30 edges: rank 28 coboundary leaves two circles
    assert out.splitlines()[0] == "2 2"


def test_betti_explicit_involution(capsys):
    code, out, _ = run(capsys, "betti", "--t", "cycle:5", "--g", "complete:4", "--quotient", "--involution", "0,4,3,2,1")
    assert code == 0


def test_betti_non_free_exits_3(capsys):
    code, out, err = run(capsys, "betti", "--t", "cycle:4", "--g", "complete:3", "--quotient")
    assert code == 3 and "free action" in err


def test_fvector(capsys):
    code, out, _ = run(capsys, "fvector", "--t", "edge", "--g", "complete:3")
    assert code == 0 and out.splitlines()[0] == "6 6"
    code, out, _ = run(capsys, "fvector", "--t", "cycle:3", "--g", "complete:3")
    assert out.splitlines()[0] == "6"


def test_export_slice(capsys, tmp_path):
    path = tmp_path / "x23.txt"
    code, out, _ = run(capsys, "export", "--r", "2", "--n", "3", "--dim", "1", "--out", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    assert len(lines) == 31 and lines[0] == "hom-slice T=cycle:5 G=complete:3 dim=1 count=30"
    assert len(ComplexSlice.from_text(path.read_text())) == 30


def test_export_cochain_and_matrix(capsys, tmp_path):
    hom, _ = odd_cycle_complex(2, 4)
    path = tmp_path / "a.txt"
    assert run(capsys, "export", "--r", "2", "--n", "4", "--cochain", "A", "--v", "1", "--out", str(path))[0] == 0
    assert Cochain.from_text(hom, path.read_text()) == build_A(1, 2, 4)
    path = tmp_path / "m.txt"
    assert run(capsys, "export", "--r", "2", "--n", "3", "--dim", "0", "--matrix", "--quotient", "--out", str(path))[0] == 0
    M = GF2Matrix.from_text(path.read_text())
    assert M.shape == (15, 15)


def test_export_graph(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "--graph", "cycle:5")
    assert code == 0 and parse_edge_list(out) == cycle_graph(5)
    edges = tmp_path / "t.txt"
    edges.write_text(out)
    code, out, _ = run(capsys, "fvector", "--t", f"file:{edges}", "--g", "complete:3")
    assert out.splitlines()[0] == "30 30"


def test_export_unwritable_exits_4(capsys, tmp_path):
    code, _, _ = run(capsys, "export", "--r", "2", "--n", "3", "--dim", "1", "--out", str(tmp_path / "no" / "such" / "x"))
    assert code == 4


def test_output_independent_of_jobs(capsys):
    _, one, _ = run(capsys, "--jobs", "1", "export", "--t", "cycle:7", "--g", "complete:4", "--dim", "2")
    _, many, _ = run(capsys, "--jobs", "3", "export", "--t", "cycle:7", "--g", "complete:4", "--dim", "2")
    assert one == many


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "homcert", "fvector", "--t", "edge", "--g", "complete:3"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0 and out.stdout.splitlines()[0] == "6 6"
