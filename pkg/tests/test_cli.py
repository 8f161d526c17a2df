import json
import subprocess
import sys

from bicirc.cli import analyze_graph, main
from bicirc.bicirculant import generalized_petersen, named_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_s5(capsys):
    code, out, err = run(capsys, "verify-s5")
    assert code == 0 and "3/3 claims pass" in err


def test_classify_circulant(capsys):
    code, out, _ = run(capsys, "classify-circulant", "6", "1,2,4,5")
    rep = json.loads(out)
    assert code == 0
    assert any(c["kind"] == "coset_blocks" and c["D"] == [0, 3] for c in rep["cases"])


def test_classify_rejects_non_arc_transitive(capsys):
    code, _, err = run(capsys, "classify-circulant", "8", "1,2,6,7")
    assert code == 1 and "error" in err


def test_coset_roundtrip(capsys):
    code, out, err = run(capsys, "coset-roundtrip", "--graph", "petersen_complement")
    assert code == 0 and "isomorphic: true" in err
    assert json.loads(out)["valence_formula"] == 6


def test_named(capsys):
    assert run(capsys, "named", "K2", "--graph6")[1].strip() == "A_"


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "--named", "petersen_complement")
    rep = json.loads(out)
    assert rep["primitive"] and rep["arc_transitive"] and rep["family_witness"]
    code, out, _ = run(capsys, "analyze", "--graph6", "A_")
    assert json.loads(out)["n"] == 2
    code, _, err = run(capsys, "analyze", "--graph6", "A")
    assert code == 1 and "error" in err


def test_analyze_reports():
    assert not analyze_graph(generalized_petersen(5, 1))["edge_transitive"]
    k6 = analyze_graph(named_graph("K6"))
    assert k6["primitive"] and k6["primitive_case_check"]


def test_search_output(capsys, tmp_path):
    out = tmp_path / "c.json"
    code, _, err = run(capsys, "search", "--d", "6", "--max-order", "14", "--out", str(out))
    assert code == 0 and "1 edge-transitive class" in err
    data = json.loads(out.read_text())
    assert data["classes"][0]["representative"] == "BC(5; 2; 0,1,2,3)"
    csv_out = tmp_path / "c.csv"
    run(capsys, "search", "--d", "6", "--max-order", "14", "--out", str(csv_out))
    assert csv_out.read_text().startswith("symbol,")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bicirc", "named", "C5", "--graph6"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "Dhc"
