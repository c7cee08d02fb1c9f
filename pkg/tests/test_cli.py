"""Command-line interface: outputs, formats, exit codes."""

import json

import pytest

from coxgrowth.cli import main
from coxgrowth.coxgraph import corpus_path

C6 = str(corpus_path("c6"))
C8 = str(corpus_path("c8"))
P3 = str(corpus_path("p3"))
K2 = str(corpus_path("k2"))
K3K3 = str(corpus_path("k3k3"))
TWO_C4 = str(corpus_path("two_c4"))
D4 = str(corpus_path("dihedral4"))
SQ24 = str(corpus_path("squares24"))
OC24 = str(corpus_path("octagon24"))
SQ44 = str(corpus_path("squares44"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_c8(capsys):
    code, out, _ = run(capsys, "analyze", C8)
    assert code == 0
    assert "link-regular: yes" in out
    assert "triangle-free: yes" in out
    assert "1 + 8*t + 8*t^2" in out


def test_analyze_p3_witness(capsys):
    code, out, _ = run(capsys, "analyze", P3)
    assert code == 0
    assert "link-regular: no" in out
    assert "witness" in out


def test_analyze_star_regularity(capsys):
    code, out, _ = run(capsys, "analyze", SQ24)
    assert code == 0
    assert "star-regular: yes" in out


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", P3, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["link_regular"] is False
    assert data["klink_singletons"] is False
    assert data["f_polynomial"] == [1, 3, 2]


def test_growth_c6(capsys):
    code, out, _ = run(capsys, "growth", "--kind", "racg", "--terms", "6", C6)
    assert code == 0
    assert "1,6,30,138,630,2874,13110" in out
    assert "(1 + z + 2*z^2) / (1 - 5*z + 2*z^2)" in out
    assert "formula check: MATCH" in out


def test_growth_raag_k2(capsys):
    code, out, _ = run(capsys, "growth", "--kind", "raag", "--terms", "4", K2)
    assert code == 0
    assert "1,4,12,28,60" in out


def test_growth_even_dihedral(capsys):
    code, out, _ = run(capsys, "growth", "--kind", "even", "--terms", "6", D4)
    assert code == 0
    assert "1,2,2,2,2,0,0" in out


def test_growth_json_deterministic(capsys):
    _, out1, _ = run(capsys, "growth", "--terms", "5", "--format", "json", C6)
    _, out2, _ = run(capsys, "growth", "--terms", "5", "--format", "json", C6)
    assert out1 == out2
    data = json.loads(out1)
    assert data["counts"] == [1, 6, 30, 138, 630, 2874]
    assert data["series"] == {"num": [1, 1, 2], "den": [1, -5, 2]}


def test_growth_csv(capsys):
    code, out, _ = run(capsys, "growth", "--terms", "3", "--format", "csv", C6)
    assert code == 0
    assert out.splitlines() == ["n,count", "0,1", "1,6", "2,30", "3,138"]


def test_growth_kind_mismatch(capsys):
    code, _, err = run(capsys, "growth", "--kind", "racg", D4)
    assert code == 1
    assert "labels above 2" in err


def test_growth_auto_kind_picks_even(capsys):
    code, out, _ = run(capsys, "growth", "--terms", "4", D4)
    assert code == 0
    assert "(even)" in out


def test_missing_file(capsys):
    code, _, err = run(capsys, "growth", "no_such_file.graph")
    assert code == 1
    assert "error" in err


def test_unknown_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["growth", "--frobnicate", C6])
    assert exc.value.code == 1


def test_compare_equal(capsys):
    code, out, _ = run(
        capsys, "compare", SQ24, OC24,
        "--terms", "8", "--max-len", "8", "--max-rank", "3",
    )
    assert code == 0
    assert "EQUAL" in out
    assert "chain tables equal: True" in out


def test_compare_differs(capsys):
    code, out, _ = run(capsys, "compare", C6, K3K3, "--terms", "6")
    assert code == 2
    assert "DIFFER at n=5" in out


def test_compare_c8_two_c4(capsys):
    code, out, _ = run(capsys, "compare", C8, TWO_C4, "--terms", "10")
    assert code == 0
    assert "EQUAL" in out


def test_chains_dihedral(capsys):
    code, out, _ = run(capsys, "chains", D4, "--max-len", "6", "--max-rank", "2")
    assert code == 0
    assert "Q[1][2]=2" in out
    assert "Q[1][5]=2" in out
    assert "Q[2][3]=2" in out
    assert "Q[2][6]=6" in out
    assert "recount matches: True" in out


def test_chains_json(capsys):
    code, out, _ = run(
        capsys, "chains", D4, "--max-len", "8", "--max-rank", "2",
        "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["recount_matches"] is True
    assert data["table"][2][6] == 6


def test_oracle_match(capsys):
    code, out, _ = run(capsys, "oracle", C6, "--terms", "6")
    assert code == 0
    assert "MATCH" in out


def test_oracle_budget_exhaustion(capsys):
    code, _, err = run(capsys, "oracle", SQ44, "--terms", "8", "--budget", "2")
    assert code == 3
    assert "budget" in err


def test_formula(capsys):
    code, out, _ = run(capsys, "formula", "--n", "8", "--l", "2")
    assert code == 0
    assert "(1 + z + 2*z^2) / (1 - 7*z + 2*z^2)" in out


def test_formula_rejects_small_n(capsys):
    code, _, err = run(capsys, "formula", "--n", "3", "--l", "2")
    assert code == 1
    assert "error" in err


def test_csv_not_defined_for_analyze(capsys):
    code, _, err = run(capsys, "analyze", C6, "--format", "csv")
    assert code == 1
    assert "csv" in err
