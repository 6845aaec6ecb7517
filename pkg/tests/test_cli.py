import pytest

from sparseproj.cli import main

SUPPORT_3VAR_WITH_SIMPLEX = """\
system n=3 r=3 l=1
poly
0 0 0 : 2
1 1 0 : 3
0 1 1 : -1
poly
0 0 0 : -1
2 1 1 : 2
0 2 0 : 2
1 1 1 : 1
poly
0 0 0 : 1
1 0 0 : 1
0 1 0 : 1
0 0 1 : 1
"""

SYSTEM_5VAR = """\
system n=5 r=2 l=3
poly
0 0 0 0 0 : 3
1 1 1 0 0 : 2
2 0 0 4 2 : -1
0 0 0 8 4 : 5
poly
1 0 1 1 2 : 2
0 1 2 5 4 : -3
1 3 0 5 4 : 7
"""

SYSTEM_3VAR = """\
system n=3 r=2 l=2
poly
0 0 0 : 2
1 1 0 : 3
0 1 1 : -1
poly
0 0 0 : -1
2 1 1 : 2
0 2 0 : 2
1 1 1 : 1
"""

FIBER_3VAR = """\
system n=2 r=2 l=1
poly
0 0 : 2
1 0 : 3
1 1 : -1
poly
0 0 : -1
1 1 : 3
2 0 : 2
"""


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in [("support3", SUPPORT_3VAR_WITH_SIMPLEX),
                       ("sys5", SYSTEM_5VAR), ("sys3", SYSTEM_3VAR),
                       ("fiber3", FIBER_3VAR)]:
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        paths[name] = str(p)
    paths["tmp"] = tmp_path
    return paths


def test_mv_prints_paper_value(files, capsys):
    assert main(["mv", files["support3"]]) == 0
    assert capsys.readouterr().out.strip() == "6"


def test_transbasis_prints_one_based(files, capsys):
    assert main(["transbasis", files["sys5"]]) == 0
    assert capsys.readouterr().out.strip() == "1 2 4"


def test_gamma_lists_components(files, capsys):
    assert main(["gamma", files["sys3"]]) == 0
    out = capsys.readouterr().out
    assert "I: -" in out  # the empty subset is present


def test_solve0d_fiber(files, capsys):
    assert main(["solve0d", files["fiber3"], "--lambda", "X2=1"]) == 0
    out = capsys.readouterr().out
    assert "q(Y) = Y^2-12/5*Y-1/5" in out
    assert "X1 = -5/4*Y-3/4" in out
    assert "X2 = Y" in out


def test_project_threevar_golden_fraction(files, capsys):
    code = main(["project", files["sys3"], "--lambda", "X3=1", "--mu", "X2=1",
                 "--xi", "X1=1", "--format", "structured"])
    assert code == 0
    out = capsys.readouterr().out
    assert "(-12*X1^3-6*X1^2+6*X1)/(4*X1^2+2*X1-1)" in out


def test_project_deterministic_bytes(files, capsys):
    argv = ["project", files["sys5"], "--seed", "7", "--lambda", "X5=1",
            "--mu", "X3=1", "--b", "X4=1", "--xi", "X1=2,X2=3",
            "--format", "structured"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    assert "q 4 : (3/2)/(X1*X2)" in first


def test_project_text_output(files, capsys):
    code = main(["project", files["sys5"], "--lambda", "X5=1", "--mu", "X3=1",
                 "--b", "X4=1", "--xi", "X1=2,X2=3"])
    assert code == 0
    out = capsys.readouterr().out
    assert "free variables: X1 X2" in out
    assert "q(Y) = Y^5+(3/2)/(X1*X2)*Y^4" in out
    assert "X3 = Y" in out


def test_verify_roundtrip_and_mutation(files, capsys):
    res_path = str(files["tmp"] / "res.txt")
    assert main(["project", files["sys5"], "--lambda", "X5=1", "--mu", "X3=1",
                 "--b", "X4=1", "--xi", "X1=2,X2=3", "--output", res_path,
                 "--format", "structured"]) == 0
    capsys.readouterr()
    assert main(["verify", files["sys5"], res_path]) == 0
    out = capsys.readouterr().out
    assert "all identities pass" in out

    # corrupt one coefficient and expect a named failing identity
    text = open(res_path).read()
    bad = text.replace("q 4 : (3/2)/(X1*X2)", "q 4 : (5/2)/(X1*X2)")
    assert bad != text
    bad_path = str(files["tmp"] / "bad.txt")
    open(bad_path, "w").write(bad)
    assert main(["verify", files["sys5"], bad_path]) == 1
    captured = capsys.readouterr()
    assert "FAIL" in captured.out
    assert "q_mu(p_mu)" in captured.err or "q_mu" in captured.out


def test_usage_and_parse_errors(files, capsys, tmp_path):
    assert main(["mv", str(tmp_path / "missing.txt")]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("not a system\n")
    assert main(["mv", str(bad)]) == 2
    assert main(["project", files["sys5"], "--lambda", "X9=1"]) == 2
    assert main(["project", files["sys5"], "--lambda", "X1=1"]) == 2  # free var
    capsys.readouterr()


def test_env_seed_override(files, capsys, monkeypatch):
    monkeypatch.setenv("SPARSEPROJ_SEED", "7")
    argv = ["project", files["sys5"], "--lambda", "X5=1", "--mu", "X3=1",
            "--b", "X4=1", "--xi", "X1=2,X2=3", "--format", "structured"]
    assert main(argv) == 0
    via_env = capsys.readouterr().out
    monkeypatch.delenv("SPARSEPROJ_SEED")
    assert main(argv + ["--seed", "7"]) == 0
    via_flag = capsys.readouterr().out
    assert via_env == via_flag
