import pytest

from ribbonpoly.cli import run_command

LOOP_TEXT = "ribbon 1 1\nrot 0: 0 1\nedge 0: 0 1 untwisted\n"


@pytest.fixture
def loop_file(tmp_path):
    path = tmp_path / "loop.ribbon"
    path.write_text(LOOP_TEXT)
    return str(path)


def test_poly_tutte_loop(loop_file, capsys):
    assert run_command(["poly", "tutte", loop_file]) == 0
    assert capsys.readouterr().out == "y\n"


def test_poly_br_and_penrose(loop_file, capsys):
    assert run_command(["poly", "br", loop_file]) == 0
    assert capsys.readouterr().out == "y + 1\n"
    assert run_command(["poly", "penrose", loop_file]) == 0
    assert capsys.readouterr().out == "L^2 - L\n"
    assert run_command(["poly", "penrose", loop_file, "--at", "2"]) == 0
    assert capsys.readouterr().out == "2\n"


def test_lens_tau(capsys):
    assert run_command(["lens", "tau", "--p", "5", "--q", "1"]) == 0
    assert capsys.readouterr().out == "80\n"


def test_lens_orbit(capsys):
    assert run_command(["lens", "orbit", "--p", "7", "--q", "2"]) == 0
    assert capsys.readouterr().out == "{2|3|4|5}\n"


def test_lens_graph_roundtrip(tmp_path, capsys):
    out = tmp_path / "g.ribbon"
    assert run_command(["lens", "graph", "--p", "3", "--q", "1",
                        "-o", str(out)]) == 0
    text = out.read_text()
    assert text.splitlines()[0] == "ribbon 3 6"
    assert run_command(["poly", "penrose", str(out), "--at", "2"]) == 0
    assert capsys.readouterr().out == "8\n"


def test_lens_scan_csv(tmp_path, capsys):
    assert run_command(["lens", "scan", "--pmax", "5"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "p,orbit_rep,orbit,tau"
    assert "5,2,{2|3},125" in out
    csv_path = tmp_path / "scan.csv"
    assert run_command(["lens", "scan", "--pmax", "5", "--csv",
                        str(csv_path)]) == 0
    assert csv_path.read_text() == out


def test_determinism(loop_file, capsys):
    run_command(["poly", "br", loop_file])
    first = capsys.readouterr().out
    run_command(["poly", "br", loop_file])
    assert capsys.readouterr().out == first


def test_usage_errors(capsys):
    assert run_command(["frobnicate"]) == 2
    assert run_command(["lens", "tau", "--p", "5"]) == 2
    assert run_command(["poly", "tutte", "/nonexistent/file"]) == 2
    capsys.readouterr()


def test_failure_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.ribbon"
    bad.write_text("ribbon 1 2\nrot 0: 0 1\nedge 0: 0 1 untwisted\n")
    assert run_command(["poly", "tutte", str(bad)]) == 1
    err = capsys.readouterr().err
    assert "error:" in err
    assert run_command(["lens", "tau", "--p", "4", "--q", "2"]) == 1
    capsys.readouterr()


def test_at_flag_only_for_penrose(loop_file, capsys):
    assert run_command(["poly", "tutte", loop_file, "--at", "2"]) == 2
    capsys.readouterr()
