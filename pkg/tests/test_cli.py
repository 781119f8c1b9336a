import json
import os
import subprocess
import sys

import pytest

from agbug.cli import main
from agbug.session import COMMANDS, Session, SessionError, compare, render, tokens

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
SESSIONS = os.path.join(ROOT, "sessions")


def run(tmp_path, capsys, text, *flags):
    p = tmp_path / "s.bug"
    p.write_text(text)
    code = main(["run", str(p), *flags])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hilbert_session(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, "field QQ\nring R = x, y\nhilbert (x^3, y^3)\n")
    assert code == 0
    assert "hilbert = (1, 2, 3, 2, 1)" in out
    assert out.startswith("seed: ")


def test_unknown_command_is_an_input_error(tmp_path, capsys):
    code, out, err = run(tmp_path, capsys, "ring R = x\n\nfrobnicate R\n")
    assert code == 2
    assert err.strip().endswith("3: error: unknown command 'frobnicate'")
    assert out == ""


def test_false_check_exits_one(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys,
                       "ring R = x, y\ncheck hilbert (x^3, y^3) == (1, 2, 3, 3, 1)\n")
    assert code == 1
    assert "FAIL" in out and "status: fail" in out


@pytest.mark.parametrize("text, line", [
    ("ring R = x\nlet I = ideal S: x\n", 2),
    ("ring R = x, y\nhilbert (x^2, y^2\n", 2),
    ("field GF(4)\n", 1),
    ("ring R = x\ncheck hilbert (x^2) -> nothing == 1\n", 2),
    ("ring R = x, y\nhilbert (x^2)\n", 2),
    ("ring R = x\nhilbert (x^2) extra\n", 2),
])
def test_input_errors_name_the_line(tmp_path, capsys, text, line):
    code, _, err = run(tmp_path, capsys, text)
    assert code == 2
    assert f"s.bug:{line}: error:" in err


def test_missing_file(capsys):
    assert main(["run", "/nonexistent/s.bug"]) == 2


@pytest.mark.parametrize("name", sorted(os.listdir(SESSIONS)))
def test_demo_sessions_pass_and_are_byte_stable(capsys, name):
    path = os.path.join(SESSIONS, name)
    assert main(["run", path]) == 0
    first = capsys.readouterr().out
    assert main(["run", path]) == 0
    assert capsys.readouterr().out == first
    assert main(["run", path, "--json"]) == 0
    a = capsys.readouterr().out
    assert main(["run", path, "--json"]) == 0
    assert capsys.readouterr().out == a


@pytest.mark.parametrize("name", sorted(os.listdir(SESSIONS)))
def test_json_and_text_carry_the_same_data(capsys, name):
    path = os.path.join(SESSIONS, name)
    main(["run", path])
    text = capsys.readouterr().out
    main(["run", path, "--json"])
    tree = json.loads(capsys.readouterr().out)
    s = Session()
    with open(path) as fh:
        entries = s.run_text(fh.read())
    assert len(tree["results"]) == len(entries)
    for e, node in zip(entries, tree["results"]):
        assert node["line"] == e.line and node["command"] == e.command
        assert set(node["result"]) == set(e.fields)
        assert f"--- [{e.line}] {e.source}" in text
        for k, v in e.fields.items():
            assert f"{k} " in text and f"= {render(v)}" in text
    assert tree["status"] == "ok" and "status: ok" in text
    assert f"seed: {tree['seed']}" in text


def test_seed_changes_random_witnesses(tmp_path, capsys):
    text = "ring R = x, y, z\ngeneric-lefschetz (x^2, y^2, z^2) trials=2\n"
    _, a, _ = run(tmp_path, capsys, text, "--seed", "1")
    _, b, _ = run(tmp_path, capsys, text, "--seed", "2")
    assert "seed: 1" in a and "seed: 2" in b
    assert a.splitlines()[4:] != b.splitlines()[4:]


def test_figures_are_written(tmp_path, capsys):
    figdir = tmp_path / "figs"
    code, out, _ = run(tmp_path, capsys,
                       "ring R = x, y\nhilbert (x^3, y^3)\njordan (x^3, y^3) x+y\n",
                       "--figures", str(figdir))
    assert code == 0
    names = sorted(os.listdir(figdir))
    assert names == ["s-L2-hilbert.png", "s-L3-jordan.png"]
    assert all(os.path.getsize(figdir / n) > 0 for n in names)
    assert "figure: " in out


def test_verify_single_and_unknown(capsys):
    assert main(["verify", "6.6"]) == 0
    assert "6.6: PASS" in capsys.readouterr().out
    assert main(["verify", "1.1"]) == 2


def test_every_listed_command_is_available():
    listed = ("annihilate dualgen hilbert socle colon mingen thom blowup hat blowup-ideal bumd "
              "consum blowdown-check mingen-homology exact-zd ci wbc-embed compressed toric "
              "jordan lefschetz generic-lefschetz symdet fiber").split()
    assert set(listed) <= set(COMMANDS)


def test_gf_session_and_symdet(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys,
                       "field GF(3)\nring R = x, y\n"
                       "check generic-lefschetz (x^3, y^3) strategy=exhaustive -> slp == false\n"
                       "check symdet (x^2, y^2) 0 -> det == 2*a*b\n")
    assert code == 0, out


def test_compare_rules():
    assert compare(True, "true") and not compare(True, "false")
    assert compare((1, 2, 1), "(1,2,1)") and not compare((1, 2), "(1, 2, 1)")
    assert compare(None, "none")
    assert compare(3, "3")


def test_tokens_keep_brackets_and_quotes():
    assert tokens('hat A T "xi^2 - x*y" images=(x, y) k=\'a b\'') == [
        "hat", "A", "T", "xi^2 - x*y", "images=(x, y)", "k=a b"]
    with pytest.raises(ValueError):
        tokens("hilbert (x^2")


def test_session_error_type():
    s = Session()
    with pytest.raises(SessionError) as ei:
        s.run_text("let = 3\n")
    assert ei.value.line == 1


def test_console_script_entry_point():
    p = subprocess.run([sys.executable, "-m", "agbug", "verify", "3.3"], capture_output=True,
                       text=True)
    assert p.returncode == 0 and "3.3: PASS" in p.stdout
