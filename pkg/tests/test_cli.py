import json

import pytest

from ctilde.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_normalize_coxeter_word(capsys):
    status, out, _ = run(capsys, "normalize", "-n", "2", "s0 s2 s1")
    assert status == 0
    assert out == "D^1 |\n"


def test_normalize_empty_word(capsys):
    status, out, _ = run(capsys, "normalize", "-n", "2", "")
    assert status == 0
    assert out == "D^0 |\n"


def test_normalize_json(capsys):
    status, out, _ = run(capsys, "normalize", "--format", "json", "s2 s1")
    payload = json.loads(out)
    assert status == 0
    assert payload["delta_power"] == 0
    assert payload["body"] == ["(1,3,4,2)"]


def test_eq_exit_codes(capsys):
    assert run(capsys, "eq", "-n", "2", "s0 s1 s0 s1", "s1 s0 s1 s0")[0] == 0
    assert run(capsys, "eq", "-n", "2", "s0", "s1")[0] == 1


def test_parse_error_exit_code(capsys):
    status, _, err = run(capsys, "normalize", "s9")
    assert status == 2
    assert "word_syntax" in err


def test_invalid_rank(capsys):
    status, out, _ = run(capsys, "normalize", "-n", "1", "--format", "json", "s0")
    assert status == 2
    assert json.loads(out)["error"] == "invalid_arguments"


def test_domain_error_in_json(capsys):
    status, out, _ = run(capsys, "lcm", "--format", "json", "(1,2,4,3)", "(2,3)")
    assert status == 1
    payload = json.loads(out)
    assert payload["error"] == "not_in_germ"
    assert payload["detail"]


def test_lcm_gcd_divides(capsys):
    assert run(capsys, "lcm", "(1,2)(3,4)", "(2,3)")[1] == "(1,3,4,2)\n"
    assert run(capsys, "gcd", "(1,3,4,2)", "(2,3)(4,5)")[1] == "(2,3)\n"
    assert run(capsys, "divides", "(2,3)", "(1,3,4,2)")[1] == "true\n"


def test_atoms_reports_window(capsys):
    status, out, _ = run(capsys, "atoms", "-K", "1", "(1,3,4,2)")
    lines = out.splitlines()
    assert status == 0
    assert lines[0] == "# window=1 complete=true count=4"
    assert set(lines[1:]) == {"(1,4)", "(2,3)", "(1,2)(3,4)", "(1,3)(2,4)"}


def test_divisors_json(capsys):
    status, out, _ = run(capsys, "divisors", "--format", "json", "(1,3,4,2)")
    payload = json.loads(out)
    assert status == 0
    assert payload["complete"]
    assert payload["count"] == 6


def test_present(capsys):
    status, out, _ = run(capsys, "present", "-n", "2", "-K", "1")
    assert status == 0
    assert out.startswith("# n=2 window=1 truncated=true")
    assert "(2,3).(1,2)(3,4) = (1,3)(2,4).(2,3)" in out


def test_hurwitz(capsys):
    status, out, _ = run(capsys, "hurwitz", "--format", "json", "(1,3,4,2)")
    payload = json.loads(out)
    assert status == 0
    assert payload["targets"] == payload["reached"] == 4
    assert payload["transitive"]


def test_centralize(capsys):
    status, out, _ = run(capsys, "centralize", "-n", "2", "2")
    assert status == 0
    assert "fixed divisors: 6" in out


def test_centralize_rejects_bad_power(capsys):
    assert run(capsys, "centralize", "x")[0] == 2


def test_draw_is_byte_stable(capsys):
    first = run(capsys, "draw", "(1,3)[1](4,2)[-1]")[1]
    second = run(capsys, "draw", "(1,3)[1](4,2)[-1]")[1]
    assert first == second
    assert first.startswith("<svg")


def test_draw_custom_strip(capsys):
    status, out, _ = run(capsys, "draw", "--period", "9", "--x", "5,6,7,8,9", "(5,7,8,3,2)")
    assert status == 0
    assert 'data-period="9"' in out


def test_draw_strip_flags_go_together(capsys):
    assert run(capsys, "draw", "--period", "9", "(1,2)")[0] == 2


def test_unknown_command():
    with pytest.raises(SystemExit):
        main(["frobnicate"])


def test_draw_accepts_svg_format(capsys):
    status, out, _ = run(capsys, "draw", "--format", "svg", "(2,3)")
    assert status == 0
    assert out.startswith("<svg")


@pytest.mark.parametrize("command", [["normalize", "s0"], ["atoms", "(2,3)"], ["present"]])
def test_svg_format_is_only_for_draw(capsys, command):
    with pytest.raises(SystemExit) as info:
        main([command[0], "--format", "svg", *command[1:]])
    assert info.value.code == 2
    assert "invalid choice" in capsys.readouterr().err
