"""CLI behavior: golden outputs, exit codes, batch determinism, selftest."""

import json

import pytest

import hecke5.reduction as reduction_module
from hecke5.cli import Command, main, parse_command
from hecke5.reduction import PseudoStep
from hecke5.ring import LAMBDA, RingElt, parse_element


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--json", *argv)
    objects = [json.loads(line) for line in out.splitlines()]
    return code, objects, err


# --- element grammar goldens ---------------------------------------------------------


def test_parse_element_goldens():
    assert parse_element("2*L-1") == RingElt(-1, 2)
    assert parse_element("225*L+139") == RingElt(139, 225)
    assert parse_element("5") == RingElt(5, 0)
    assert parse_element(" 2 * L - 1 ") == RingElt(-1, 2)


# --- single-command goldens ----------------------------------------------------------


def test_reduce_golden_json(capsys):
    code, (obj,), _ = run_json(capsys, "reduce", "2*L-1", "12")
    assert code == 0
    assert obj["schema"] == "hecke5.reduce/1"
    assert obj["e"] == 6
    assert obj["reduced"] == ["18*L+11", "96*L+60"]
    assert obj["factored"] == ["(2*L-1)*L**6", "12*L**6"]


def test_reduce_text(capsys):
    code, out, _ = run(capsys, "reduce", "2*L-1", "12")
    assert code == 0
    lines = out.splitlines()
    assert "e = 6" in lines
    assert "reduced = 18*L+11 / 96*L+60" in lines


def test_normalizer_golden_json(capsys):
    code, (obj,), _ = run_json(capsys, "normalizer", "16")
    assert code == 0
    assert obj["schema"] == "hecke5.normalizer/1"
    assert obj["modulus"] == "4"
    assert obj["h"] == 4
    assert obj["quotient"] == "Z4xZ4"


def test_index_golden(capsys):
    code, out, _ = run(capsys, "index", "3")
    assert code == 0
    assert out.strip() == "10"
    code, (obj,), _ = run_json(capsys, "index", "3")
    assert code == 0
    assert obj["index"] == 10


def test_factor_golden(capsys):
    code, (obj,), _ = run_json(capsys, "factor", "5")
    assert code == 0
    assert obj["schema"] == "hecke5.factor/1"
    assert obj["unit"] == "1"
    assert obj["factors"] == [["2*L-1", 2]]


def test_cosets_shape(capsys):
    code, (obj,), _ = run_json(capsys, "cosets", "3")
    assert code == 0
    assert obj["size"] == 10
    assert len(obj["reps"]) == 10
    assert obj["reps"][0] == {"point": ["0", "1"], "word": ""}


def test_explain_json(capsys):
    code, (obj,), _ = run_json(capsys, "explain", "48")
    assert code == 0
    assert obj["final"] == "12"
    assert obj["half_power_bound"] == "12"
    assert [step["part"] for step in obj["steps"]] == ["3-part", "root5-part"]
    assert obj["steps"][0]["gcds"] == ["4", "4"]


def test_quotient_json(capsys):
    code, (obj,), _ = run_json(capsys, "quotient", "16")
    assert code == 0
    assert obj["order"] == 16
    assert obj["classification"] == "Z4xZ4"
    assert obj["profile"] == [[1, 1], [2, 3], [4, 12]]
    assert obj["normalizer_modulus"] == "4"


# --- membership and exit-code semantics ----------------------------------------------


def test_member_true_with_word(capsys):
    code, (obj,), _ = run_json(capsys, "member", "1", "L", "0", "1")
    assert code == 0
    assert obj["member"] is True
    assert obj["word"] == "T"


def test_member_false_exits_two(capsys):
    code, (obj,), _ = run_json(capsys, "member", "1", "1", "0", "1")
    assert code == 2
    assert obj["member"] is False


def test_member_modulus_variants(capsys):
    code, (obj,), _ = run_json(capsys, "member", "1", "0", "2*L", "1", "2")
    assert code == 0 and obj["member"] is True
    code, (obj,), _ = run_json(capsys, "member", "1", "0", "2*L", "1", "4")
    assert code == 2 and obj["member"] is False


def test_member_negative_entries_after_separator(capsys):
    code, (obj,), _ = run_json(capsys, "member", "--", "1", "0", "-2*L", "1", "2")
    assert code == 0
    assert obj["member"] is True


def test_member_bad_determinant_is_error(capsys):
    code, (obj,), _ = run_json(capsys, "member", "1", "0", "0", "2")
    assert code == 1
    assert obj["schema"] == "hecke5.error/1"
    assert obj["code"] == "BadDeterminant"


def test_elementary_counterexample_exits_two(capsys):
    code, (obj,), _ = run_json(capsys, "elementary", "3")
    assert code == 2
    assert obj["verdict"] == "CounterexampleFound"
    assert obj["witness"] == ["2*L+2", "2*L+1"]
    assert obj["denominator"] == "6*L+3"


def test_elementary_bound_flag(capsys):
    code, (obj,), _ = run_json(capsys, "elementary", "3", "--bound", "6")
    assert code == 2
    assert obj["bound"] == 6


def test_elementary_strong_cli(capsys):
    code, (obj,), _ = run_json(capsys, "elementary", "8", "--strong")
    assert code == 2
    assert obj["holds"] is False
    assert obj["failing_divisor"] == "8"
    assert obj["divisors"] == ["1", "2", "4", "8"]


def test_elementary_no_counterexample_exits_zero(capsys):
    code, (obj,), _ = run_json(capsys, "elementary", "4")
    assert code == 0
    assert obj["verdict"] == "NoCounterexampleUpTo"


# --- errors and usage ----------------------------------------------------------------


def test_no_verb_is_usage_error(capsys):
    code, out, err = run(capsys)
    assert code == 1
    assert "error[Usage]" in err


def test_unknown_verb_is_usage_error(capsys):
    code, out, err = run(capsys, "frobnicate")
    assert code == 1
    assert "error[Usage]" in err


def test_error_object_in_json_mode(capsys):
    code, (obj,), err = run_json(capsys, "factor", "0")
    assert code == 1
    assert obj == {
        "schema": "hecke5.error/1",
        "code": "ZeroInput",
        "message": "cannot factor zero",
    }
    assert err == ""


def test_error_text_mode_goes_to_stderr(capsys):
    code, out, err = run(capsys, "factor", "0")
    assert code == 1
    assert out == ""
    assert "error[ZeroInput]" in err


def test_parse_error_carries_position(capsys):
    code, (obj,), _ = run_json(capsys, "reduce", "bogus", "12")
    assert code == 1
    assert obj["code"] == "Parse"
    assert "position 0" in obj["message"]


def test_bound_exceeded_error(capsys):
    code, (obj,), _ = run_json(capsys, "--bound", "5", "cosets", "16")
    assert code == 1
    assert obj["code"] == "BoundExceeded"


def test_help_and_version_exit_zero(capsys):
    assert run(capsys, "--help")[0] == 0
    assert run(capsys, "--version")[0] == 0


# --- batch mode ----------------------------------------------------------------------

BATCH_LINES = """\
reduce 2*L-1 12
index 3
# a comment

member 1 1 0 1
normalizer 16
factor 0
"""


def test_batch_json_order_and_exit(tmp_path, capsys):
    path = tmp_path / "commands.txt"
    path.write_text(BATCH_LINES, encoding="utf-8")
    code, objects, _ = run_json(capsys, "--batch", str(path))
    assert code == 1  # one line errored
    assert [obj["schema"] for obj in objects] == [
        "hecke5.reduce/1",
        "hecke5.index/1",
        "hecke5.member/1",
        "hecke5.normalizer/1",
        "hecke5.error/1",
    ]


def test_batch_json_byte_identical(tmp_path, capsys):
    path = tmp_path / "commands.txt"
    path.write_text(BATCH_LINES, encoding="utf-8")
    _, first, _ = run(capsys, "--json", "--batch", str(path))
    _, second, _ = run(capsys, "--json", "--batch", str(path))
    assert first == second


def test_batch_refutation_exit(tmp_path, capsys):
    path = tmp_path / "commands.txt"
    path.write_text("member 1 1 0 1\nindex 3\n", encoding="utf-8")
    code, _, _ = run_json(capsys, "--batch", str(path))
    assert code == 2


def test_batch_all_success_exit(tmp_path, capsys):
    path = tmp_path / "commands.txt"
    path.write_text("index 3\nnormalizer 16\n", encoding="utf-8")
    code, objects, _ = run_json(capsys, "--batch", str(path))
    assert code == 0
    assert len(objects) == 2


def test_batch_text_one_line_per_command(tmp_path, capsys):
    path = tmp_path / "commands.txt"
    path.write_text("reduce 2*L-1 12\nindex 3\n", encoding="utf-8")
    code, out, _ = run(capsys, "--batch", str(path))
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("e = 6; reduced = 18*L+11 / 96*L+60")
    assert lines[1] == "10"


def test_batch_line_flags_override(tmp_path, capsys):
    path = tmp_path / "commands.txt"
    path.write_text("elementary 3 --bound 6\n", encoding="utf-8")
    code, (obj,), _ = run_json(capsys, "--batch", str(path))
    assert code == 2
    assert obj["bound"] == 6


def test_batch_plus_verb_rejected(tmp_path, capsys):
    path = tmp_path / "commands.txt"
    path.write_text("index 3\n", encoding="utf-8")
    code, _, err = run(capsys, "--batch", str(path), "index", "3")
    assert code == 1
    assert "error[Usage]" in err


def test_batch_missing_file_is_error(capsys):
    code, _, err = run(capsys, "--batch", "/nonexistent/commands.txt")
    assert code == 1
    assert "error[Usage]" in err


def test_command_roundtrip():
    cmd = parse_command("reduce 2*L-1 12")
    assert cmd == Command("reduce", ("2*L-1", "12"), "text")
    assert parse_command(cmd.line()) == cmd
    quoted = parse_command("factor '12*L + 7'")
    assert quoted.arguments == ("12*L + 7",)
    assert parse_command(quoted.line()) == quoted


# --- selftest ------------------------------------------------------------------------


def test_selftest_full_run(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "42/42 passed" in out
    assert "PASS table 2/1L" in out
    assert "PASS forms (2*L-1)/192" in out
    assert "PASS conjugation level 9" in out
    assert "PASS indices up to norm 400" in out
    assert "PASS quotient 16" in out
    assert "PASS elementary 12*L+7" in out
    assert "FAIL" not in out


def test_selftest_only_filter(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "quotient")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "2/2 passed"
    assert all(line.startswith("PASS quotient") for line in lines[:-1])


def test_selftest_only_no_match_is_error(capsys):
    code, _, err = run(capsys, "selftest", "--only", "3.2")
    assert code == 1
    assert "error[Usage]" in err


def test_selftest_json(capsys):
    code, (obj,), _ = run_json(capsys, "selftest", "--only", "forms")
    assert code == 0
    assert obj["schema"] == "hecke5.selftest/1"
    assert obj["passed"] == obj["total"] == 3
    assert obj["failed"] == 0


def test_selftest_negative_control_reports_table_failures(capsys, monkeypatch):
    real = reduction_module.pseudo_divide

    def crooked(x, y):
        step = real(x, y)
        if step.remainder:
            return PseudoStep(step.quotient + 1, step.remainder - y * LAMBDA)
        return step

    monkeypatch.setattr(reduction_module, "pseudo_divide", crooked)
    code, out, _ = run(capsys, "selftest", "--only", "table 3/")
    assert code == 1
    assert "FAIL table 3/" in out
    assert "0/3 passed" in out
