"""Command-line interface: outputs, formats, exit codes."""

from __future__ import annotations

import json

import pytest

from chord_census import Gluing
from chord_census.cli import main

WORKED_EXAMPLE = "(1,8)(2,4)(3,7)(5,12)(6,9)(10,11)"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTable:
    def test_csv_reproduces_reference_columns(self, capsys):
        code, out, _ = run(capsys, "table", "--from", "2", "--to", "11",
                           "--format", "csv")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "n,total,o_total,d_star,d_double_star,d_o,d_n"
        dds = [int(line.split(",")[4]) for line in lines[1:]]
        assert dds == [3, 7, 35, 193, 1799, 19311, 254143, 3828921,
                       65486307, 1249937335]
        d_o = [int(line.split(",")[5]) for line in lines[1:]]
        assert d_o == [2, 4, 10, 28, 136, 726, 5100, 40362, 363288, 3628810]

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "table", "--from", "2", "--to", "3")
        assert code == 0
        assert out.splitlines()[0].split() == [
            "n", "total", "o_total", "d_star", "d_double_star", "d_o", "d_n",
        ]

    def test_json_sorted_keys(self, capsys):
        code, out, _ = run(capsys, "table", "--from", "2", "--to", "2",
                           "--format", "json")
        assert code == 0
        assert json.loads(out)["rows"][0]["d_double_star"] == 3
        assert out == out  # deterministic single call sanity
        again = run(capsys, "table", "--from", "2", "--to", "2", "--format", "json")
        assert again[1] == out


class TestCount:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "count", "--n", "5", "--class", "o")
        assert code == 0
        assert out.strip() == "n=5 class=o total_gluings=120 classes=28"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "count", "--n", "3", "--class", "n",
                           "--format", "json")
        assert json.loads(out) == {
            "class": "n", "classes": 3, "n": 3, "total_gluings": 9,
        }


class TestEnumerate:
    def test_stream_round_trips(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "3")
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 15
        parsed = [Gluing.parse(line) for line in lines]
        assert [g.text() for g in parsed] == lines

    def test_class_filter(self, capsys):
        _, out_o, _ = run(capsys, "enumerate", "--n", "3", "--class", "o")
        assert len(out_o.strip().split("\n")) == 6
        _, out_n, _ = run(capsys, "enumerate", "--n", "3", "--class", "n")
        assert len(out_n.strip().split("\n")) == 9

    def test_json_lines(self, capsys):
        _, out, _ = run(capsys, "enumerate", "--n", "2", "--format", "json")
        rows = [json.loads(line) for line in out.strip().split("\n")]
        assert rows[0] == {"chords": [[1, 2], [3, 4]], "n": 2}


class TestOrbits:
    def test_census_line(self, capsys):
        code, out, _ = run(capsys, "orbits", "--n", "4")
        assert code == 0
        assert out.strip() == (
            "n=4 class=all group_order=4 total_gluings=105 orbit_count=35"
        )

    def test_orbit_reps(self, capsys):
        code, out, _ = run(capsys, "orbits", "--n", "2", "--orbit-reps")
        lines = out.strip().split("\n")
        assert lines[0].endswith("orbit_count=3")
        assert lines[1:] == [
            "(1,2)(3,4) size=1 stabilizer=2",
            "(1,3)(2,4) size=1 stabilizer=2",
            "(1,4)(2,3) size=1 stabilizer=2",
        ]

    def test_full_group(self, capsys):
        code, out, _ = run(capsys, "orbits", "--n", "4", "--full-group")
        assert "group_order=8" in out
        assert "orbit_count=18" in out

    def test_budget_exit_code(self, capsys):
        code, _, err = run(capsys, "orbits", "--n", "6", "--budget", "100")
        assert code == 1
        assert "budget" in err

    def test_env_budget(self, capsys, monkeypatch):
        monkeypatch.setenv("CHORD_CENSUS_BUDGET", "100")
        code, _, err = run(capsys, "orbits", "--n", "6")
        assert code == 1 and "budget" in err

    def test_progress_on_stderr(self, capsys):
        code, out, err = run(capsys, "orbits", "--n", "3", "--progress")
        assert code == 0
        assert "processed=" in err and "processed=" not in out

    def test_json(self, capsys):
        _, out, _ = run(capsys, "orbits", "--n", "3", "--class", "n",
                        "--format", "json")
        record = json.loads(out)
        assert record["orbit_count"] == 3
        assert record["total_gluings"] == 9


class TestDiagramCommands:
    def test_cycles_worked_example(self, capsys):
        code, out, _ = run(capsys, "cycles", WORKED_EXAMPLE)
        assert code == 0
        assert "Cb1=[1,2](2,4)[4,3](3,7)[7,8](8,1)" in out
        assert "lambda_b=2 lambda_w=2 lambda_total=4" in out
        assert "orientable=false" in out

    def test_cycles_json(self, capsys):
        _, out, _ = run(capsys, "cycles", "(1,2)", "--format", "json")
        record = json.loads(out)
        assert record["lambda_total"] == 2
        assert record["surface"]["genus"] == 0

    def test_iso_true(self, capsys):
        code, out, _ = run(capsys, "iso", "(1,2)", "(1,2)")
        assert code == 0 and out.strip() == "true"

    def test_iso_false_still_exit_zero(self, capsys):
        code, out, _ = run(capsys, "iso", "(1,2)(3,4)", "(1,4)(2,3)")
        assert code == 0 and out.strip() == "false"

    def test_iso_size_mismatch_is_usage_error(self, capsys):
        code, _, err = run(capsys, "iso", "(1,2)", "(1,2)(3,4)")
        assert code == 2 and "error" in err

    def test_canon(self, capsys):
        from chord_census import canonical_form

        code, out, _ = run(capsys, "canon", "(1,2)(3,6)(4,5)")
        assert code == 0
        assert out.strip() == canonical_form(Gluing.parse("(1,2)(3,6)(4,5)")).text()

    def test_classify(self, capsys):
        code, out, _ = run(capsys, "classify", "(1,2)(3,4)(5,6)")
        assert code == 0 and out.strip() == "O"
        code, out, _ = run(capsys, "classify", "(1,3)(2,4)")
        assert out.strip() == "N"

    def test_malformed_gluing_is_usage_error(self, capsys):
        code, _, err = run(capsys, "classify", "(1,2")
        assert code == 2 and "error" in err
        code, _, err = run(capsys, "cycles", "(1,1)")
        assert code == 2


class TestRender:
    def test_svg_on_stdout(self, capsys):
        code, out, _ = run(capsys, "render", "(1,2)")
        assert code == 0
        assert out.startswith("<svg ")
        assert out.count("<line ") == 1


class TestVerify:
    def test_passes_on_correct_build(self, capsys):
        code, out, _ = run(capsys, "verify", "--to", "5")
        assert code == 0
        assert "FAIL" not in out
        assert out.strip().splitlines()[-1].startswith("PASS")

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "verify", "--to", "3", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["passed"] is True
        assert all(check["ok"] for check in report["checks"])

    def test_depth_eight_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--to", "8")
        assert code == 0
        assert "FAIL" not in out

    def test_seeded_mutation_fails(self, capsys, monkeypatch):
        # corrupt one counting formula; verify must notice and exit 1
        import chord_census.counting as counting_mod

        original = counting_mod.o_classes
        monkeypatch.setattr(counting_mod, "o_classes", lambda n: original(n) + 1)
        code, out, _ = run(capsys, "verify", "--to", "3")
        assert code == 1
        assert "FAIL" in out


class TestArgumentErrors:
    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["definitely-not-a-command"])
        assert exc.value.code == 2

    def test_missing_required(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["count"])
        assert exc.value.code == 2

    def test_bad_class_value(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["count", "--n", "3", "--class", "x"])
        assert exc.value.code == 2
