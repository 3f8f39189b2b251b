import csv
import io
from importlib import resources
from pathlib import Path

import pytest

from ccc.cli import main

DATA = resources.files("ccc.data")
GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse rejections
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


class TestEncode:
    def test_table(self, capsys):
        code, out, _ = run(capsys, "encode", "--count", "16")
        assert code == 0
        rows = [line.split() for line in out.splitlines()]
        assert len(rows) == 16
        assert rows[0] == ["1", "00000"] and rows[6] == ["7", "1111i"] and rows[15] == ["16", "uuuuu"]

    def test_single(self, capsys):
        assert run(capsys, "encode", "--count", "16", "--index", "1")[:2] == (0, "00000\n")

    def test_bad_count(self, capsys):
        assert run(capsys, "encode", "--count", "1")[0] == 2

    def test_bad_index(self, capsys):
        assert run(capsys, "encode", "--count", "16", "--index", "17")[0] == 2


class TestRun:
    @pytest.mark.parametrize("name", ["example1", "example2"])
    def test_trace_golden(self, capsys, name):
        code, out, _ = run(capsys, "run", "--samples", str(DATA / f"{name}.txt"), "--trace")
        assert code == 0
        assert out == (GOLDEN / f"{name}_trace.txt").read_text()

    def test_plain_output_is_sample_format(self, capsys):
        code, out, _ = run(capsys, "run", "--samples", str(DATA / "example1.txt"))
        assert code == 0
        assert out == "# r = 0\ni i -> 0\ni u -> 1\nu i -> 1\nu u -> 0\n"

    def test_eval_file_and_radii(self, capsys, tmp_path):
        probe = tmp_path / "probe.txt"
        probe.write_text("0 0\nu u\n")
        code, out, _ = run(
            capsys, "run", "--samples", str(DATA / "example1.txt"), "--eval", str(probe), "--r", "0,1"
        )
        assert code == 0
        blocks = out.split("# r = ")[1:]
        assert blocks[0] == "0\n0 0 -> 0\nu u -> 0\n"
        assert blocks[1].startswith("1\n")

    def test_out_file(self, capsys, tmp_path):
        dest = tmp_path / "trace.txt"
        code, out, _ = run(capsys, "run", "--samples", str(DATA / "example2.txt"), "--trace", "--out", str(dest))
        assert code == 0 and out == ""
        assert dest.read_text() == (GOLDEN / "example2_trace.txt").read_text()

    def test_empty_samples(self, capsys, tmp_path):
        empty = tmp_path / "empty.txt"
        empty.write_text("# nothing\n")
        assert run(capsys, "run", "--samples", str(empty))[0] == 2

    def test_parse_error_reports_line(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("i u -> 1\ni -> 1\n")
        code, _, err = run(capsys, "run", "--samples", str(bad))
        assert code == 2 and "line 2" in err

    def test_missing_file(self, capsys):
        assert run(capsys, "run", "--samples", "/nonexistent/file")[0] == 2


class TestSpiral:
    def test_defaults(self, capsys):
        code, out, _ = run(capsys, "spiral")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out.split("\n\n")[0])))
        assert [int(r["r"]) for r in rows] == [1, 2, 3, 4]
        assert all(int(r["classified"]) + int(r["misclassified"]) == 256 for r in rows)

    def test_out_dir(self, capsys, tmp_path):
        code, _, _ = run(capsys, "spiral", "--r", "0,1", "--out", str(tmp_path))
        assert code == 0
        names = sorted(p.name for p in tmp_path.iterdir())
        assert names == ["pattern.txt", "predictions_r0.txt", "predictions_r1.txt", "samples.txt", "spiral_counts.csv"]

    def test_bad_pattern(self, capsys, tmp_path):
        bad = tmp_path / "p.txt"
        bad.write_text("#.\n")
        assert run(capsys, "spiral", "--pattern", str(bad))[0] == 2

    def test_bad_counts(self, capsys):
        assert run(capsys, "spiral", "--black", "500")[0] == 2


class TestMackey:
    def test_defaults(self, capsys):
        code, out, _ = run(capsys, "mackey")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [int(r["r"]) for r in rows] == [4, 5, 6, 7, 10]

    def test_out_dir(self, capsys, tmp_path):
        code, _, _ = run(capsys, "mackey", "--r", "5", "--out", str(tmp_path))
        assert code == 0
        lines = (tmp_path / "predictions_r5.csv").read_text().splitlines()
        assert lines[0] == "k,actual,predicted,region_actual,region_predicted"
        assert len(lines) == 22
        assert lines[1].startswith("180,") and lines[-1].startswith("200,")
        assert len((tmp_path / "training_r5.csv").read_text().splitlines()) == 176
        assert (tmp_path / "nmse.csv").read_text().startswith("r,nmse")

    def test_svg(self, capsys, tmp_path):
        pytest.importorskip("matplotlib")
        code, _, _ = run(capsys, "mackey", "--r", "4", "--out", str(tmp_path), "--svg")
        assert code == 0
        assert (tmp_path / "mackey_r4.svg").read_text().lstrip().startswith("<?xml")

    def test_degenerate_series(self, capsys):
        assert run(capsys, "mackey", "--alpha", "0", "--beta", "1")[0] == 2

    @pytest.mark.parametrize(
        "argv",
        [["--tau", "2"], ["--length", "100"], ["--svg"], ["--r", "x"], ["--init", "1,2"]],
    )
    def test_usage_errors(self, capsys, argv):
        assert run(capsys, "mackey", *argv)[0] == 2

    def test_custom_init(self, capsys):
        code, out, _ = run(capsys, "mackey", "--tau", "2", "--init", "1.5,0.65,-0.5", "--r", "5")
        assert code == 0
        assert out.splitlines()[1].startswith("5,")
