import csv
import io
import subprocess
import sys

import pytest

from linkcliques.cli import BENCH_HEADER, main

from conftest import ABCD_TEXT


@pytest.fixture
def files(tmp_path):
    paths = {
        "abcd": tmp_path / "abcd.txt",
        "empty": tmp_path / "empty.txt",
        "bad": tmp_path / "bad.txt",
        "events": tmp_path / "events.txt",
        "single": tmp_path / "single.txt",
        "none": tmp_path / "none.txt",
    }
    paths["abcd"].write_text(ABCD_TEXT)
    paths["empty"].write_text("")
    paths["bad"].write_text("2 10 a b\n4 x b c\n")
    paths["events"].write_text("#horizon 0 10\n1 u v\n3 u v\n8 u v\n")
    paths["single"].write_text("#horizon 0 10\n5 u v\n")
    paths["none"].write_text("#horizon 0 10\n")
    return {k: str(v) for k, v in paths.items()}


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestCliques:
    def test_abcd_example(self, files, capsys):
        code, out, err = run(["cliques", files["abcd"]], capsys)
        lines = out.splitlines()
        assert code == 0 and len(lines) == 7
        assert "6 10 a b c" in lines and "13 16 b c d" in lines
        assert "cliques=7" in err and "cliques" not in out

    def test_json_to_file(self, files, tmp_path, capsys):
        target = tmp_path / "out.jsonl"
        code, out, _ = run(["cliques", files["abcd"], "--format", "json-lines", "-o", str(target)], capsys)
        assert code == 0 and out == ""
        assert '{"begin":13,"end":17,"nodes":["b","d"]}' in target.read_text().splitlines()

    def test_empty(self, files, capsys):
        code, out, _ = run(["cliques", files["empty"]], capsys)
        assert code == 0 and out == ""

    def test_malformed(self, files, capsys):
        code, out, err = run(["cliques", files["bad"]], capsys)
        assert code == 1 and "line 2" in err and out == ""

    def test_missing_file(self, tmp_path, capsys):
        assert run(["cliques", str(tmp_path / "nope.txt")], capsys)[0] == 1

    def test_byte_identical_runs(self, files, capsys):
        first = run(["cliques", files["abcd"]], capsys)[1]
        assert run(["cliques", files["abcd"]], capsys)[1] == first


class TestDeltaCliques:
    def test_three_events(self, files, capsys):
        code, out, _ = run(["delta-cliques", files["events"], "--delta", "2"], capsys)
        assert code == 0 and out.splitlines() == ["0 5 u v", "6 10 u v"]

    def test_delta_too_large(self, files, capsys):
        assert run(["delta-cliques", files["events"], "--delta", "11"], capsys)[0] == 1

    def test_zero_delta(self, files, capsys):
        code, out, _ = run(["delta-cliques", files["single"], "--delta", "0"], capsys)
        assert code == 0 and out == "5 5 u v\n"


class TestTransform:
    def test_three_events(self, files, capsys):
        code, out, _ = run(["transform", files["events"], "--delta", "2"], capsys)
        assert code == 0 and out.splitlines() == ["#horizon 2 10", "2 5 u v", "8 10 u v"]

    def test_no_events(self, files, capsys):
        code, out, _ = run(["transform", files["none"], "--delta", "3"], capsys)
        assert code == 0 and out == "#horizon 3 10\n"

    def test_zero_delta(self, files, capsys):
        code, out, _ = run(["transform", files["events"], "--delta", "0"], capsys)
        assert out.splitlines()[1:] == ["1 1 u v", "3 3 u v", "8 8 u v"]

    def test_output_feeds_cliques(self, files, tmp_path, capsys):
        target = tmp_path / "l_delta.txt"
        run(["transform", files["events"], "--delta", "2", "-o", str(target)], capsys)
        code, out, _ = run(["cliques", str(target)], capsys)
        assert out.splitlines() == ["2 5 u v", "8 10 u v"]


class TestStats:
    def test_abcd_example(self, files, capsys):
        code, out, _ = run(["stats", files["abcd"]], capsys)
        lines = out.splitlines()
        assert code == 0 and {"n 4", "m 5", "horizon 0 20"} <= set(lines)

    def test_empty(self, files, capsys):
        lines = run(["stats", files["empty"]], capsys)[1].splitlines()
        assert "n 0" in lines and "m 0" in lines

    def test_instant(self, files, capsys):
        lines = run(["stats", files["events"]], capsys)[1].splitlines()
        assert "kind instant" in lines and "m 3" in lines


class TestCheck:
    def test_duration(self, capsys):
        assert run(["check", "--trials", "200", "--seed", "42"], capsys)[0] == 0

    def test_delta(self, capsys):
        argv = ["check", "--kind", "delta", "--trials", "100", "--max-nodes", "5", "--max-links", "20"]
        assert run(argv, capsys)[0] == 0

    def test_injected_fault_is_caught(self, capsys):
        code, _, err = run(["check", "--trials", "100", "--inject-fault"], capsys)
        assert code == 2 and "seed" in err


class TestBench:
    def test_grid_rows(self, files, tmp_path, capsys):
        target = tmp_path / "bench.csv"
        code, _, _ = run(["bench", files["events"], "--delta-grid", "1,2,3", "--csv", str(target)], capsys)
        rows = list(csv.reader(target.open()))
        assert code == 0 and rows[0] == BENCH_HEADER and len(rows) == 4
        assert [r[1] for r in rows[1:]] == ["1", "2", "3"]

    def test_duration_has_no_delta(self, files, capsys):
        code, out, _ = run(["bench", files["abcd"]], capsys)
        (row,) = list(csv.DictReader(io.StringIO(out)))
        assert code == 0 and row["delta"] == "n/a" and row["clique_count"] == "7"
        assert int(row["total_ms"]) >= int(row["enum_ms"])

    def test_instant_requires_grid(self, files, capsys):
        assert run(["bench", files["events"]], capsys)[0] == 1

    def test_parallel(self, files, capsys):
        code, out, _ = run(["bench", files["events"], files["abcd"], "--delta-grid", "2,4", "--jobs", "2"], capsys)
        assert code == 0 and len(out.splitlines()) == 1 + 2 + 1


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["cliques"])
    assert exc.value.code == 1


def test_module_entry_point(files):
    out = subprocess.run(
        [sys.executable, "-m", "linkcliques", "cliques", files["abcd"]],
        capture_output=True, text=True,
    )
    assert out.returncode == 0 and len(out.stdout.splitlines()) == 7
