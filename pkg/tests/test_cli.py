import csv
import json

import pytest

from isoclique.cli import (
    DEFAULT_C_GRID,
    DEFAULT_DELTA_GRID,
    EXIT_INPUT,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_TIMEOUT,
    EXIT_USAGE,
    RunReport,
    main,
)

CONTACTS = """\
# triangle alice/bob/carol in both layers, one stray contact in the first
0 alice bob
0 alice carol
0 bob carol
0 alice dave
20 alice bob
20 alice carol
20 bob carol
"""


@pytest.fixture
def dataset(tmp_path):
    path = tmp_path / "contacts.txt"
    path.write_text(CONTACTS)
    return str(path)


def run(*argv):
    return main(list(argv))


def test_enumerate_text_output(dataset, capsys):
    code = run("enumerate", "--input", dataset, "--resolution", "20",
               "--type", "alltime-max", "--c", "1.5")
    assert code == EXIT_OK
    assert capsys.readouterr().out == "[1,2] {alice, bob, carol}\n"


def test_enumerate_json_output(dataset, tmp_path):
    out = tmp_path / "out.json"
    code = run("enumerate", "--input", dataset, "--resolution", "20",
               "--type", "usually-avg", "--c", "1.5", "--format", "json",
               "--out", str(out))
    assert code == EXIT_OK
    payload = json.loads(out.read_text())
    assert {"vertices": ["alice", "bob", "carol"], "start": 1, "end": 2} in payload
    assert {"vertices": ["alice", "dave"], "start": 1, "end": 1} in payload


def test_enumerate_csv_output(dataset, capsys):
    code = run("enumerate", "--input", dataset, "--resolution", "20",
               "--type", "alltime-max", "--c", "1.5", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.reader(capsys.readouterr().out.splitlines()))
    assert rows[0] == ["start", "end", "vertices"]
    assert rows[1] == ["1", "2", "alice bob carol"]


def test_default_c_is_epsilon(dataset, capsys):
    code = run("enumerate", "--input", dataset, "--resolution", "20",
               "--type", "alltime-max")
    assert code == EXIT_OK
    # only the stray-free second layer survives at c = 0.001
    assert capsys.readouterr().out == "[2,2] {alice, bob, carol}\n"


def test_oracle_agrees(dataset, capsys):
    for cmd in (("oracle",), ("enumerate", "--oracle")):
        code = run(*cmd, "--input", dataset, "--resolution", "20",
                   "--type", "alltime-max", "--c", "1.5")
        assert code == EXIT_OK
        assert capsys.readouterr().out == "[1,2] {alice, bob, carol}\n"


def test_usually_max_needs_oracle(dataset, capsys):
    code = run("enumerate", "--input", dataset, "--resolution", "20",
               "--type", "usually-max", "--c", "1")
    assert code == EXIT_USAGE
    assert "--oracle" in capsys.readouterr().err
    code = run("enumerate", "--oracle", "--input", dataset,
               "--resolution", "20", "--type", "usually-max", "--c", "1.5")
    assert code == EXIT_OK


def test_compare_ok(dataset, capsys):
    code = run("compare", "--input", dataset, "--resolution", "20",
               "--type", "avg-alltime", "--c", "1.5")
    assert code == EXIT_OK
    assert capsys.readouterr().out.startswith("ok:")


def test_compare_exit_codes_are_distinct():
    assert len({EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_MISMATCH,
                EXIT_TIMEOUT}) == 5


def test_usage_errors(dataset, capsys):
    assert run("enumerate", "--input", dataset) == EXIT_USAGE
    assert run("enumerate", "--input", dataset, "--resolution", "20",
               "--type", "sometimes-avg") == EXIT_USAGE
    capsys.readouterr()


def test_input_errors(tmp_path, capsys):
    missing = str(tmp_path / "nope.txt")
    assert run("enumerate", "--input", missing, "--resolution", "20",
               "--type", "alltime-max") == EXIT_INPUT
    bad = tmp_path / "bad.txt"
    bad.write_text("0 a a\n")
    assert run("enumerate", "--input", str(bad), "--resolution", "20",
               "--type", "alltime-max") == EXIT_INPUT
    assert "self-contact" in capsys.readouterr().err


def test_report_row(dataset, tmp_path):
    report = tmp_path / "report.csv"
    run("enumerate", "--input", dataset, "--resolution", "20",
        "--type", "alltime-max", "--c", "1.5", "--report", str(report))
    rows = list(csv.reader(report.open()))
    assert rows[0] == RunReport.header()
    assert rows[1][0] == "contacts.txt"
    assert rows[1][1:6] == ["alltime-max", "1.5", "0", "0", "1"]
    assert rows[1][8] == "ok"


def test_timeout_exit_code(dataset, tmp_path, capsys):
    report = tmp_path / "report.csv"
    code = run("enumerate", "--input", dataset, "--resolution", "20",
               "--type", "usually-avg", "--c", "5", "--time-limit", "0",
               "--report", str(report))
    assert code == EXIT_TIMEOUT
    rows = list(csv.reader(report.open()))
    assert rows[1][8] == "timeout" and rows[1][5] == ""
    capsys.readouterr()


def test_bench_grid(dataset, tmp_path):
    out = tmp_path / "bench.csv"
    code = run("bench", "--input", dataset, "--resolution", "20",
               "--types", "alltime-max", "usually-avg",
               "--c-grid", "0.001", "1.5",
               "--delta-grid", "0",
               "--out", str(out))
    assert code == EXIT_OK
    rows = list(csv.reader(out.open()))
    assert rows[0] == RunReport.header()
    assert len(rows) == 1 + 2 * 2 * 1
    assert all(row[8] == "ok" for row in rows[1:])


def test_default_grids():
    assert DEFAULT_C_GRID == ("0.001", "1", "5", "25", "125")
    assert DEFAULT_DELTA_GRID == (0, 125, 3125)


def test_delta_scaling_applies(tmp_path, capsys):
    # 8 contacts over 140s at 20s resolution; delta 125 scales to
    # floor(125 * 140 / (5 * 8 * 20)) = 21 layers > tau, rejected
    path = tmp_path / "short.txt"
    path.write_text(CONTACTS + "140 alice bob\n")
    code = run("enumerate", "--input", str(path), "--resolution", "20",
               "--type", "alltime-max", "--delta", "125")
    assert code == EXIT_INPUT
    assert "exceeds lifetime" in capsys.readouterr().err
