import io
import subprocess
import sys

import pytest

from blackpeg.bench import CSV_HEADER, bench_one, run_bench, to_csv
from blackpeg.cli import main
from blackpeg.formats import read_instance


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def summary(out):
    return dict(kv.split("=") for kv in out.strip().splitlines()[-1].split())


def test_solve_hand_trace(capsys):
    code, out, _ = run(["solve", "--n", "4", "--k", "2", "--secret", "1,0,1,0"], capsys)
    assert code == 0
    assert out.splitlines()[-1] == "recovered=1,0,1,0 queries=5 bound=12"
    assert out.splitlines()[0] == "4 2"
    assert len(out.splitlines()) == 1 + 5 + 1


def test_solve_single(capsys):
    code, out, _ = run(["solve", "--n", "1", "--k", "1", "--secret", "0"], capsys)
    assert code == 0 and summary(out)["queries"] == "1"


def test_solve_naive_seeded(capsys):
    code, out, _ = run(["solve", "--n", "4", "--k", "6", "--seed", "7",
                        "--algorithm", "naive"], capsys)
    assert code == 0 and summary(out)["queries"] == "21"


@pytest.mark.parametrize("argv", [
    ["solve", "--n", "4", "--k", "2"],
    ["solve", "--n", "4", "--k", "2", "--secret", "1,0"],
    ["solve", "--n", "2", "--k", "2", "--secret", "1,2"],
    ["solve", "--n", "x", "--k", "2", "--seed", "1"],
    ["solve", "--n", "2", "--k", "2", "--seed", "1", "--algorithm", "fancy"],
    ["bench", "--n-list", "4,a", "--k-list", "2"],
    ["bench", "--n-list", "0", "--k-list", "2"],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_solve_transcript_file_is_instance(tmp_path, capsys):
    path = tmp_path / "t.txt"
    run(["solve", "--n", "3", "--k", "3", "--secret", "2,0,2", "--transcript", str(path)],
        capsys)
    code, out, _ = run(["sat", "--instance", str(path), "--method", "exhaustive"], capsys)
    assert code == 0 and out == "SAT 2,0,2\n"


def test_play_replay_matches_solve(capsys, monkeypatch):
    argv = ["--n", "5", "--k", "3"]
    _, solved, _ = run(["solve", *argv, "--secret", "2,0,1,1,2"], capsys)
    replies = "".join(line.split()[-1] + "\n" for line in solved.splitlines()[1:-1])
    code, played, err = run(["play", *argv], capsys, stdin=replies, monkeypatch=monkeypatch)
    assert code == 0
    assert played == solved
    assert "black pegs?" in err


def test_play_reprompts_on_bad_input(capsys, monkeypatch):
    code, out, err = run(["play", "--n", "2", "--k", "2"], capsys,
                         stdin="zz\n5\n1\n1\n2\n", monkeypatch=monkeypatch)
    assert code == 0
    assert out.splitlines()[-1].startswith("recovered=1,0 ")
    assert "not an integer" in err and "must lie in" in err


def test_play_inconsistent_census(capsys, monkeypatch):
    code, out, _ = run(["play", "--n", "3", "--k", "2"], capsys,
                       stdin="1\n1\n", monkeypatch=monkeypatch)
    assert code == 3
    assert "inconsistent: the scores admit no secret" in out
    assert len(out.splitlines()) == 1 + 2 + 1


def test_play_eof(capsys, monkeypatch):
    code, _, err = run(["play", "--n", "3", "--k", "2"], capsys, stdin="1\n",
                       monkeypatch=monkeypatch)
    assert code == 2 and "input closed" in err


def test_sat_outcomes(tmp_file, capsys):
    unsat = tmp_file("u.txt", "2 2\n0 0 2\n1 1 1\n")
    empty = tmp_file("e.txt", "3 4\n")
    assert run(["sat", "--instance", str(unsat)], capsys)[:2] == (1, "UNSAT\n")
    assert run(["sat", "--instance", str(unsat), "--method", "exhaustive"],
               capsys)[:2] == (1, "UNSAT\n")
    assert run(["sat", "--instance", str(empty)], capsys)[:2] == (0, "SAT 0,0,0\n")
    hard = tmp_file("h.txt", "20 2\n" + "0 " * 20 + "10\n" + "1 " * 20 + "11\n")
    assert run(["sat", "--instance", str(hard), "--budget", "10"],
               capsys)[:2] == (4, "UNKNOWN (budget)\n")


def test_sat_parse_error(tmp_file, capsys):
    bad = tmp_file("b.txt", "2 2\n0 q 1\n")
    code, _, err = run(["sat", "--instance", str(bad)], capsys)
    assert code == 2 and f"{bad}:2:3:" in err
    code, _, err = run(["sat", "--instance", str(bad) + ".missing"], capsys)
    assert code == 2


def test_reduce_and_check(tmp_file, tmp_path, capsys):
    out = tmp_path / "inst.txt"
    one = tmp_file("one.tdm", "1 1\n1 1 1\n")
    code, text, _ = run(["reduce", "--tdm", str(one), "--out", str(out), "--check"], capsys)
    assert code == 0 and text == "EQUIV OK (sat=true)\n"
    assert len(read_instance(out).constraints) == 6
    code, text, _ = run(["sat", "--instance", str(out)], capsys)
    assert code == 0 and text.startswith("SAT")

    uncover = tmp_file("u.tdm", "2 2\n1 1 1\n1 2 2\n")
    code, text, _ = run(["reduce", "--tdm", str(uncover), "--out", str(out), "--check"],
                        capsys)
    assert code == 0 and text == "EQUIV OK (sat=false)\n"

    short = tmp_file("s.tdm", "2 1\n1 1 1\n")
    code, _, err = run(["reduce", "--tdm", str(short), "--out", str(out)], capsys)
    assert code == 2 and "m=1 < n=2" in err


def test_reduce_without_check_writes_only(tmp_file, tmp_path, capsys):
    out = tmp_path / "inst.txt"
    code, text, _ = run(["reduce", "--tdm", str(tmp_file("t.tdm", "1 1\n1 1 1\n")),
                         "--out", str(out)], capsys)
    assert code == 0 and text == "" and out.exists()


def test_bench_rows(capsys):
    code, out, _ = run(["bench", "--n-list", "4,1", "--k-list", "6,1", "--trials", "20",
                        "--seed", "3", "--exhaustive"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    rows = [dict(zip(CSV_HEADER, l.split(","))) for l in lines[1:]]
    assert [(r["N"], r["K"]) for r in rows] == [("4", "6"), ("4", "1"), ("1", "6"), ("1", "1")]
    assert rows[0]["trials"] == "1296" and int(rows[0]["max_queries"]) <= 26
    assert rows[3]["max_queries"] == "1" and rows[3]["our_bound"] == "2"


def test_bench_deterministic_and_plot(tmp_path, capsys):
    argv = ["bench", "--n-list", "16,7", "--k-list", "5", "--trials", "50", "--seed", "11"]
    a = run(argv, capsys)[1]
    b = run(argv, capsys)[1]
    assert a == b
    assert run(argv[:-1] + ["12"], capsys)[1] != a
    png = tmp_path / "bench.png"
    code, out, _ = run(argv + ["--plot", str(png)], capsys)
    assert code == 0 and out == a
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_bench_library_matches_cli(capsys):
    recs = run_bench([6], [3], trials=30, seed=2)
    _, out, _ = run(["bench", "--n-list", "6", "--k-list", "3", "--trials", "30",
                     "--seed", "2"], capsys)
    assert to_csv(recs) == out
    assert recs[0] == bench_one(6, 3, 30, 2)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "blackpeg", "solve", "--n", "2", "--k", "2",
                           "--secret", "1,1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "recovered=1,1 queries=2 bound=7"
