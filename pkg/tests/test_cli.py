import json
import subprocess
import sys

import pytest

from beatpath.ballots import aggregate, parse_ballots
from beatpath.cli import main
from beatpath.core import CandidateSet
from beatpath.formats import FormatError, read_matrix, read_order, write_matrix
from beatpath.oracle import floyd_warshall_beatpaths, schulze_order

from conftest import EXAMPLE_1_BALLOTS, TABLE_1, TABLE_2, example_1, example_2


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    paths = {
        "ex1": tmp_path / "ex1.csv",
        "ex2": tmp_path / "ex2.csv",
        "ballots": tmp_path / "ex1.txt",
        "empty": tmp_path / "empty.txt",
    }
    paths["ex1"].write_text(write_matrix(example_1()))
    paths["ex2"].write_text(write_matrix(example_2()))
    paths["ballots"].write_text(EXAMPLE_1_BALLOTS)
    paths["empty"].write_text("# nobody voted\n")
    return paths


def beatpath_table(out):
    rows = [line.split(",") for line in out.strip().splitlines()]
    return [[None if c == "inf" else int(c) for c in row[1:]] for row in rows[1:]]


def test_matrix_format():
    text = write_matrix(example_2())
    assert text.splitlines()[0] == "candidates,A,B,C,D"
    assert text.splitlines()[1] == "A,0,-1,6,4"
    assert read_matrix(text) == example_2()


@pytest.mark.parametrize(
    "text, message",
    [
        ("A,B\nA,0,1\n", "header"),
        ("candidates,A,B\nA,0,1\n", "expected 2 rows"),
        ("candidates,A,B\nA,0,1\nB,1,0\n", "antisymmetric"),
        ("candidates,A,B\nA,1,1\nB,-1,-1\n", "diagonal"),
        ("candidates,A,B\nA,0,x\nB,0,0\n", "non-integer"),
        ("candidates,A,B\nB,0,1\nA,-1,0\n", "labelled"),
        ("candidates,A,A\nA,0,0\nA,0,0\n", "duplicate"),
    ],
)
def test_matrix_format_errors(text, message):
    with pytest.raises(FormatError, match=message):
        read_matrix(text)


def test_tally_example_1(capsys, files):
    code, out, _ = run(capsys, "tally", files["ballots"])
    assert code == 0
    assert out.splitlines()[1] == "A,0,2,0"
    assert read_matrix(out) == example_1()


def test_tally_empty_with_candidates(capsys, files):
    code, out, _ = run(capsys, "tally", files["empty"], "--candidates", "A,B")
    assert code == 0 and out == "candidates,A,B\nA,0,0\nB,0,0\n"


def test_tally_empty_without_candidates(capsys, files):
    code, _, err = run(capsys, "tally", files["empty"])
    assert code == 2 and "candidates" in err


def test_tally_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("A >> B\n")
    code, out, err = run(capsys, "tally", bad)
    assert code == 2 and out == "" and "line 1" in err


def test_tally_unknown_candidate(capsys, files):
    code, _, err = run(capsys, "tally", files["ballots"], "--candidates", "A,B")
    assert code == 2 and "'C'" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "tally", tmp_path / "nope.txt")
    assert code == 2 and "cannot read" in err


def test_winner_example_2(capsys, files):
    code, out, _ = run(capsys, "--seed", 1, "winner", files["ex2"])
    assert code == 0
    assert "winner: A" in out.splitlines() and "unique: true" in out.splitlines()
    assert "seed: 1" in out


def test_winner_example_1_all_maximal(capsys, files):
    code, out, _ = run(capsys, "winner", files["ex1"], "--all-maximal")
    assert code == 0
    line = next(l for l in out.splitlines() if l.startswith("maximal:"))
    assert set(line.split()[1:]) == {"A", "C"}
    assert "unique: false" in out


def test_winner_perturb(capsys, files):
    code, out, _ = run(capsys, "winner", files["ex1"], "--perturb", "--seed", 7, "--json")
    rec = json.loads(out)
    assert code == 0 and rec["unique"] is True and rec["winner"] in {"A", "C"}


def test_winner_from_ballots(capsys, files):
    code, out, _ = run(capsys, "winner", files["ballots"], "--json")
    rec = json.loads(out)
    assert rec["winner"] in {"A", "C"} and rec["unique"] is False


def test_winner_json_fields(capsys, files):
    _, out, _ = run(capsys, "--json", "winner", files["ex2"])
    assert set(json.loads(out)) == {"winner", "unique", "iterations", "seed"}
    _, out, _ = run(capsys, "winner", files["ex1"], "--all-maximal", "--json")
    rec = json.loads(out)
    assert set(rec) == {"winner", "unique", "iterations", "seed", "maximal"}
    assert set(rec["maximal"]) == {"A", "C"}


def test_winner_same_seed_same_output(capsys, files):
    outs = {run(capsys, "winner", files["ex1"], "--seed", 12345)[1] for _ in range(3)}
    assert len(outs) == 1


def test_winner_rejects_bad_matrix(capsys, tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("candidates,A,B\nA,0,1\nB,1,0\n")
    assert run(capsys, "winner", bad)[0] == 2
    bad.write_text("candidates,A,B\nA,3,1\nB,-1,0\n")
    assert run(capsys, "winner", bad)[0] == 2


def test_winner_perturb_overflow(capsys, tmp_path):
    big = tmp_path / "big.csv"
    big.write_text(f"candidates,A,B\nA,0,{2**61}\nB,{-(2**61)},0\n")
    code, _, err = run(capsys, "winner", big, "--perturb")
    assert code == 3 and "64 bits" in err


def test_beatpaths_tables(capsys, files):
    _, out, _ = run(capsys, "beatpaths", files["ex1"])
    assert beatpath_table(out) == TABLE_1
    _, out, _ = run(capsys, "beatpaths", files["ex2"])
    assert beatpath_table(out) == TABLE_2


def test_beatpaths_single(capsys, tmp_path):
    one = tmp_path / "one.csv"
    one.write_text("candidates,A\nA,0\n")
    code, out, _ = run(capsys, "beatpaths", one)
    assert code == 0 and out == "candidates,A\nA,inf\n"


def test_gen_mcgarvey_round_trip(capsys, files, tmp_path):
    code, out, _ = run(capsys, "gen", "mcgarvey", files["ex1"], "--seed", 4)
    assert code == 0
    ballots = tmp_path / "mc.txt"
    ballots.write_text(out)
    _, tallied, _ = run(capsys, "tally", ballots)
    assert read_matrix(tallied) == example_1()


def test_gen_mcgarvey_odd(capsys, tmp_path):
    odd = tmp_path / "odd.csv"
    odd.write_text("candidates,A,B,C\nA,0,3,1\nB,-3,0,0\nC,-1,0,0\n")
    code, _, err = run(capsys, "gen", "mcgarvey", odd)
    assert code == 2 and "even" in err
    code, out, err = run(capsys, "gen", "mcgarvey", odd, "--auto-double")
    assert code == 0 and "scaled by 2" in err and out.startswith("# margins scaled by 2")
    w = aggregate(parse_ballots(out, CandidateSet("ABC")))
    assert w.weight(0, 1) == 6 and w.weight(0, 2) == 2


def test_gen_realize_chain(capsys, tmp_path):
    order = tmp_path / "chain.txt"
    order.write_text("d < c\nc < b\nb < a\n")
    code, out, _ = run(capsys, "gen", "realize", order, "--top", "a", "--bottom", "d")
    assert code == 0
    g = read_matrix(out)
    rel = schulze_order(floyd_warshall_beatpaths(g))
    names = g.candidates.names
    assert {(names[x], names[y]) for x, y in rel.relation} == {
        ("d", "c"), ("d", "b"), ("d", "a"), ("c", "b"), ("c", "a"), ("b", "a")
    }
    file_path = tmp_path / "g.csv"
    file_path.write_text(out)
    _, bp, _ = run(capsys, "beatpaths", file_path)
    assert beatpath_table(bp) == [
        [None if x == y else int(floyd_warshall_beatpaths(g)[x, y].value) for y in range(4)] for x in range(4)
    ]


def test_gen_realize_needs_extremes(capsys, tmp_path):
    order = tmp_path / "v.txt"
    order.write_text("b < x\nb < y\n")
    code, _, err = run(capsys, "gen", "realize", order, "--top", "x", "--bottom", "b")
    assert code == 2 and "maximal" in err


def test_read_order_closes_and_rejects_cycles():
    spec = read_order("a < b\nb < c\n# note\n", extra=("z",))
    assert spec.candidates.names == ("a", "b", "c", "z")
    assert spec.less(0, 2)
    with pytest.raises(FormatError):
        read_order("a < b\nb < a\n")
    with pytest.raises(FormatError, match="line 1"):
        read_order("a > b\n")


def test_gen_random(capsys):
    code, out, _ = run(capsys, "gen", "random", "--m", 3, "--max-weight", 0)
    assert code == 0 and not read_matrix(out).w.any()
    _, a, _ = run(capsys, "gen", "random", "--m", 6, "--seed", 3)
    _, b, _ = run(capsys, "--seed", 3, "gen", "random", "--m", 6)
    assert a == b and read_matrix(a).m == 6


def test_bench_two_candidates(capsys):
    code, out, _ = run(capsys, "bench", "--m", 2, "--trials", 1, "--instance", "linear")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "kind,m,trial,seconds,iterations"
    assert lines[1].startswith("trial,2,0,") and lines[1].endswith(",1")


def test_bench_counts_are_deterministic(capsys):
    def counts():
        _, out, _ = run(capsys, "bench", "--m", "8,16", "--trials", 4, "--seed", 9, "--json")
        rec = json.loads(out)
        return [(t["m"], t["trial"], t["iterations"], t["winner"]) for t in rec["trials"]]

    assert counts() == counts()


def test_bench_oracle(capsys):
    code, out, _ = run(capsys, "bench", "--m", "4", "--trials", 2, "--algo", "oracle")
    assert code == 0 and out.splitlines()[1].endswith(",")


def test_bench_flag_validation(capsys):
    assert run(capsys, "bench", "--m", "1")[0] == 2
    assert run(capsys, "bench", "--m", "x")[0] == 2


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "beatpath", "winner", str(files["ex2"])],
        capture_output=True, text=True, check=True,
    )
    assert "winner: A" in proc.stdout
