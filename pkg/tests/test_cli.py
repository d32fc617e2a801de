import json

import pytest

from porder.cli import main
from porder.formats import format_ordering, format_roots, format_set, parse_reproot_file, parse_set_file
from porder import PAdicContext, fast_p_ordering, minimal_representation
from porder.errors import DuplicateError, OutOfRangeError, ParseError


def run_cli(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_set_file_round_trip(z16):
    text = format_set(z16, [3, 0, 15])
    assert text == "p 2 k 4\n3\n0\n15\n"
    assert parse_set_file(text) == (z16, [3, 0, 15])


def test_set_file_comments_and_blanks():
    ctx, S = parse_set_file("# a set\np 3 k 2\n\n4\n# four\n8\n")
    assert (ctx.p, ctx.k, S) == (3, 2, [4, 8])


@pytest.mark.parametrize(
    "text, err",
    [
        ("p 2 k 3\n8\n", OutOfRangeError),
        ("p 2 k 3\n1\n1\n", DuplicateError),
        ("p 2 k 3\n-1\n", ParseError),
        ("2 3\n1\n", ParseError),
        ("p 2 k 3\n1+3^1*\n", ParseError),
    ],
)
def test_malformed_files(text, err):
    with pytest.raises(err):
        if "*" in text:
            parse_reproot_file(text)
        else:
            parse_set_file(text)


def test_reproot_file_normalizes():
    ctx, roots = parse_reproot_file("p 2 k 3\n1+2^1*\n3+2^2*\n")
    assert [str(r) for r in roots] == ["1+2^1*"]
    _, raw = parse_reproot_file("p 2 k 3\n0+2^1*\n1+2^1*\n", normalize=False)
    assert [str(r) for r in raw] == ["0+2^1*", "1+2^1*"]


def test_roots_round_trip(z8):
    rep = minimal_representation([0, 1, 2, 6, 7], z8)
    assert parse_reproot_file(format_roots(z8, rep))[1] == list(rep.roots)


def test_ordering_text_and_json(z8):
    o = fast_p_ordering([0, 1, 2, 3], z8)
    assert format_ordering(o) == "0 0 0\n1 1 0\n2 2 1\n3 3 1\n"
    assert format_ordering(o, wp=True).splitlines()[2] == "2 2 1 2"
    rec = json.loads(format_ordering(o, "json", wp=True).splitlines()[3])
    assert rec == {"index": 3, "value": "3", "pseq": 1, "wp": "2"}
    assert format_ordering(o, wp=True, cap_bits=0).splitlines()[3].endswith(" -")


def test_order_command(capsys):
    status, out, _ = run_cli(capsys, "order", "--p", "2", "--k", "4", "--inline", "0,1,2,3,4,5,6,7,8,9")
    assert status == 0
    assert [int(l.split()[2]) for l in out.splitlines()] == [0, 0, 1, 1, 3, 3, 4, 4, 7, 7]


def test_order_engines_agree_and_truncate(capsys, tmp_path):
    f = tmp_path / "s.txt"
    f.write_text("p 3 k 3\n0\n5\n9\n13\n26\n")
    _, fast, _ = run_cli(capsys, "order", "--input", str(f))
    _, naive, _ = run_cli(capsys, "order", "--input", str(f), "--engine", "naive", "--tie", "max")
    col = lambda s: [l.split()[2] for l in s.splitlines()]
    assert col(fast) == col(naive)
    _, short, _ = run_cli(capsys, "order", "--input", str(f), "--length", "2")
    assert len(short.splitlines()) == 2


def test_order_rep_matches_order(capsys):
    _, rep, _ = run_cli(capsys, "order-rep", "--p", "2", "--k", "3", "--inline", "0+2^1*,1+2^1*")
    _, full, _ = run_cli(capsys, "order", "--p", "2", "--k", "3", "--inline", "0,1,2,3,4,5,6,7")
    col = lambda s: [l.split()[2] for l in s.splitlines()]
    assert col(rep) == col(full) == ["0", "0", "1", "1", "3", "3", "4", "4"]


def test_minimize_command(capsys):
    _, out, _ = run_cli(capsys, "minimize", "--p", "2", "--k", "2", "--inline", "0,2")
    assert out == "p 2 k 2\n0+2^1*\n"
    _, out, _ = run_cli(capsys, "minimize", "--p", "2", "--k", "2", "--inline", "0,1,2", "--format", "json")
    assert [json.loads(l) for l in out.splitlines()][1:] == [{"beta": "0", "e": 1}, {"beta": "1", "e": 2}]


def test_rootsets_command(capsys):
    _, out, _ = run_cli(capsys, "rootsets", "--p", "3", "--k", "2", "--j", "0", "--oracle")
    lines = out.splitlines()
    assert lines[0] == "shape=FullSubtree j=0 params=() set={0,3,6}"
    assert lines[-4:] == ["count 5", "total 125", "oracle_count 5", "oracle_total 125"]


def test_domain_errors_exit_3(capsys):
    status, out, err = run_cli(capsys, "order", "--p", "4", "--k", "2", "--inline", "1")
    assert status == 3 and out == ""
    assert err.startswith("error: NonPrime:")
    status, _, err = run_cli(capsys, "order", "--p", "2", "--k", "2", "--inline", "1,1")
    assert status == 3 and "Duplicate" in err
    status, _, err = run_cli(capsys, "order", "--p", "2", "--k", "2", "--inline", "1", "--length", "5")
    assert status == 3


def test_verify_command(capsys):
    status, out, _ = run_cli(capsys, "verify", "--trials", "5", "--seed", "3")
    assert status == 0
    assert all(l.startswith("PASS") for l in out.splitlines())


def test_bench_csv(capsys):
    status, out, _ = run_cli(capsys, "bench", "--sizes", "50,100", "--repeat", "1")
    rows = out.splitlines()
    assert status == 0 and rows[0] == "engine,n,p,k,millis"
    assert [r.split(",")[:2] for r in rows[1:]] == [["naive", "50"], ["fast", "50"], ["naive", "100"], ["fast", "100"]]
