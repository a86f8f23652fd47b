import io

import numpy as np
import pytest

from linemark.cli import main
from linemark.constructions import construct_a0, construct_ant
from linemark.grid import Marking
from linemark.markfile import MarkingFileError, parse_marking, read_marking, render_marking


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_render_format():
    m = Marking(2, 2, np.array([[0, 1], [1, 1]]), 0, 1)
    assert render_marking(m) == b"LINEMARK 1\nk=2 n=2 a=0 b=1\n0 1\n1 1\n"


def test_render_wide_colors():
    m = Marking(12, 1, np.array([[11]]), 0, 1)
    data = render_marking(m)
    assert data.endswith(b"\n11\n")
    assert parse_marking(data) == m


@pytest.mark.parametrize("m", [construct_ant(3, 5, 1, 1), construct_a0(12, 2, 2)])
def test_round_trip(m):
    back = parse_marking(render_marking(m))
    assert back == m and (back.a, back.b) == (m.a, m.b)
    assert render_marking(back) == render_marking(m)


@pytest.mark.parametrize(
    "data,line,col",
    [
        (b"LINEMARK 2\nk=2 n=1 a=0 b=1\n0 1\n", 1, 1),
        (b"LINEMARK 1\nk=2 n=1 a=0\n0\n", 2, 1),
        (b"LINEMARK 1\nk=2 n=2 a=0 b=1\n0 1\n1 2\n", 4, 3),
        (b"LINEMARK 1\nk=2 n=2 a=0 b=1\n0 1\n1  1\n", 4, 3),
        (b"LINEMARK 1\nk=2 n=2 a=0 b=1\n0 1\n1 x\n", 4, 3),
        (b"LINEMARK 1\nk=2 n=2 a=0 b=1\n0 1\n1\n", 4, 2),
        (b"LINEMARK 1\nk=2 n=2 a=0 b=1\n0 1\n", 4, 1),
        (b"LINEMARK 1\nk=2 n=2 a=0 b=1\n0 1\n1 1", 4, 1),
        (b"LINEMARK 1\r\nk=2 n=2 a=0 b=1\n0 1\n1 1\n", 1, 11),
        ("LINEMARK 1\nk=2 n=2 a=0 b=1\n0 1\n1 é\n".encode(), 4, 1),
    ],
)
def test_parse_errors_located(data, line, col):
    with pytest.raises(MarkingFileError) as info:
        parse_marking(data)
    assert (info.value.line, info.value.column) == (line, col)


def test_construct_then_verify(tmp_path):
    path = tmp_path / "m.lmk"
    code, text = run("construct", "-k", "3", "-n", "5", "-a", "1", "-b", "4", "-o", str(path))
    assert code == 0 and "ok=true" in text
    code, text = run("verify", "-i", str(path))
    assert code == 0
    assert "count_a=189" in text and "count_b=54" in text


def test_construct_is_byte_identical(tmp_path):
    p1, p2 = tmp_path / "1.lmk", tmp_path / "2.lmk"
    for p in (p1, p2):
        assert run("construct", "-k", "4", "-n", "6", "-a", "1", "-b", "5", "-o", str(p))[0] == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_mutated_file_fails(tmp_path):
    path = tmp_path / "m.lmk"
    run("construct", "-k", "3", "-n", "5", "-a", "1", "-b", "4", "-o", str(path))
    raw = bytearray(path.read_bytes())
    pos = raw.index(b"\n", raw.index(b"\n") + 1) + 1  # first mark digit
    raw[pos] = ord("0") + (raw[pos] - ord("0") + 1) % 3
    path.write_bytes(bytes(raw))
    code, text = run("verify", "-i", str(path))
    assert code == 1
    assert "ok=false" in text
    assert int(text.split("violations=")[1].split()[0]) >= 1


def test_verify_overrides(tmp_path):
    path = tmp_path / "m.lmk"
    run("construct", "-k", "3", "-n", "5", "-a", "1", "-b", "4", "-o", str(path))
    assert run("verify", "-i", str(path), "-a", "0", "-b", "4")[0] == 1


def test_construct_exit_codes():
    assert run("construct", "-k", "3", "-n", "4", "-a", "1", "-b", "3")[0] == 2
    assert run("construct", "-k", "6", "-n", "7", "-a", "1", "-b", "7")[0] == 3
    code, text = run("construct", "-k", "4", "-n", "6", "-a", "1", "-b", "5", "--parity-group", "cyclic")
    assert code == 4 and "experimental failure" in text
    assert run("construct", "-k", "3", "-n", "5", "-a", "1", "-b", "4", "--cell-cap", "100")[0] == 5


def test_io_errors(tmp_path):
    bad = tmp_path / "bad.lmk"
    bad.write_bytes(b"LINEMARK 1\nk=2 n=2 a=0 b=1\n0 1\n1 7\n")
    code, text = run("verify", "-i", str(bad))
    assert code == 5 and "line 4, column 3" in text
    assert run("verify", "-i", str(tmp_path / "missing.lmk"))[0] == 5


def test_feasible():
    assert run("feasible", "-k", "3", "-n", "5", "-a", "1", "-b", "4") == (0, "feasible=true s=189 t=54\n")
    assert run("feasible", "-k", "3", "-n", "4", "-a", "1", "-b", "3") == (2, "feasible=false\n")


def test_table():
    code, text = run("table", "-k", "3", "-n", "2")
    assert code == 0
    assert text.splitlines() == [
        "a=0 b=1 feasible=true s=3 t=6 route=0b",
        "a=0 b=2 feasible=true s=6 t=3 route=0b",
        "a=1 b=2 feasible=false",
    ]
    code, text = run("table", "-k", "3", "-n", "2", "--format", "tsv")
    assert text.splitlines()[0] == "a\tb\tfeasible\ts\tt\troute"
    assert text.splitlines()[3] == "1\t2\tfalse\t\t\tinfeasible"


def test_search(tmp_path):
    path = tmp_path / "s.lmk"
    code, text = run("search", "-k", "2", "-n", "2", "-a", "0", "-b", "1", "-o", str(path))
    assert code == 0 and text.startswith("result=found")
    assert run("verify", "-i", str(path))[0] == 0
    assert run("search", "-k", "3", "-n", "2", "-a", "1", "-b", "2")[0] == 2
    code, text = run("search", "-k", "3", "-n", "3", "-a", "0", "-b", "2", "--max-nodes", "1000")
    assert code == 1 and text.startswith("result=exhausted")


def test_hat(tmp_path):
    path = tmp_path / "m.lmk"
    run("construct", "-k", "3", "-n", "3", "-a", "1", "-b", "1", "-o", str(path))
    m = read_marking(path)
    code, text = run("hat", "-i", str(path), "--assignment", "0,1,2")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 4 and lines[-1] == "correct=1"
    assert lines[0] == f"player=0 hat=0 guess={int(m.marks[0, 1 + 2 * 3])} correct=" + (
        "true" if m.marks[0, 7] == 0 else "false"
    )
    assert run("hat", "-i", str(path), "--assignment", "0,1")[0] == 5
    assert run("hat", "-i", str(path), "--assignment", "0,a,1")[0] == 5
