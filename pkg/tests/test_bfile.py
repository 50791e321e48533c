from pathlib import Path

import pytest

from necklace_periods.bfile import BFileError, parse_bfile, read_bfile, sequence_id_from_name
from necklace_periods.errors import DomainError

DATA = Path(__file__).parent / "data"


def test_parse_skips_comments_and_blanks():
    b = parse_bfile("# header\n\n0 1\n1 2\n  2   1  \n")
    assert b.entries == [(0, 1), (1, 2), (2, 1)]


@pytest.mark.parametrize("text, lineno", [
    ("0 1\n1\n", 2),
    ("0 1\n1 x\n", 2),
    ("# c\n3 1\n2 5\n", 3),
    ("0 1\n0 1\n", 2),
    ("0 -4\n", 1),
    ("0 1 2\n", 1),
])
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(BFileError) as exc:
        parse_bfile(text, source="t.txt")
    assert exc.value.lineno == lineno
    assert f"line {lineno}" in str(exc.value)


def test_read_fixture():
    b = read_bfile(DATA / "b001037.txt")
    assert b.sequence_id == "A001037"
    assert b.entries[:7] == [(0, 1), (1, 2), (2, 1), (3, 2), (4, 3), (5, 6), (6, 9)]


def test_sequence_id_from_name():
    assert sequence_id_from_name("b000031.txt") == "A000031"
    assert sequence_id_from_name("/tmp/A001037.txt") == "A001037"
    assert sequence_id_from_name("values.txt") == "values"


def test_missing_file(tmp_path):
    with pytest.raises(DomainError):
        read_bfile(tmp_path / "nope.txt")
