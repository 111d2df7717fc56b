import numpy as np
import pytest
from hypothesis import given, settings

from pcwlab.errors import ParseError
from pcwlab.io import (
    detect_format,
    matrix_digest,
    parse_alist,
    parse_matrix,
    parse_plain,
    read_matrix,
    write_alist,
    write_plain,
)
from tests.helpers import DUMBBELL
from tests.strategies import binary_matrices

DATA = __import__("pathlib").Path(__file__).resolve().parents[1] / "data"


def test_shipped_files_hold_the_dumbbell():
    assert np.array_equal(read_matrix(DATA / "dumbbell.alist"), DUMBBELL)
    assert np.array_equal(read_matrix(DATA / "dumbbell.txt"), DUMBBELL)


def test_alist_zero_padding_is_ignored():
    text = "3 2\n2 3\n2 1 1\n3 1\n1 2\n1 0\n1 0\n1 2 3\n1 0 0\n"
    assert parse_alist(text).tolist() == [[1, 1, 1], [1, 0, 0]]


def test_format_detection():
    assert detect_format(write_plain(DUMBBELL)) == "plain"
    assert detect_format(write_alist(DUMBBELL)) == "alist"


def test_digest_ignores_format():
    a = matrix_digest(parse_matrix(write_alist(DUMBBELL)))
    b = matrix_digest(parse_matrix(write_plain(DUMBBELL)))
    assert a == b and a.startswith("sha256:")


@pytest.mark.parametrize(
    "text, line",
    [
        ("2 3\n1 0 1\n1 1\n", 3),
        ("2 3\n1 0 1\n1 x 0\n", 3),
        ("2 2\n1 0\n", 3),
        ("1 2\n1 2\n", 2),
    ],
)
def test_plain_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_plain(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


VALID_ALIST = "2 1\n1 2\n1 1\n2\n1\n1\n1 2\n"


def test_small_alist_parses():
    assert parse_alist(VALID_ALIST).tolist() == [[1, 1]]


@pytest.mark.parametrize(
    "text, line",
    [
        ("2 1\n1 2\n1 1\n2\n3\n1\n1 2\n", 5),  # row index out of range
        ("2 1\n1 2\n1 1\n2\n1\n1\n1\n", 7),  # row lists fewer columns than declared
        ("2 1\n1 2\n1\n2\n1\n1\n1 2\n", 3),  # too few column degrees
        ("2 1\n1 2\n1 1\n2\n1\n1\n", 6),  # missing row line
        ("2 1\n1 2\n1 1\n2\n1\n1\n1 q\n", 7),  # not an integer
    ],
)
def test_alist_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_alist(text)
    assert info.value.line == line


@given(binary_matrices())
@settings(max_examples=60, deadline=None)
def test_round_trip_both_formats(H):
    assert np.array_equal(parse_matrix(write_plain(H)), H)
    assert np.array_equal(parse_alist(write_alist(H)), H)
    assert np.array_equal(parse_matrix(write_alist(H), "alist"), H)
