"""
Reading and writing parity-check matrices.

Two text formats are understood. Plain text is a header line ``r n``
followed by ``r`` rows of ``n`` space-separated 0/1 entries. The alist
format is the usual LDPC interchange layout: ``n r``, the two maximum
degrees, the column degrees, the row degrees, then one line of 1-based row
indices per column and one line of 1-based column indices per row. Zero
entries pad short lines and are ignored.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

import numpy as np

from .errors import ParseError
from .gf2 import as_binary_matrix


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {line.strip()!r}", lineno) from None


def _content_lines(text: str) -> list[tuple[int, str]]:
    """Non-blank lines with their 1-based line numbers."""
    return [(k, line) for k, line in enumerate(text.splitlines(), 1) if line.strip()]


def parse_plain(text: str) -> np.ndarray:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input", 1)
    lineno, head = lines[0]
    dims = _ints(head, lineno)
    if len(dims) != 2 or min(dims) < 0:
        raise ParseError("header must be 'r n' with two nonnegative integers", lineno)
    r, n = dims
    body = lines[1:]
    if len(body) != r:
        where = body[r][0] if len(body) > r else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(f"expected {r} matrix rows, found {len(body)}", where)
    H = np.zeros((r, n), dtype=np.uint8)
    for j, (k, line) in enumerate(body):
        row = _ints(line, k)
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected {n}", k)
        if any(x not in (0, 1) for x in row):
            raise ParseError("entries must be 0 or 1", k)
        H[j] = row
    return H


def parse_alist(text: str) -> np.ndarray:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input", 1)

    cursor = 0

    def header(count, what):
        nonlocal cursor
        if count == 0:
            return []
        if cursor >= len(lines):
            raise ParseError(f"{what}: missing line", lines[-1][0] + 1)
        k, line = lines[cursor]
        cursor += 1
        vals = _ints(line, k)
        if len(vals) != count:
            raise ParseError(f"{what}: expected {count} values, got {len(vals)}", k)
        return vals

    n, r = header(2, "dimensions 'n r'")
    if n < 0 or r < 0:
        raise ParseError("dimensions must be nonnegative", lines[0][0])
    max_col, max_row = header(2, "maximum degrees")
    col_deg = header(n, "column degrees")
    row_deg = header(r, "row degrees")
    pos = cursor
    if len(lines) != pos + n + r:
        k = lines[min(len(lines), pos + n + r) - 1][0]
        raise ParseError(f"expected {n} column lines and {r} row lines after the header", k)

    H = np.zeros((r, n), dtype=np.uint8)
    for i in range(n):
        k, line = lines[pos + i]
        idx = [x for x in _ints(line, k) if x != 0]
        if len(idx) != col_deg[i] or col_deg[i] > max_col:
            raise ParseError(f"column {i + 1} lists {len(idx)} rows, declared degree {col_deg[i]}", k)
        for j in idx:
            if not 1 <= j <= r:
                raise ParseError(f"row index {j} out of range 1..{r}", k)
            if H[j - 1, i]:
                raise ParseError(f"row index {j} repeated", k)
            H[j - 1, i] = 1
    seen = np.zeros_like(H)
    for j in range(r):
        k, line = lines[pos + n + j]
        idx = [x for x in _ints(line, k) if x != 0]
        if len(idx) != row_deg[j] or row_deg[j] > max_row:
            raise ParseError(f"row {j + 1} lists {len(idx)} columns, declared degree {row_deg[j]}", k)
        for i in idx:
            if not 1 <= i <= n:
                raise ParseError(f"column index {i} out of range 1..{n}", k)
            seen[j, i - 1] = 1
        if not np.array_equal(seen[j], H[j]):
            raise ParseError(f"row {j + 1} disagrees with the column lists", k)
    return H


def detect_format(text: str) -> str:
    """'plain' when the second content line is a row of n zeros and ones, else 'alist'."""
    lines = _content_lines(text)
    if len(lines) >= 2:
        head = lines[0][1].split()
        second = lines[1][1].split()
        if len(head) == 2 and head[1].isdigit() and len(second) == int(head[1]) and set(second) <= {"0", "1"}:
            if len(second) != 2 or len(lines) == int(head[0]) + 1:
                return "plain"
    return "alist"


def parse_matrix(text: str, fmt: str = "auto") -> np.ndarray:
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "plain":
        return parse_plain(text)
    if fmt == "alist":
        return parse_alist(text)
    raise ValueError(f"unknown matrix format {fmt!r}")


def read_matrix(path, fmt: str = "auto") -> np.ndarray:
    return parse_matrix(Path(path).read_text(), fmt)


def write_plain(H) -> str:
    H = as_binary_matrix(H)
    r, n = H.shape
    return "\n".join([f"{r} {n}"] + [" ".join(map(str, row)) for row in H.tolist()]) + "\n"


def write_alist(H) -> str:
    H = as_binary_matrix(H)
    r, n = H.shape
    cols = [(np.nonzero(H[:, i])[0] + 1).tolist() for i in range(n)]
    rows = [(np.nonzero(H[j])[0] + 1).tolist() for j in range(r)]
    out = [
        f"{n} {r}",
        f"{max(map(len, cols), default=0)} {max(map(len, rows), default=0)}",
        " ".join(str(len(c)) for c in cols),
        " ".join(str(len(x)) for x in rows),
    ]
    # an empty index list is written as a single zero pad
    out += [" ".join(map(str, c)) or "0" for c in cols]
    out += [" ".join(map(str, x)) or "0" for x in rows]
    return "\n".join(line for line in out if line) + "\n"


def matrix_digest(H) -> str:
    """sha256 of the canonical plain-text form, so both formats hash alike."""
    return "sha256:" + hashlib.sha256(write_plain(H).encode()).hexdigest()
