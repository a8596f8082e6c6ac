"""The ``rdg v1`` text format.

::

    rdg v1
    n <N>
    row <z_rank> <tail_col> <head_col> <+|->
    ...

One ``row`` line per z-rank in ascending order, LF line endings, single
spaces, no trailing whitespace.
"""

from __future__ import annotations

import re

from .diagram import HorizArc, InvalidDiagramError, RectDiagram, require_valid, validate

__all__ = ["ParseError", "parse", "serialize", "read_diagram", "write_diagram"]

MAGIC = "rdg v1"
_INT = re.compile(r"[0-9]+")


class ParseError(ValueError):
    def __init__(self, line: int, col: int, message: str):
        self.line = line
        self.col = col
        self.message = message
        super().__init__(f"line {line}, col {col}: {message}")


def serialize(d: RectDiagram) -> str:
    require_valid(d)
    lines = [MAGIC, f"n {d.n}"]
    for a in d.rows:
        lines.append(f"row {a.z_rank} {a.tail_col} {a.head_col} {'+' if a.sweep > 0 else '-'}")
    return "\n".join(lines) + "\n"


def _fields(text: str, lineno: int) -> list[tuple[int, str]]:
    """Split on single spaces, returning ``(1-based column, token)`` pairs."""
    if text != text.rstrip():
        raise ParseError(lineno, len(text.rstrip()) + 1, "trailing whitespace")
    out = []
    col = 1
    for tok in text.split(" "):
        if tok == "":
            raise ParseError(lineno, col, "expected a single space between fields")
        out.append((col, tok))
        col += len(tok) + 1
    return out


def _int(tok: tuple[int, str], lineno: int, what: str) -> int:
    col, s = tok
    if not _INT.fullmatch(s):
        raise ParseError(lineno, col, f"expected {what} (non-negative integer), got {s!r}")
    return int(s)


def parse(text: str) -> RectDiagram:
    """Parse and validate; raises ``ParseError`` or ``InvalidDiagramError``."""
    if "\r" in text:
        line = text[: text.index("\r")].count("\n") + 1
        raise ParseError(line, 1, "CR characters are not allowed; use LF line endings")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != MAGIC:
        got = lines[0] if lines else ""
        if got.startswith("rdg "):
            raise ParseError(1, 5, f"unsupported version {got[4:]!r}")
        raise ParseError(1, 1, f"expected header {MAGIC!r}")
    if len(lines) < 2:
        raise ParseError(2, 1, "missing 'n <N>' line")
    head = _fields(lines[1], 2)
    if head[0][1] != "n" or len(head) != 2:
        raise ParseError(2, 1, "expected 'n <N>'")
    n = _int(head[1], 2, "grid size")
    if n < 1:
        raise ParseError(2, head[1][0], "grid size must be positive")

    rows: list[HorizArc] = []
    linenos: list[int] = []
    for lineno, line in enumerate(lines[2:], start=3):
        toks = _fields(line, lineno)
        if toks[0][1] != "row":
            raise ParseError(lineno, 1, f"expected 'row', got {toks[0][1]!r}")
        if len(toks) != 5:
            raise ParseError(lineno, 1, f"expected 'row <z_rank> <tail_col> <head_col> <+|->', got {len(toks)} fields")
        z = _int(toks[1], lineno, "z_rank")
        tail = _int(toks[2], lineno, "tail_col")
        head_col = _int(toks[3], lineno, "head_col")
        col, s = toks[4]
        if s not in ("+", "-", "−"):
            raise ParseError(lineno, col, f"expected sweep '+' or '-', got {s!r}")
        rows.append(HorizArc(z, tail, head_col, 1 if s == "+" else -1))
        linenos.append(lineno)

    d = RectDiagram(n, tuple(rows))
    report = validate(d)
    if report.ok:
        return d
    zs = [a.z_rank for a in rows]
    if len(set(zs)) == len(zs) and sorted(zs) == list(range(1, n + 1)) and 4 in report.axioms:
        bad = next(i for i, a in enumerate(rows) if a.z_rank != i + 1)
        raise ParseError(linenos[bad], 5, "rows must be listed in ascending z_rank")
    raise InvalidDiagramError(report)


def read_diagram(path) -> RectDiagram:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse(fh.read())


def write_diagram(d: RectDiagram, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(serialize(d))
