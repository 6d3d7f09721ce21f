"""Plain-text file formats.

Field header::

    field p=2 m=2 modulus=1,1,1

Matrix file (header, then one block)::

    field p=2 m=2 modulus=1,1,1
    rows=2 cols=2
    1,1
    1,2

Code file::

    code n=2
    field p=2 m=2 modulus=1,1,1
    rows=1 cols=2
    1,1

MP spec file: the field header, ``defining`` followed by a matrix block,
then one ``code n=<n>`` line and matrix block per row of the defining
matrix. Blank lines and ``#`` comments are ignored everywhere.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterator

from pydantic import ValidationError

from mpcodes.codes import LinearCode, from_generator
from mpcodes.errors import FormatParseError, InvalidFieldError, MPCodesError
from mpcodes.field import FieldSpec
from mpcodes.matrix import ExactMatrix
from mpcodes.mp import MPCodeSpec

_HEADER_RE = re.compile(r"^field\s+p=(\d+)\s+m=(\d+)\s+modulus=(\d+(?:,\d+)*)$")
_SHAPE_RE = re.compile(r"^rows=(\d+)\s+cols=(\d+)$")
_CODE_RE = re.compile(r"^code\s+n=(\d+)$")
_SELECTOR_RE = re.compile(r"^p=(\d+),\s*m=(\d+)$")


class _Lines:
    """Meaningful lines with their 1-based line numbers."""

    def __init__(self, text: str):
        self._items = [
            (no, line.strip())
            for no, line in enumerate(text.splitlines(), start=1)
            if line.strip() and not line.strip().startswith("#")
        ]
        self._pos = 0
        self._last = len(text.splitlines())

    def peek(self) -> tuple[int, str] | None:
        return self._items[self._pos] if self._pos < len(self._items) else None

    def next(self, expected: str) -> tuple[int, str]:
        item = self.peek()
        if item is None:
            raise FormatParseError(f"unexpected end of input, expected {expected}", self._last)
        self._pos += 1
        return item

    def expect_end(self) -> None:
        item = self.peek()
        if item is not None:
            raise FormatParseError(f"unexpected content {item[1]!r}", item[0])


def _ints(text: str, lineno: int) -> list[int]:
    try:
        return [int(v) for v in text.split(",")]
    except ValueError as exc:
        raise FormatParseError(f"expected comma-separated integers, got {text!r}", lineno) from exc


# =============================================================================
# Field
# =============================================================================


def _header(line: str, lineno: int) -> FieldSpec:
    match = _HEADER_RE.match(line)
    if not match:
        raise FormatParseError(f"expected 'field p=<p> m=<m> modulus=<c0,...>', got {line!r}", lineno)
    p, m = int(match.group(1)), int(match.group(2))
    try:
        return FieldSpec(p=p, m=m, modulus=tuple(_ints(match.group(3), lineno)))
    except ValidationError as exc:
        message = exc.errors()[0].get("msg", str(exc)) if exc.errors() else str(exc)
        raise FormatParseError(f"invalid field: {message}", lineno) from exc


def parse_field_header(text: str) -> FieldSpec:
    lines = _Lines(text)
    lineno, line = lines.next("field header")
    spec = _header(line, lineno)
    lines.expect_end()
    return spec


def format_field_header(spec: FieldSpec) -> str:
    return f"field p={spec.p} m={spec.m} modulus={','.join(str(c) for c in spec.modulus)}"


def parse_field_selector(text: str) -> FieldSpec:
    """CLI field selector: an order such as ``4`` or ``p=3,m=2``."""
    text = text.strip()
    try:
        if text.isdigit():
            return FieldSpec.from_order(int(text))
        match = _SELECTOR_RE.match(text)
        if match:
            return FieldSpec.create(int(match.group(1)), int(match.group(2)))
    except InvalidFieldError as exc:
        raise FormatParseError(f"invalid field {text!r}: {exc}") from exc
    raise FormatParseError(f"field must be an order like 4 or 'p=3,m=2', got {text!r}")


# =============================================================================
# Matrices and codes
# =============================================================================


def _matrix_block(lines: _Lines, spec: FieldSpec) -> ExactMatrix:
    lineno, line = lines.next("'rows=<k> cols=<t>'")
    match = _SHAPE_RE.match(line)
    if not match:
        raise FormatParseError(f"expected 'rows=<k> cols=<t>', got {line!r}", lineno)
    rows, cols = int(match.group(1)), int(match.group(2))
    data = []
    for _ in range(rows):
        lineno, line = lines.next(f"a row of {cols} entries")
        values = _ints(line, lineno)
        if len(values) != cols:
            raise FormatParseError(f"expected {cols} entries, got {len(values)}", lineno)
        if any(v < 0 or v >= spec.order for v in values):
            raise FormatParseError(f"entries must lie in [0, {spec.order})", lineno)
        data.append(values)
    return ExactMatrix.from_rows(spec, data, cols=cols)


def format_matrix(m: ExactMatrix, header: bool = True) -> str:
    lines = [format_field_header(m.spec)] if header else []
    lines.append(f"rows={m.rows} cols={m.cols}")
    lines.extend(",".join(str(v) for v in row) for row in m.to_ints())
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> ExactMatrix:
    lines = _Lines(text)
    lineno, line = lines.next("field header")
    matrix = _matrix_block(lines, _header(line, lineno))
    lines.expect_end()
    return matrix


def _code_block(lines: _Lines, spec: FieldSpec | None) -> LinearCode:
    lineno, line = lines.next("'code n=<n>'")
    match = _CODE_RE.match(line)
    if not match:
        raise FormatParseError(f"expected 'code n=<n>', got {line!r}", lineno)
    n = int(match.group(1))
    if spec is None:
        header_no, header = lines.next("field header")
        spec = _header(header, header_no)
    generator = _matrix_block(lines, spec)
    if generator.cols != n:
        raise FormatParseError(f"generator has {generator.cols} columns, code length is {n}", lineno)
    return from_generator(generator)


def format_code(c: LinearCode, header: bool = True) -> str:
    out = f"code n={c.length}\n"
    return out + format_matrix(c.generator, header=header)


def parse_code(text: str) -> LinearCode:
    lines = _Lines(text)
    code = _code_block(lines, None)
    lines.expect_end()
    return code


# =============================================================================
# MP specs
# =============================================================================


def parse_mp_spec(text: str) -> MPCodeSpec:
    lines = _Lines(text)
    lineno, line = lines.next("field header")
    spec = _header(line, lineno)
    lineno, line = lines.next("'defining'")
    if line != "defining":
        raise FormatParseError(f"expected 'defining', got {line!r}", lineno)
    defining = _matrix_block(lines, spec)
    codes = []
    while lines.peek() is not None:
        codes.append(_code_block(lines, spec))
    if len(codes) != defining.rows:
        raise FormatParseError(
            f"defining matrix has {defining.rows} rows but {len(codes)} code blocks follow",
            lineno,
        )
    try:
        return MPCodeSpec.of(defining, codes)
    except MPCodesError as exc:
        raise FormatParseError(str(exc), lineno) from exc


def format_mp_spec(spec: MPCodeSpec) -> str:
    parts = [format_field_header(spec.spec) + "\n", "defining\n", format_matrix(spec.defining, header=False)]
    parts.extend(format_code(c, header=False) for c in spec.constituents)
    return "".join(parts)


# =============================================================================
# Paths
# =============================================================================


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatParseError(f"cannot read {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise FormatParseError(f"{path} is not UTF-8 text (byte {exc.start})") from exc


def load_matrix(path: str | Path) -> ExactMatrix:
    return parse_matrix(read_text(path))


def load_code(path: str | Path) -> LinearCode:
    return parse_code(read_text(path))


def load_mp_spec(path: str | Path) -> MPCodeSpec:
    return parse_mp_spec(read_text(path))


def dump(text: str, path: str | Path) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    return target


def iter_blocks(text: str) -> Iterator[str]:
    """Split a multi-record file on lines holding only ``---``."""
    block: list[str] = []
    for line in text.splitlines():
        if line.strip() == "---":
            if any(b.strip() for b in block):
                yield "\n".join(block) + "\n"
            block = []
        else:
            block.append(line)
    if any(b.strip() for b in block):
        yield "\n".join(block) + "\n"
