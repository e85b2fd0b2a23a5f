"""
BMX: a plain-text exact format for band matrices.

    # optional comments anywhere
    bmx <n> <k>
    <i> <j> <value>
    ...

Indices are 1-based; values are integers, ``p/q`` or decimals and are read
exactly. Blank lines are ignored.
"""

import re
from pathlib import Path

from rankkit.domain.matrices.exceptions import InvalidRationalError
from rankkit.domain.matrices.models import BandMatrix
from rankkit.domain.reports.exceptions import ParseError
from rankkit.service_layer.matrices.services import format_rational, from_triplets, parse_rational
from rankkit.shared import BMX_MAGIC

_TOKEN_RE = re.compile(r"\S+")


def _tokens(line: str) -> list[tuple[int, str]]:
    """Tokens of a line with their 1-based columns, comment stripped."""
    body = line.split("#", 1)[0]
    return [(match.start() + 1, match.group()) for match in _TOKEN_RE.finditer(body)]


def _integer(token: str, line: int, column: int, what: str) -> int:
    if not re.fullmatch(r"[+-]?\d+", token):
        raise ParseError(f"Expected integer {what}, got {token!r}", line, column)
    return int(token)


def parse_bmx(text: str) -> BandMatrix:
    """
    Parse a BMX document into a band matrix.

    Args:
        text: Header line followed by one 'i j value' triplet per line

    Returns:
        The matrix, with values read exactly

    Raises:
        ParseError: On a malformed line, with its line and column
        DomainError: On entries out of range, out of band, negative or duplicated
    """
    header: tuple[int, int] | None = None
    triplets = []
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = _tokens(line)
        if not tokens:
            continue
        if header is None:
            if len(tokens) != 3 or tokens[0][1] != BMX_MAGIC:
                raise ParseError(f"Expected header '{BMX_MAGIC} <n> <k>'", number, tokens[0][0])
            n = _integer(tokens[1][1], number, tokens[1][0], "n")
            k = _integer(tokens[2][1], number, tokens[2][0], "k")
            if n < 0 or k < 0:
                raise ParseError("n and k must be nonnegative", number, tokens[1][0])
            header = (n, k)
            continue
        if len(tokens) != 3:
            column = tokens[3][0] if len(tokens) > 3 else len(line) + 1
            raise ParseError(
                f"Expected '<i> <j> <value>', got {len(tokens)} fields", number, column
            )
        i = _integer(tokens[0][1], number, tokens[0][0], "row")
        j = _integer(tokens[1][1], number, tokens[1][0], "column")
        try:
            value = parse_rational(tokens[2][1])
        except InvalidRationalError as exc:
            raise ParseError(exc.message, number, tokens[2][0]) from exc
        triplets.append((i, j, value))

    if header is None:
        raise ParseError(f"Missing '{BMX_MAGIC} <n> <k>' header", 1, 1)
    return from_triplets(header[0], header[1], triplets)


def emit_bmx(matrix: BandMatrix) -> str:
    lines = [f"{BMX_MAGIC} {matrix.n} {matrix.k}"]
    lines.extend(f"{i} {j} {format_rational(value)}" for (i, j), value in matrix.items)
    return "\n".join(lines) + "\n"


def read_bmx(path: Path) -> BandMatrix:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"Cannot read {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8 text") from exc
    return parse_bmx(text)
