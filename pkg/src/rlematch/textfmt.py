"""Line-oriented text format for run-length encoded strings.

One string per line, whitespace-separated ``SYM:LEN`` tokens. ``SYM`` is a
single printable character or ``#<decimal code point>``; ``LEN`` is a
positive integer. Adjacent equal symbols are merged on read.
"""

from __future__ import annotations

from typing import IO, Iterable, Iterator

from .rle import RleString, Run, canonicalize, encode


class FormatError(ValueError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_token(tok: str) -> tuple[int, int]:
    sym, sep, num = tok.rpartition(":")
    if not sep or not sym:
        raise ValueError(f"bad token {tok!r}, expected SYM:LEN")
    if len(sym) == 1:
        char = ord(sym)
    elif sym[0] == "#" and sym[1:].isdigit():
        char = int(sym[1:])
    else:
        raise ValueError(f"bad symbol {sym!r} in {tok!r}")
    if not num.isdigit():
        raise ValueError(f"bad length in {tok!r}")
    length = int(num)
    if length < 1:
        raise ValueError(f"run length must be positive in {tok!r}")
    return char, length


def parse_line(line: str, lineno: int = 1) -> RleString:
    try:
        return canonicalize(parse_token(t) for t in line.split())
    except ValueError as exc:
        raise FormatError(lineno, str(exc)) from None


def format_symbol(c: int) -> str:
    ch = chr(c)
    if ch.isprintable() and not ch.isspace() and ch != ":":
        return ch
    return f"#{c}"


def format_rle(s: RleString | Iterable[Run]) -> str:
    return " ".join(f"{format_symbol(c)}:{n}" for c, n in s)


def read_strings(fh: IO[str], raw: bool = False) -> list[RleString]:
    out = []
    for lineno, line in enumerate(fh, start=1):
        line = line.rstrip("\n")
        out.append(encode(line) if raw else parse_line(line, lineno))
    return out


def stream_runs(fh: IO[str], raw: bool = False) -> Iterator[tuple[int, int]]:
    """Runs of the concatenation of all lines, merged across line breaks."""
    pending: tuple[int, int] | None = None
    for lineno, line in enumerate(fh, start=1):
        line = line.rstrip("\n")
        runs = encode(line).runs if raw else parse_line(line, lineno).runs
        for c, n in runs:
            if pending is not None and pending[0] == c:
                pending = (c, pending[1] + n)
                continue
            if pending is not None:
                yield pending
            pending = (c, n)
    if pending is not None:
        yield pending
