"""Run-length encoded strings.

Symbols are non-negative integer code points, so alphabets larger than a
byte are representable. ``str`` input is accepted everywhere and converted
with :func:`ord`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence, Union

DEFAULT_EXPANSION_LIMIT = 10**6

RawText = Union[str, Sequence[int]]


class RleError(ValueError):
    pass


class NonPositiveRunLength(RleError):
    pass


class ExpansionLimitError(RleError):
    pass


class EmptyPattern(RleError):
    pass


class Run(NamedTuple):
    """A maximal block ``char`` repeated ``length`` times.

    Tuples order lexicographically by ``(char, length)``, which is the pair
    order used when sorting run sequences.
    """

    char: int
    length: int


@dataclass(frozen=True)
class RleString:
    runs: tuple[Run, ...] = ()
    total_len: int = field(default=-1, compare=False)

    def __post_init__(self) -> None:
        if self.total_len < 0:
            object.__setattr__(self, "total_len", sum(r.length for r in self.runs))

    def __len__(self) -> int:
        return len(self.runs)

    def __iter__(self):
        return iter(self.runs)

    def __getitem__(self, i):
        return self.runs[i]

    def reversed(self) -> RleString:
        return RleString(self.runs[::-1], self.total_len)

    def __str__(self) -> str:
        return " ".join(f"{_show(r.char)}^{r.length}" for r in self.runs)


def _show(c: int) -> str:
    ch = chr(c)
    return ch if ch.isprintable() and not ch.isspace() else f"#{c}"


def _symbols(raw: RawText) -> Iterable[int]:
    if isinstance(raw, str):
        return map(ord, raw)
    return raw


def encode(raw: RawText) -> RleString:
    runs: list[Run] = []
    prev = None
    count = 0
    for c in _symbols(raw):
        if c == prev:
            count += 1
            continue
        if prev is not None:
            runs.append(Run(prev, count))
        prev, count = c, 1
    if prev is not None:
        runs.append(Run(prev, count))
    return RleString(tuple(runs))


def decode(s: RleString, limit: int | None = DEFAULT_EXPANSION_LIMIT) -> list[int]:
    """Expand ``s`` into its list of symbols.

    Raises :class:`ExpansionLimitError` when the expansion would exceed
    ``limit`` symbols (``None`` disables the guard).
    """
    if limit is not None and s.total_len > limit:
        raise ExpansionLimitError(
            f"decoded length {s.total_len} exceeds limit {limit}"
        )
    out: list[int] = []
    for c, n in s.runs:
        out.extend([c] * n)
    return out


def decode_str(s: RleString, limit: int | None = DEFAULT_EXPANSION_LIMIT) -> str:
    return "".join(map(chr, decode(s, limit)))


def canonicalize(runs: Iterable[tuple[int, int]]) -> RleString:
    """Merge adjacent equal-symbol runs; reject lengths below 1."""
    out: list[Run] = []
    for c, n in runs:
        if n < 1:
            raise NonPositiveRunLength(f"run ({c}, {n}) has length < 1")
        if out and out[-1].char == c:
            out[-1] = Run(c, out[-1].length + n)
        else:
            out.append(Run(c, n))
    return RleString(tuple(out))


def is_canonical(s: RleString) -> bool:
    runs = s.runs
    return all(r.length >= 1 for r in runs) and all(
        a.char != b.char for a, b in zip(runs, runs[1:])
    )


def rle(shorthand: str) -> RleString:
    """Shorthand constructor: ``rle("a5 b3 a2")``. Used heavily in tests."""
    runs = []
    for tok in shorthand.split():
        runs.append((ord(tok[0]), int(tok[1:])))
    return canonicalize(runs)


@dataclass(frozen=True)
class PatternMeta:
    id: int
    full_len: int
    last_char: int
    last_len: int
    run_count: int
    truncated: RleString
    rle: RleString


@dataclass(frozen=True)
class PatternSet:
    patterns: tuple[PatternMeta, ...]
    total_runs: int
    alphabet_bound: int

    @property
    def k(self) -> int:
        return len(self.patterns)

    def __len__(self) -> int:
        return len(self.patterns)

    def __iter__(self):
        return iter(self.patterns)

    def __getitem__(self, pattern_id: int) -> PatternMeta:
        """Look up by 1-based pattern id."""
        if not 1 <= pattern_id <= len(self.patterns):
            raise KeyError(pattern_id)
        return self.patterns[pattern_id - 1]

    @classmethod
    def from_strings(cls, strings: Iterable[RleString | RawText]) -> PatternSet:
        metas = []
        total = 0
        top = -1
        for idx, s in enumerate(strings, start=1):
            if not isinstance(s, RleString):
                s = encode(s)
            if not s.runs:
                raise EmptyPattern(f"pattern {idx} is empty")
            last = s.runs[-1]
            metas.append(
                PatternMeta(
                    id=idx,
                    full_len=s.total_len,
                    last_char=last.char,
                    last_len=last.length,
                    run_count=len(s.runs),
                    truncated=RleString(s.runs[:-1], s.total_len - last.length),
                    rle=s,
                )
            )
            total += len(s.runs)
            top = max(top, max(r.char for r in s.runs))
        return cls(tuple(metas), total, top + 1)

    def strings(self) -> list[RleString]:
        return [p.rle for p in self.patterns]


TEXT_ONLY = 1
PATTERN_ONLY = 2


@dataclass(frozen=True)
class AlphabetMap:
    text: dict[int, int]
    patterns: dict[int, int]

    @property
    def size(self) -> int:
        return len(set(self.text.values()) | set(self.patterns.values()))


def rank_reduce(
    patterns: PatternSet, text: RleString
) -> tuple[PatternSet, RleString, AlphabetMap]:
    """Shrink the alphabet to at most ``min(runs(text), runs(patterns)) + 2``.

    Symbols seen only in the text collapse to ``TEXT_ONLY``, symbols seen
    only in patterns collapse to ``PATTERN_ONLY``, and shared symbols get
    ``2 + rank`` in sorted order. Cross equality between a text position
    and a pattern position is preserved.
    """
    in_text = {r.char for r in text.runs}
    in_pats = {r.char for p in patterns for r in p.rle.runs}
    shared = sorted(in_text & in_pats)
    rank = {c: 3 + i for i, c in enumerate(shared)}
    tmap = {c: rank.get(c, TEXT_ONLY) for c in in_text}
    pmap = {c: rank.get(c, PATTERN_ONLY) for c in in_pats}
    new_text = canonicalize((tmap[c], n) for c, n in text.runs)
    new_pats = PatternSet.from_strings(
        canonicalize((pmap[c], n) for c, n in p.rle.runs) for p in patterns
    )
    return new_pats, new_text, AlphabetMap(tmap, pmap)
