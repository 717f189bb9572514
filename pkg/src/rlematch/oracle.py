"""Brute-force reference answers and random instances for differential tests.

Nothing here touches the index structures; everything works on fully
decompressed strings.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

from .rle import (
    DEFAULT_EXPANSION_LIMIT,
    ExpansionLimitError,
    PatternSet,
    RleString,
    canonicalize,
)


def _expand(s: RleString, limit: int | None) -> list[int]:
    if limit is not None and s.total_len > limit:
        raise ExpansionLimitError(f"{s.total_len} characters exceeds limit {limit}")
    out: list[int] = []
    for c, n in s.runs:
        out += [c] * n
    return out


def naive_search(
    patterns: PatternSet | Sequence[RleString],
    text: RleString,
    limit: int | None = DEFAULT_EXPANSION_LIMIT,
) -> Counter:
    """Multiset of ``(pattern id, start)`` by direct comparison at every offset."""
    strings = patterns.strings() if isinstance(patterns, PatternSet) else list(patterns)
    t = _expand(text, limit)
    found: Counter = Counter()
    for pid, p in enumerate(strings, start=1):
        q = _expand(p, limit)
        m = len(q)
        for s in range(len(t) - m + 1):
            if t[s : s + m] == q:
                found[(pid, s)] += 1
    return found


def naive_truncate(patterns: PatternSet, i: int, alpha: int, w: int) -> set[int]:
    """Every ``j`` such that ``P_j`` truncate matches ``P'_i alpha^w``.

    Only patterns with at least two runs take part, mirroring the index.
    """
    target = _expand(patterns[i].truncated, None)
    out = set()
    for p in patterns:
        if p.run_count < 2:
            continue
        tail = _expand(p.truncated, None)
        if (
            p.last_char == alpha
            and p.last_len <= w
            and len(tail) <= len(target)
            and target[len(target) - len(tail) :] == tail
        ):
            out.add(p.id)
    return out


def naive_catr(
    parent: Sequence[int],
    colors: Sequence[Mapping[Hashable, int]],
    v: int,
    c: Hashable,
    w: int,
) -> set[int]:
    """Walk from ``v`` to its root collecting nodes with color ``c`` and weight <= ``w``.

    ``colors[u]`` maps each color of ``u`` to its weight.
    """
    out = set()
    while v >= 0:
        if c in colors[v] and colors[v][c] <= w:
            out.add(v)
        v = parent[v]
    return out


def longest_suffix(strings: Sequence[Sequence[int]], text: Sequence[int]) -> int | None:
    """Index of the longest string in ``strings`` that is a suffix of ``text``."""
    best, best_len = None, -1
    for k, s in enumerate(strings):
        if best_len < len(s) <= len(text) and list(text[len(text) - len(s) :]) == list(s):
            best, best_len = k, len(s)
    return best


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    alphabet: int = 3
    max_patterns: int = 10
    max_pattern_runs: int = 4
    max_text_runs: int = 40
    max_run_length: int = 8
    max_pattern_run_length: int = 6
    planted: float = 0.5  # chance a pattern is cut out of the text

    def __post_init__(self) -> None:
        for name in ("alphabet", "max_patterns", "max_pattern_runs", "max_text_runs",
                     "max_run_length", "max_pattern_run_length"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")


def _random_rle(rng: random.Random, runs: int, alphabet: int, max_len: int) -> RleString:
    # neighbours differ whenever the alphabet allows it, so run lengths stay in bounds
    out = []
    prev = -1
    for _ in range(runs):
        c = rng.randrange(alphabet)
        if c == prev and alphabet > 1:
            c = (c + rng.randrange(1, alphabet)) % alphabet
        out.append((ord("a") + c, rng.randint(1, max_len)))
        prev = c
    return canonicalize(out)


def generate(cfg: GenConfig) -> tuple[PatternSet, RleString]:
    rng = random.Random(cfg.seed)
    text = _random_rle(rng, rng.randint(0, cfg.max_text_runs), cfg.alphabet, cfg.max_run_length)
    pats = []
    for _ in range(rng.randint(1, cfg.max_patterns)):
        nruns = rng.randint(1, cfg.max_pattern_runs)
        if text.runs and rng.random() < cfg.planted:
            lo = rng.randrange(len(text.runs))
            hi = min(len(text.runs), lo + nruns)
            cut = [list(r) for r in text.runs[lo:hi]]
            # trim the outer runs, keep inner runs exact
            cut[0][1] = rng.randint(1, cut[0][1])
            cut[-1][1] = rng.randint(1, cut[-1][1])
            for r in cut:
                r[1] = min(r[1], cfg.max_pattern_run_length)
            pats.append(canonicalize(map(tuple, cut)))
        else:
            pats.append(_random_rle(rng, nruns, cfg.alphabet, cfg.max_pattern_run_length))
    return PatternSet.from_strings(pats), text
