"""Command-line front end.

Exit codes: 0 success, 1 matcher/oracle mismatch (``check``), 2 input
parse error, 3 expansion limit exceeded.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from contextlib import contextmanager
from dataclasses import fields
from typing import IO, Iterator

from .matcher import Occurrence, OccurrenceRange, SearchCursor, build_dictionary
from .oracle import GenConfig, generate, naive_search
from .rle import (
    DEFAULT_EXPANSION_LIMIT,
    EmptyPattern,
    ExpansionLimitError,
    PatternSet,
    canonicalize,
    decode,
    encode,
)
from .textfmt import FormatError, format_rle, read_strings, stream_runs

EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_LIMIT = 3


@contextmanager
def _open(path: str, mode: str = "r") -> Iterator[IO[str]]:
    if path == "-":
        yield sys.stdin if "r" in mode else sys.stdout
    else:
        with open(path, mode, encoding="utf-8") as fh:
            yield fh


def _load_patterns(path: str, raw: bool) -> PatternSet:
    with _open(path) as fh:
        strings = read_strings(fh, raw)
    for lineno, s in enumerate(strings, start=1):
        if not s.runs:
            raise FormatError(lineno, "empty pattern")
    if not strings:
        raise EmptyPattern("pattern file has no patterns")
    return PatternSet.from_strings(strings)


def _print_counters(counters: dict[str, int]) -> None:
    for key, value in counters.items():
        print(f"{key}\t{value}", file=sys.stderr)


def cmd_encode(args) -> int:
    with _open(args.file) as fh:
        for line in fh:
            print(format_rle(encode(line.rstrip("\n"))))
    return 0


def cmd_decode(args) -> int:
    with _open(args.file) as fh:
        for s in read_strings(fh):
            print("".join(map(chr, decode(s, args.limit))))
    return 0


def cmd_match(args) -> int:
    patterns = _load_patterns(args.patterns, args.raw)
    if args.mode == "oracle":
        with _open(args.text) as fh:
            text = canonicalize(stream_runs(fh, args.raw))
        found = naive_search(patterns, text, args.limit)
        records = sorted(
            (Occurrence(j, s) for (j, s), n in found.items() for _ in range(n)),
            key=lambda r: (r.start, r.pattern),
        )
        for r in records:
            print(f"{r.pattern}\t{r.start}")
        return 0

    dictionary = build_dictionary(patterns)
    cursor = SearchCursor()
    held: list = []
    with _open(args.text) as fh:
        for rec in dictionary.search(stream_runs(fh, args.raw), cursor, ranges=args.ranges):
            if args.sort:
                held.append(rec)
            else:
                _emit(rec)
    if args.sort:
        held.sort(key=lambda r: (r.start, r.pattern))
        for rec in held:
            _emit(rec)
    if args.stats:
        _print_counters(cursor.counters())
    return 0


def _emit(rec) -> None:
    if isinstance(rec, OccurrenceRange):
        print(f"{rec.pattern}\t{rec.start}\t{rec.count}")
    else:
        print(f"{rec.pattern}\t{rec.start}")


def cmd_gen(args) -> int:
    cfg = GenConfig(
        seed=args.seed,
        alphabet=args.alphabet,
        max_patterns=args.max_patterns,
        max_pattern_runs=args.max_pattern_runs,
        max_text_runs=args.max_text_runs,
        max_run_length=args.max_run_length,
        max_pattern_run_length=args.max_pattern_run_length,
    )
    patterns, text = generate(cfg)
    with _open(args.patterns_out, "w") as fh:
        for s in patterns.strings():
            fh.write(format_rle(s) + "\n")
    with _open(args.text_out, "w") as fh:
        fh.write(format_rle(text) + "\n")
    return 0


def cmd_check(args) -> int:
    patterns = _load_patterns(args.patterns, args.raw)
    with _open(args.text) as fh:
        text = canonicalize(stream_runs(fh, args.raw))
    expected = naive_search(patterns, text, args.limit)
    got: Counter = Counter()
    for rec in build_dictionary(patterns).search(text):
        got[tuple(rec)] += 1
    missing = expected - got
    extra = got - expected
    for (j, s), n in sorted(missing.items()):
        print(f"missing\t{j}\t{s}\t{n}")
    for (j, s), n in sorted(extra.items()):
        print(f"extra\t{j}\t{s}\t{n}")
    if missing or extra:
        return EXIT_MISMATCH
    print(f"ok\t{sum(expected.values())} occurrences")
    return 0


def cmd_stats(args) -> int:
    patterns = _load_patterns(args.patterns, args.raw)
    d = build_dictionary(patterns)
    multi = sum(1 for p in patterns if p.run_count > 1)
    print(f"patterns\t{patterns.k}")
    print(f"single_run_patterns\t{patterns.k - multi}")
    print(f"pattern_runs\t{patterns.total_runs}")
    print(f"pattern_chars\t{sum(p.full_len for p in patterns)}")
    print(f"trie_nodes\t{len(d.trie)}")
    print(f"groups\t{len(d.groups)}")
    print(f"truncate_trie_nodes\t{len(d.truncate.nodes)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rlematch", description="Dictionary matching on run-length encoded strings."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def limit_opt(p):
        p.add_argument("--limit", type=int, default=DEFAULT_EXPANSION_LIMIT,
                       help="maximum decompressed length for expanding paths")

    p = sub.add_parser("encode", help="raw lines -> SYM:LEN lines")
    p.add_argument("file")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="SYM:LEN lines -> raw lines")
    p.add_argument("file")
    limit_opt(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("match", help="report pattern occurrences in a text")
    p.add_argument("patterns")
    p.add_argument("text")
    p.add_argument("--raw", action="store_true", help="inputs are literal strings")
    p.add_argument("--sort", action="store_true", help="sort output by (start, id)")
    p.add_argument("--ranges", action="store_true",
                   help="print single-run pattern progressions as ID START COUNT")
    p.add_argument("--stats", action="store_true", help="print counters to stderr")
    p.add_argument("--mode", choices=("index", "oracle"), default="index")
    limit_opt(p)
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("gen", help="write a seeded random instance")
    p.add_argument("patterns_out")
    p.add_argument("text_out")
    p.add_argument("--seed", type=int, default=0)
    defaults = {f.name: f.default for f in fields(GenConfig)}
    for name in ("alphabet", "max_patterns", "max_pattern_runs", "max_text_runs",
                 "max_run_length", "max_pattern_run_length"):
        p.add_argument("--" + name.replace("_", "-"), type=int, default=defaults[name])
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="compare the matcher with the brute-force oracle")
    p.add_argument("patterns")
    p.add_argument("text")
    p.add_argument("--raw", action="store_true")
    limit_opt(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("stats", help="describe the dictionary built from a pattern file")
    p.add_argument("patterns")
    p.add_argument("--raw", action="store_true")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, EmptyPattern) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ExpansionLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
