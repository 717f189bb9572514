"""Dictionary matching directly on run-length encoded patterns and text."""

from .matcher import (
    Occurrence,
    OccurrenceRange,
    RleDictionary,
    SearchCursor,
    build_dictionary,
)
from .rle import PatternSet, RleString, Run, canonicalize, decode, encode, rank_reduce

__all__ = [
    "Occurrence",
    "OccurrenceRange",
    "PatternSet",
    "RleDictionary",
    "RleString",
    "Run",
    "SearchCursor",
    "build_dictionary",
    "canonicalize",
    "decode",
    "encode",
    "rank_reduce",
]
