"""Static predecessor sets over integer keys.

A sorted array with binary search. Callers only see ``predecessor`` and
``member``, so a faster structure can replace it without touching them.
"""

from __future__ import annotations

from bisect import bisect_right
from typing import Any, Generic, Iterable, Optional, TypeVar

P = TypeVar("P")


class DuplicateKey(ValueError):
    pass


class PredecessorSet(Generic[P]):
    __slots__ = ("_keys", "_payloads")

    def __init__(self, pairs: Iterable[tuple[int, P]] = ()) -> None:
        items = sorted(pairs, key=lambda kv: kv[0])
        keys = [k for k, _ in items]
        for a, b in zip(keys, keys[1:]):
            if a == b:
                raise DuplicateKey(f"key {a} appears more than once")
        self._keys = keys
        self._payloads = [p for _, p in items]

    def __len__(self) -> int:
        return len(self._keys)

    def __repr__(self) -> str:
        return f"PredecessorSet({list(zip(self._keys, self._payloads))!r})"

    def keys(self) -> list[int]:
        return list(self._keys)

    def predecessor(self, x: int) -> Optional[tuple[int, P]]:
        """Largest stored key ``<= x`` with its payload, or ``None``."""
        i = bisect_right(self._keys, x)
        if i == 0:
            return None
        return self._keys[i - 1], self._payloads[i - 1]

    def member(self, x: int) -> Optional[P]:
        i = bisect_right(self._keys, x)
        if i and self._keys[i - 1] == x:
            return self._payloads[i - 1]
        return None


def build(pairs: Iterable[tuple[int, Any]]) -> PredecessorSet:
    return PredecessorSet(pairs)
