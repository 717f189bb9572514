"""Dictionary matching on run-length encoded text, one text run at a time.

The automaton is the run trie of the multi-run patterns. Nodes whose
strings differ only in the length of their first run form a *group*; a
group shares one failure link (to the longest trie suffix of the common
tail) and, per outgoing run token, a predecessor table keyed by first-run
length. Following a failure link therefore always drops at least one run,
so the traversal does O(1) amortized work per text run no matter how long
the runs are.

Occurrences that end inside the run being read are reported through the
truncate index from the anchor ``anchor[v]``: the id of a longest
truncated pattern that is a suffix of the current node's string.
Single-run patterns are reported from a per-character table sorted by
length.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, NamedTuple, Union

from .predecessor import PredecessorSet
from .rle import EmptyPattern, PatternSet, RleString, Run, decode
from .tries import RleTrie, build_rle_trie
from .truncate import TruncateIndex, build_truncate_index

ROOT = 0


class Occurrence(NamedTuple):
    pattern: int
    start: int


class OccurrenceRange(NamedTuple):
    """``count`` consecutive starts ``start, start + 1, ...`` of one pattern."""

    pattern: int
    start: int
    count: int

    def expand(self) -> Iterator[Occurrence]:
        for s in range(self.start, self.start + self.count):
            yield Occurrence(self.pattern, s)


Record = Union[Occurrence, OccurrenceRange]


class InvariantViolation(AssertionError):
    pass


@dataclass
class SearchCursor:
    node: int = ROOT
    offset: int = 0  # characters of text processed so far
    runs: int = 0
    edge_descents: int = 0
    failure_follows: int = 0
    predecessor_probes: int = 0
    report_queries: int = 0
    catr: dict = field(default_factory=dict)

    def counters(self) -> dict[str, int]:
        return {
            "runs": self.runs,
            "edge_descents": self.edge_descents,
            "failure_follows": self.failure_follows,
            "predecessor_probes": self.predecessor_probes,
            "report_queries": self.report_queries,
        }


class RleDictionary:
    def __init__(self, patterns: PatternSet) -> None:
        if len(patterns) == 0:
            raise EmptyPattern("the pattern set is empty")
        self.patterns = patterns
        self.full_len = {p.id: p.full_len for p in patterns}
        self.last_len = {p.id: p.last_len for p in patterns}

        singles: dict[int, list[tuple[int, int]]] = {}
        for p in patterns:
            if p.run_count == 1:
                singles.setdefault(p.last_char, []).append((p.last_len, p.id))
        for entries in singles.values():
            entries.sort()
        self.singles = singles

        self.trie: RleTrie = build_rle_trie(patterns, multi_run_only=True)
        self.truncate: TruncateIndex = build_truncate_index(patterns)
        self._build_groups()
        self._build_failure()
        self._build_anchors()

    # -- preprocessing ---------------------------------------------------

    def _build_groups(self) -> None:
        trie = self.trie
        n = len(trie)
        self.first_len = [0] * n
        self.group_of = [0] * n
        self.groups: list[list[int]] = [[ROOT]]
        self.group_table: list[dict[Run, PredecessorSet]] = [{}]

        by_char: dict[int, list[tuple[int, int]]] = {}
        for tok, child in trie.children[ROOT].items():
            self.first_len[child] = tok.length
            by_char.setdefault(tok.char, []).append((tok.length, child))
        self.root_table = {c: PredecessorSet(e) for c, e in by_char.items()}

        queue = deque()
        for c in sorted(by_char):
            queue.append([child for _, child in sorted(by_char[c])])
        while queue:
            members = queue.popleft()
            gid = len(self.groups)
            self.groups.append(members)
            edges: dict[Run, list[tuple[int, int]]] = {}
            for v in members:
                self.group_of[v] = gid
                for tok, child in trie.children[v].items():
                    self.first_len[child] = self.first_len[v]
                    edges.setdefault(tok, []).append((self.first_len[v], child))
            self.group_table.append({tok: PredecessorSet(e) for tok, e in edges.items()})
            for tok in sorted(edges):
                queue.append([child for _, child in sorted(edges[tok])])

    def _step(self, v: int, tok: Run, cursor: SearchCursor | None = None) -> int:
        """Longest trie suffix of ``str(v) + tok``, given ``str(v)`` is the
        longest trie suffix of whatever precedes ``tok``."""
        while v != ROOT:
            table = self.group_table[self.group_of[v]].get(tok)
            if cursor is not None:
                cursor.predecessor_probes += 1
            if table is not None:
                hit = table.predecessor(self.first_len[v])
                if hit is not None:
                    if cursor is not None:
                        cursor.edge_descents += 1
                    return hit[1]
            v = self.failure[self.group_of[v]]
            if cursor is not None:
                cursor.failure_follows += 1
        table = self.root_table.get(tok.char)
        if cursor is not None:
            cursor.predecessor_probes += 1
        if table is not None:
            hit = table.predecessor(tok.length)
            if hit is not None:
                if cursor is not None:
                    cursor.edge_descents += 1
                return hit[1]
        return ROOT

    def _build_failure(self) -> None:
        # failure[g]: node spelling the longest trie suffix of the tail shared
        # by group g. Groups are numbered in run-depth order, so the parent's
        # group is always finished first.
        trie = self.trie
        self.failure = [ROOT] * len(self.groups)
        for gid in range(1, len(self.groups)):
            u = self.groups[gid][0]
            parent = trie.parent[u]
            if parent == ROOT:
                continue
            start = self.failure[self.group_of[parent]]
            self.failure[gid] = self._step(start, trie.token[u])

    def _build_anchors(self) -> None:
        trie = self.trie
        seed: dict[int, int] = {}
        for v in range(1, len(trie)):
            if trie.ids[v]:
                p = trie.parent[v]
                seed[p] = min(seed.get(p, min(trie.ids[v])), min(trie.ids[v]))
        anchor = [-1] * len(trie)
        for gid in range(1, len(self.groups)):
            below = anchor[self.failure[gid]]
            for v in self.groups[gid]:  # ascending first-run length
                if v in seed:
                    below = seed[v]
                anchor[v] = below
        self.anchor = anchor

    # -- queries ---------------------------------------------------------

    def failure_of(self, v: int) -> int:
        return self.failure[self.group_of[v]]

    def node_string(self, v: int) -> RleString:
        return self.trie.string(v)

    def search_run(
        self,
        cursor: SearchCursor,
        run: tuple[int, int],
        emit: Callable[[Record], None],
        ranges: bool = False,
    ) -> None:
        alpha, y = run
        offset = cursor.offset
        i = self.anchor[cursor.node]
        if i != -1:
            cursor.report_queries += 1
            for j in self.truncate.query(i, alpha, y, cursor.catr):
                emit(Occurrence(j, offset - self.full_len[j] + self.last_len[j]))
        for x, j in self.singles.get(alpha, ()):
            if x > y:
                break
            if ranges:
                emit(OccurrenceRange(j, offset, y - x + 1))
            else:
                for s in range(offset, offset + y - x + 1):
                    emit(Occurrence(j, s))
        cursor.node = self._step(cursor.node, Run(alpha, y), cursor)
        cursor.offset = offset + y
        cursor.runs += 1

    def search(
        self,
        text: Iterable[tuple[int, int]] | RleString,
        cursor: SearchCursor | None = None,
        ranges: bool = False,
        debug: bool = False,
    ) -> Iterator[Record]:
        """Yield every occurrence in ``text``, run by run.

        ``text`` must be canonical (adjacent runs differ). With ``debug``
        the longest-suffix invariant is checked by brute force after every
        run, which decompresses the text and all trie strings.
        """
        if cursor is None:
            cursor = SearchCursor()
        out: list[Record] = []
        seen: list[int] = []
        for run in text:
            self.search_run(cursor, run, out.append, ranges)
            if debug:
                seen.extend([run[0]] * run[1])
                self._check_longest_suffix(cursor.node, seen)
            yield from out
            out.clear()

    def find_all(self, text: RleString, ranges: bool = False) -> list[Record]:
        return list(self.search(text, ranges=ranges))

    def _check_longest_suffix(self, v: int, seen: list[int]) -> None:
        best, best_len = ROOT, 0
        for u in range(1, len(self.trie)):
            d = self.trie.depth[u]
            if best_len < d <= len(seen) and decode(self.trie.string(u), None) == seen[-d:]:
                best, best_len = u, d
        if best != v:
            raise InvariantViolation(
                f"after {len(seen)} chars: at node {v}, longest suffix is node {best}"
            )


def build_dictionary(patterns: PatternSet) -> RleDictionary:
    return RleDictionary(patterns)
