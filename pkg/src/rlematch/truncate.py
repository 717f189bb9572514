"""Truncate match reporting.

Write each pattern as ``P = P' + alpha^w`` where ``alpha^w`` is its last
run. A query ``(i, alpha, w)`` returns every ``j`` whose truncated string
``P'_j`` is a suffix of ``P'_i``, whose last run uses ``alpha`` and whose
last-run length is at most ``w``.

Suffixes of ``P'_i`` are ancestors of its locus in the compact trie of the
reversed truncated strings, so the query is a colored ancestor threshold
query with last-run characters as colors and last-run lengths as weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catr import CatrIndex
from .rle import PatternSet, RleString
from .tries import CompactTrie, TrieNode, _concat, char_trie
from .treekit import StaticTree


class UnknownPatternId(KeyError):
    pass


@dataclass
class TruncateIndex:
    trie: CompactTrie
    nodes: list[TrieNode]
    locus: dict[int, int]  # pattern id -> node index
    colors: list[dict[int, int]]  # node -> {alpha: min weight}
    lists: list[dict[int, list[tuple[int, int]]]]  # node -> {alpha: [(w, id), ...]}
    catr: CatrIndex = field(repr=False)

    def query(self, i: int, alpha: int, w: int, stats: dict | None = None) -> list[int]:
        """Ids grouped by reported node, ascending weight inside a node."""
        try:
            v = self.locus[i]
        except KeyError:
            raise UnknownPatternId(i) from None
        out: list[int] = []
        steps = 0
        hits = self.catr.query(v, alpha, w, stats)
        for u in hits:
            for wj, j in self.lists[u][alpha]:
                steps += 1
                if wj > w:
                    break
                out.append(j)
        if stats is not None:
            stats["list_steps"] = stats.get("list_steps", 0) + steps
            stats["catr_nodes"] = stats.get("catr_nodes", 0) + len(hits)
        return out

    def reversed_string(self, u: int) -> RleString:
        """The reversed truncated string spelled by node ``u``."""
        label: tuple = ()
        node = self.nodes[u]
        parts = []
        while node is not None:
            parts.append(node.label)
            node = node.parent
        for part in reversed(parts):
            label = _concat(label, part)
        return RleString(label)


def build_truncate_index(patterns: PatternSet) -> TruncateIndex:
    """Index the patterns with at least two runs; single-run ones are skipped."""
    multi = [p for p in patterns if p.run_count >= 2]
    trie = char_trie([p.truncated.reversed() for p in multi], [p.id for p in multi])
    nodes = list(trie.preorder())
    index = {id(n): k for k, n in enumerate(nodes)}
    parent = [-1 if n.parent is None else index[id(n.parent)] for n in nodes]

    by_id = {p.id: p for p in multi}
    locus: dict[int, int] = {}
    lists: list[dict[int, list[tuple[int, int]]]] = [{} for _ in nodes]
    for k, n in enumerate(nodes):
        for pid in n.ids:
            locus[pid] = k
            p = by_id[pid]
            lists[k].setdefault(p.last_char, []).append((p.last_len, pid))
    for per_node in lists:
        for entries in per_node.values():
            entries.sort()
    colors = [{a: entries[0][0] for a, entries in per_node.items()} for per_node in lists]
    catr = CatrIndex(StaticTree(parent), [list(c) for c in colors], colors)
    return TruncateIndex(trie, nodes, locus, colors, lists, catr)
