"""Sorting run-length encoded strings and building tries from them.

Two trie flavours live here:

* :class:`CompactTrie` - path-compressed, built left to right from a sorted
  string list. Generic over the token type. :func:`transform_pair_trie`
  turns the compact trie of run-token sequences into the compact trie of
  the decompressed strings, whose locus order is the sorted order of the
  decompressed strings.
* :class:`RleTrie` - the uncompressed trie in which every run is one edge.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Iterable, Iterator, Sequence

from .rle import PatternSet, RleString, Run


class UnsortedInput(ValueError):
    pass


def lcp_tokens(a: Sequence, b: Sequence) -> int:
    n = min(len(a), len(b))
    i = 0
    while i < n and a[i] == b[i]:
        i += 1
    return i


def lcp_rle(a: RleString, b: RleString) -> int:
    """Longest common prefix of the decompressed strings, in characters."""
    total = 0
    for ra, rb in zip(a.runs, b.runs):
        if ra == rb:
            total += ra.length
            continue
        if ra.char == rb.char:
            total += min(ra.length, rb.length)
        break
    return total


def _token_count(label: Sequence) -> int:
    return len(label)


def _char_count(label: Sequence[Run]) -> int:
    return sum(r.length for r in label)


class TrieNode:
    __slots__ = ("parent", "label", "depth", "children", "ids")

    def __init__(self, parent: TrieNode | None, label: tuple, depth: int) -> None:
        self.parent = parent
        self.label = label
        self.depth = depth
        self.children: list[TrieNode] = []
        self.ids: list[int] = []

    def __repr__(self) -> str:
        return f"TrieNode(label={self.label!r}, depth={self.depth}, ids={self.ids})"


class CompactTrie:
    """Compact trie; ``depth`` is measured with ``measure`` (tokens by default)."""

    def __init__(self, measure: Callable[[Sequence], int] = _token_count) -> None:
        self.root = TrieNode(None, (), 0)
        self.measure = measure

    def preorder(self) -> Iterator[TrieNode]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def __len__(self) -> int:
        return sum(1 for _ in self.preorder())

    def loci_order(self) -> list[int]:
        return [i for node in self.preorder() for i in node.ids]

    def locus_map(self) -> dict[int, TrieNode]:
        return {i: node for node in self.preorder() for i in node.ids}

    def path_label(self, node: TrieNode) -> list:
        parts = []
        while node is not None:
            parts.append(node.label)
            node = node.parent
        out: list = []
        for lab in reversed(parts):
            out.extend(lab)
        return out


def build_compact_from_sorted(
    strings: Sequence[Sequence],
    lcps: Sequence[int],
    ids: Sequence[int] | None = None,
    stats: dict | None = None,
) -> CompactTrie:
    """Insert sorted token strings left to right along the rightmost path.

    ``lcps[i]`` is the common-prefix length of ``strings[i]`` and
    ``strings[i + 1]``. Equal strings share one locus. ``stats["visits"]``,
    when given, accumulates pops, splits and label tokens written.
    """
    if ids is None:
        ids = range(len(strings))
    trie = CompactTrie()
    visits = 0
    path = [trie.root]
    prev: Sequence | None = None
    for idx, (s, sid) in enumerate(zip(strings, ids)):
        l = 0 if prev is None else lcps[idx - 1]
        if prev is not None:
            if l > min(len(prev), len(s)):
                raise UnsortedInput(f"lcp {l} longer than string at position {idx}")
            if l < len(prev) and (l == len(s) or not prev[l] < s[l]):
                raise UnsortedInput(f"string at position {idx} breaks sorted order")
        last = None
        while path[-1].depth > l:
            last = path.pop()
            visits += 1
        top = path[-1]
        if top.depth < l:
            cut = l - top.depth
            mid = TrieNode(top, last.label[:cut], l)
            last.label = last.label[cut:]
            last.parent = mid
            top.children[-1] = mid
            mid.children.append(last)
            path.append(mid)
            top = mid
            visits += 1
        if len(s) == l:
            top.ids.append(sid)
        else:
            leaf = TrieNode(top, tuple(s[l:]), len(s))
            leaf.ids.append(sid)
            top.children.append(leaf)
            path.append(leaf)
            visits += len(s) - l
        prev = s
    if stats is not None:
        stats["visits"] = stats.get("visits", 0) + visits
    return trie


def compact_trie(strings: Sequence[Sequence], ids: Sequence[int] | None = None,
                 stats: dict | None = None) -> CompactTrie:
    """Sort token strings (stable) and build their compact trie."""
    order = sorted(range(len(strings)), key=lambda i: (tuple(strings[i]), i))
    ordered = [strings[i] for i in order]
    lcps = [lcp_tokens(a, b) for a, b in zip(ordered, ordered[1:])]
    if stats is not None:
        stats["visits"] = stats.get("visits", 0) + sum(lcps) + len(lcps)
    chosen = [ids[i] for i in order] if ids is not None else order
    return build_compact_from_sorted(ordered, lcps, chosen, stats)


def _concat(a: tuple, b: tuple) -> tuple:
    if a and b and a[-1].char == b[0].char:
        return a[:-1] + (Run(a[-1].char, a[-1].length + b[0].length),) + b[1:]
    return a + b


def _insert_by_char(children: list[TrieNode], node: TrieNode) -> None:
    c = node.label[0].char
    i = len(children)
    while i > 0 and children[i - 1].label[0].char > c:
        i -= 1
    children.insert(i, node)


def transform_pair_trie(pair: CompactTrie) -> CompactTrie:
    """Convert the compact trie of run-token strings into the character trie.

    Sibling edges whose first runs share a character are nested: the longer
    run is re-hung below the shorter one with the residual length, either
    directly (when the shorter edge is a single run) or through a new split
    node. Unary non-locus nodes are then spliced out. ``pair`` is consumed.
    """
    queue = deque([pair.root])
    while queue:
        v = queue.popleft()
        kids = v.children
        j = len(kids) - 1
        while j > 0:
            cur, prev = kids[j], kids[j - 1]
            beta, y_cur = cur.label[0]
            if prev.label[0].char != beta:
                j -= 1
                continue
            y_prev = prev.label[0].length
            cur.label = (Run(beta, y_cur - y_prev),) + cur.label[1:]
            del kids[j]
            if len(prev.label) > 1:
                w = TrieNode(v, (Run(beta, y_prev),), 0)
                prev.label = prev.label[1:]
                prev.parent = w
                cur.parent = w
                w.children = [prev]
                _insert_by_char(w.children, cur)
                kids[j - 1] = w
            else:
                cur.parent = prev
                _insert_by_char(prev.children, cur)
            j -= 1
        queue.extend(kids)

    out = CompactTrie(_char_count)
    # Splice unary non-locus nodes; recompute character depths.
    stack = [pair.root]
    while stack:
        v = stack.pop()
        fixed = []
        for child in v.children:
            while len(child.children) == 1 and not child.ids:
                only = child.children[0]
                only.label = _concat(child.label, only.label)
                child = only
            child.parent = v
            child.depth = v.depth + _char_count(child.label)
            fixed.append(child)
        v.children = fixed
        stack.extend(fixed)
    out.root = pair.root
    return out


def pair_trie(strings: Sequence[RleString], ids: Sequence[int] | None = None,
              stats: dict | None = None) -> CompactTrie:
    return compact_trie([s.runs for s in strings], ids, stats)


def char_trie(strings: Sequence[RleString], ids: Sequence[int] | None = None) -> CompactTrie:
    """Compact trie of the decompressed strings, built without decompressing."""
    return transform_pair_trie(pair_trie(strings, ids))


def sort_rle(strings: Sequence[RleString]) -> list[int]:
    """Permutation sorting ``strings`` by their decompressed text (stable)."""
    return char_trie(strings).loci_order()


class RleTrie:
    """Trie with one edge per run token.

    Node ``0`` is the root. Per node: ``parent``, ``token`` (incoming edge),
    ``children`` (token -> child), ``depth`` (characters), ``run_depth``
    and ``ids`` (patterns ending here).
    """

    def __init__(self) -> None:
        self.parent: list[int] = [-1]
        self.token: list[Run | None] = [None]
        self.children: list[dict[Run, int]] = [{}]
        self.depth: list[int] = [0]
        self.run_depth: list[int] = [0]
        self.ids: list[list[int]] = [[]]

    def __len__(self) -> int:
        return len(self.parent)

    def insert(self, runs: Iterable[Run], pattern_id: int) -> int:
        v = 0
        for tok in runs:
            nxt = self.children[v].get(tok)
            if nxt is None:
                nxt = len(self.parent)
                self.parent.append(v)
                self.token.append(tok)
                self.children.append({})
                self.depth.append(self.depth[v] + tok.length)
                self.run_depth.append(self.run_depth[v] + 1)
                self.ids.append([])
                self.children[v][tok] = nxt
            v = nxt
        self.ids[v].append(pattern_id)
        return v

    def path(self, v: int) -> tuple[Run, ...]:
        toks = []
        while v > 0:
            toks.append(self.token[v])
            v = self.parent[v]
        return tuple(reversed(toks))

    def string(self, v: int) -> RleString:
        return RleString(self.path(v))


def build_rle_trie(patterns: PatternSet, multi_run_only: bool = True) -> RleTrie:
    trie = RleTrie()
    for p in patterns:
        if multi_run_only and p.run_count < 2:
            continue
        trie.insert(p.rle.runs, p.id)
    return trie

