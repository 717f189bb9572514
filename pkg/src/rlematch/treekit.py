"""Static rooted forests and the ancestor queries built on them.

* level ancestor and ancestor-descendant path minima use binary lifting;
* first colored ancestor uses per-color predecessor search over Euler
  in/out events.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

from .predecessor import PredecessorSet


class DepthOutOfRange(ValueError):
    pass


class NotAncestor(ValueError):
    pass


class StaticTree:
    """A forest given by a parent array (``-1`` marks a root).

    Euler times satisfy ``tin[v] < tin[u] < tout[u] < tout[v]`` exactly
    when ``u`` is a proper descendant of ``v``.
    """

    def __init__(self, parent: Sequence[int]) -> None:
        n = len(parent)
        self.parent = list(parent)
        self.children: list[list[int]] = [[] for _ in range(n)]
        roots = []
        for v, p in enumerate(self.parent):
            if p < 0:
                roots.append(v)
            else:
                self.children[p].append(v)
        self.roots = roots
        self.depth = [0] * n
        self.tin = [0] * n
        self.tout = [0] * n
        self.order: list[int] = []
        clock = 0
        for r in roots:
            stack = [(r, False)]
            while stack:
                v, done = stack.pop()
                if done:
                    self.tout[v] = clock
                    clock += 1
                    continue
                self.tin[v] = clock
                clock += 1
                self.order.append(v)
                stack.append((v, True))
                for c in reversed(self.children[v]):
                    self.depth[c] = self.depth[v] + 1
                    stack.append((c, False))
        if len(self.order) != n:
            raise ValueError("parent array contains a cycle")

        # up[j][v] = 2^j-th ancestor of v, saturating at the root
        up = [[v if p < 0 else p for v, p in enumerate(self.parent)]]
        span = 1
        while span * 2 <= max(self.depth, default=0):
            prev = up[-1]
            up.append([prev[prev[v]] for v in range(n)])
            span *= 2
        self.up = up

    def __len__(self) -> int:
        return len(self.parent)

    def is_ancestor(self, u: int, v: int) -> bool:
        """True when ``u`` is ``v`` or a proper ancestor of it."""
        return self.tin[u] <= self.tin[v] and self.tout[v] <= self.tout[u]

    def level_ancestor(self, v: int, d: int) -> int:
        if not 0 <= d <= self.depth[v]:
            raise DepthOutOfRange(f"depth {d} outside [0, {self.depth[v]}]")
        steps = self.depth[v] - d
        j = 0
        while steps:
            if steps & 1:
                v = self.up[j][v]
            steps >>= 1
            j += 1
        return v


class PathMinIndex:
    """Minimum-weight node on an ancestor-descendant path.

    Ties go to the shallowest node.
    """

    def __init__(self, tree: StaticTree, weights: Sequence[int]) -> None:
        self.tree = tree
        self.weights = list(weights)
        n = len(tree)
        # best[j][v]: argmin over v and its next 2^j - 1 ancestors
        best = [list(range(n))]
        for j in range(1, len(tree.up) + 1):
            prev = best[-1]
            jump = tree.up[j - 1]
            row = []
            for v in range(n):
                a, b = prev[v], prev[jump[v]]
                row.append(self._better(a, b))
            best.append(row)
        self.best = best

    def _better(self, a: int, b: int) -> int:
        wa, wb = self.weights[a], self.weights[b]
        if wa != wb:
            return a if wa < wb else b
        return a if self.tree.depth[a] <= self.tree.depth[b] else b

    def query(self, u: int, v: int) -> int:
        t = self.tree
        if not t.is_ancestor(u, v):
            raise NotAncestor(f"{u} is not an ancestor of {v}")
        count = t.depth[v] - t.depth[u] + 1
        ans = v
        j = 0
        while count:
            if count & 1:
                ans = self._better(ans, self.best[j][v])
                if count == 1:
                    break
                v = t.up[j][v]
            count >>= 1
            j += 1
        return ans


class ColoredAncestorIndex:
    """Nearest inclusive ancestor carrying a given color.

    Per color, a predecessor set over the Euler in/out events of the nodes
    with that color. The latest event at or before ``tin[v]`` is either
    ``in(u)`` with ``u`` an ancestor of ``v`` (answer ``u``) or ``out(u)``
    for a closed subtree, in which case the answer is the nearest colored
    proper ancestor of ``u``, precomputed as ``above``.
    """

    def __init__(self, tree: StaticTree, colors: Sequence[Iterable[Hashable]]) -> None:
        self.tree = tree
        self.colors = [frozenset(cs) for cs in colors]
        self.above = nearest_colored_above(tree, self.colors)
        events: dict[Hashable, list[tuple[int, tuple[bool, int]]]] = {}
        for v in tree.order:
            for c in self.colors[v]:
                bucket = events.setdefault(c, [])
                bucket.append((tree.tin[v], (True, v)))
                bucket.append((tree.tout[v], (False, v)))
        self._events = {c: PredecessorSet(ev) for c, ev in events.items()}

    def query(self, v: int, c: Hashable) -> int | None:
        ev = self._events.get(c)
        if ev is None:
            return None
        hit = ev.predecessor(self.tree.tin[v])
        if hit is None:
            return None
        _, (opening, u) = hit
        if opening:
            return u
        return self.above[u].get(c)


def nearest_colored_above(
    tree: StaticTree, colors: Sequence[Iterable[Hashable]]
) -> list[dict[Hashable, int]]:
    """For each node ``v`` and color ``c`` in ``colors[v]``, the nearest proper
    ancestor of ``v`` that also has ``c`` (absent when there is none)."""
    n = len(tree)
    result: list[dict[Hashable, int]] = [{} for _ in range(n)]
    stacks: dict[Hashable, list[int]] = {}
    for r in tree.roots:
        walk = [(r, False)]
        while walk:
            v, done = walk.pop()
            if done:
                for c in colors[v]:
                    stacks[c].pop()
                continue
            for c in colors[v]:
                st = stacks.setdefault(c, [])
                if st:
                    result[v][c] = st[-1]
                st.append(v)
            walk.append((v, True))
            for ch in reversed(tree.children[v]):
                walk.append((ch, False))
    return result
